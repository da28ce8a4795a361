#include "cactusmp/core.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

namespace cactusmp {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return static_cast<int>(deg / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DisconnectedError::DisconnectedError(std::vector<int> reps)
    : GraphError("graph is disconnected; component representatives: " + [&reps] {
          std::string s;
          for (size_t i = 0; i < reps.size(); ++i) {
              if (i) s += ", ";
              s += std::to_string(reps[i]);
          }
          return s;
      }()),
      component_reps(std::move(reps)) {}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    return from_edge_list(n, edges, {});
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::map<int, std::string>& labels) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    for (const auto& [id, name] : labels) {
        if (id < 0 || id >= n)
            throw GraphError("label for unknown vertex " + std::to_string(id));
        g.labels.emplace(id, name);
    }
    // component scan
    std::vector<char> seen(std::max(n, 1), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        g.component_reps.push_back(s);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    g.connected = g.component_reps.size() <= 1;
    return g;
}

void require_connected(const Graph& g) {
    if (!g.connected) throw DisconnectedError(g.component_reps);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw GraphError("bfs source out of range");
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

DistMatrix all_pairs_distances(const Graph& g) {
    require_connected(g);
    DistMatrix m;
    m.n = g.n;
    m.d.reserve(static_cast<size_t>(g.n) * g.n);
    for (int v = 0; v < g.n; ++v) {
        auto row = bfs_distances(g, v);
        m.d.insert(m.d.end(), row.begin(), row.end());
    }
    return m;
}

bool is_path(const Graph& g, const PathSeq& p) {
    if (p.empty()) return false;
    std::set<int> seen;
    for (int v : p) {
        if (v < 0 || v >= g.n) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

bool is_isometric_path(const Graph& g, const PathSeq& p) {
    if (!is_path(g, p)) return false;
    if (p.size() == 1) return true;
    auto dist = bfs_distances(g, p.front());
    return dist[p.back()] == static_cast<int>(p.size()) - 1;
}

RadiusReport radius_center_bfs(const Graph& g) {
    require_connected(g);
    if (g.n == 0) throw GraphError("empty graph has no radius");
    RadiusReport r;
    r.ecc.resize(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        r.ecc[v] = *std::max_element(dist.begin(), dist.end());
    }
    r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
    r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
    for (int v = 0; v < g.n; ++v)
        if (r.ecc[v] == r.radius) r.centers.push_back(v);
    return r;
}

// --- cactus decomposition ---------------------------------------------------

namespace {

// Biconnected components via an iterative lowpoint DFS with an edge stack.
struct BlockScan {
    std::vector<std::vector<std::pair<int, int>>> block_edges;

    void run(const Graph& g) {
        int n = g.n;
        std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
        std::vector<size_t> it(n, 0);
        std::vector<std::pair<int, int>> estack;
        int timer = 0;
        for (int root = 0; root < n; ++root) {
            if (disc[root] >= 0) continue;
            std::vector<int> vstack{root};
            disc[root] = low[root] = timer++;
            while (!vstack.empty()) {
                int v = vstack.back();
                if (it[v] < g.adj[v].size()) {
                    int w = g.adj[v][it[v]++];
                    if (w == parent[v]) continue;
                    if (disc[w] < 0) {
                        estack.emplace_back(v, w);
                        parent[w] = v;
                        disc[w] = low[w] = timer++;
                        vstack.push_back(w);
                    } else if (disc[w] < disc[v]) {
                        estack.emplace_back(v, w);
                        low[v] = std::min(low[v], disc[w]);
                    }
                } else {
                    vstack.pop_back();
                    int u = parent[v];
                    if (u < 0) continue;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        // everything above and including (u,v) is one block
                        std::vector<std::pair<int, int>> blk;
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e == std::make_pair(u, v)) break;
                        }
                        block_edges.push_back(std::move(blk));
                    }
                }
            }
        }
    }
};

std::vector<int> cycle_order(const std::vector<std::pair<int, int>>& edges) {
    // every vertex of a cycle block has exactly two neighbours inside it
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int start = adj.begin()->first;
    auto& nb = adj[start];
    std::sort(nb.begin(), nb.end());
    std::vector<int> order{start, nb.front()};
    while (true) {
        int prev = order[order.size() - 2], cur = order.back();
        auto& cnb = adj[cur];
        int next = (cnb[0] == prev) ? cnb[1] : cnb[0];
        if (next == start) break;
        order.push_back(next);
    }
    return order;
}

// Two distinct cycles sharing an edge inside a non-cycle biconnected block.
std::vector<std::vector<int>> shared_cycle_witness(
    const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::vector<int>> adj;
    std::set<std::pair<int, int>> eset;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        eset.insert(std::minmax(u, v));
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    // fundamental cycles of a DFS tree
    std::map<int, int> parent, depth;
    int root = adj.begin()->first;
    std::vector<int> st{root};
    parent[root] = -1;
    depth[root] = 0;
    std::set<std::pair<int, int>> tree;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v]) {
            if (!parent.count(w)) {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                tree.insert(std::minmax(v, w));
                st.push_back(w);
            }
        }
    }
    std::vector<std::pair<int, int>> backs;
    for (auto& e : eset)
        if (!tree.count(e)) backs.push_back(e);
    auto fundamental = [&](std::pair<int, int> be) {
        // tree path between the endpoints, via the depth-climb to their LCA
        std::vector<int> left, right;
        int x = be.first, y = be.second;
        while (depth[x] > depth[y]) {
            left.push_back(x);
            x = parent[x];
        }
        while (depth[y] > depth[x]) {
            right.push_back(y);
            y = parent[y];
        }
        while (x != y) {
            left.push_back(x);
            right.push_back(y);
            x = parent[x];
            y = parent[y];
        }
        left.push_back(x);
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;  // closed by the non-tree edge
    };
    auto edge_set = [](const std::vector<int>& cyc) {
        std::set<std::pair<int, int>> es;
        for (size_t i = 0; i < cyc.size(); ++i)
            es.insert(std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]));
        return es;
    };
    std::vector<std::vector<int>> cycles;
    for (auto& be : backs) cycles.push_back(fundamental(be));
    for (size_t i = 0; i < cycles.size(); ++i) {
        auto ei = edge_set(cycles[i]);
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            auto ej = edge_set(cycles[j]);
            for (auto& e : ej)
                if (ei.count(e)) return {cycles[i], cycles[j]};
        }
    }
    // fallback: two paths between the endpoints of some edge
    for (auto [a, b] : eset) {
        auto bfs_avoid = [&](const std::set<int>& blocked) -> std::vector<int> {
            std::map<int, int> par;
            std::deque<int> q{a};
            par[a] = -1;
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int w : adj[v]) {
                    if (v == a && w == b) continue;  // skip the edge itself
                    if (blocked.count(w) && w != b) continue;
                    if (par.count(w)) continue;
                    par[w] = v;
                    if (w == b) {
                        std::vector<int> path;
                        for (int x = b; x >= 0; x = par[x]) path.push_back(x);
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                    q.push_back(w);
                }
            }
            return {};
        };
        auto p1 = bfs_avoid({});
        if (p1.empty()) continue;
        std::set<int> blocked(p1.begin() + 1, p1.end() - 1);
        auto p2 = bfs_avoid(blocked);
        if (!p2.empty()) return {p1, p2};
    }
    return {};
}

}  // namespace

CactusCertificate validate_cactus(const Graph& g) {
    CactusCertificate cert;
    cert.is_cactus = true;
    BlockScan scan;
    scan.run(g);
    for (auto& blk : scan.block_edges) {
        std::set<int> verts;
        for (auto [u, v] : blk) {
            verts.insert(u);
            verts.insert(v);
        }
        Block b;
        if (blk.size() == 1) {
            b.type = Block::Type::Edge;
            b.vertices = {std::min(blk[0].first, blk[0].second),
                          std::max(blk[0].first, blk[0].second)};
        } else if (blk.size() == verts.size()) {
            b.type = Block::Type::Cycle;
            b.vertices = cycle_order(blk);
        } else {
            cert.is_cactus = false;
            if (cert.witness.empty()) cert.witness = shared_cycle_witness(blk);
            continue;
        }
        cert.blocks.push_back(std::move(b));
    }
    std::sort(cert.blocks.begin(), cert.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return cert;
}

// --- near-linear eccentricities on a cactus ---------------------------------

namespace {

// max over j != i of (cycle_dist(i,j) + val[j]), for every position i of a
// cycle of length len; two monotone-deque sweeps over the doubled array.
std::vector<int> cycle_far_values(const std::vector<int>& val) {
    int len = static_cast<int>(val.size());
    int half = len / 2;
    std::vector<int> out(len, 0);
    // window 1: k in [i+1, i+half], term val[k%len] + (k - i)
    // window 2: k in [i+(len+1)/2, i+len-1], term val[k%len] + len - (k - i)
    std::deque<int> d1, d2;
    auto a = [&](int k) { return val[k % len] + k; };
    auto b = [&](int k) { return val[k % len] - k; };
    int lo2 = (len + 1) / 2;
    // prime windows for i = 0
    for (int k = 1; k <= half; ++k) {
        while (!d1.empty() && a(d1.back()) <= a(k)) d1.pop_back();
        d1.push_back(k);
    }
    for (int k = lo2; k <= len - 1; ++k) {
        while (!d2.empty() && b(d2.back()) <= b(k)) d2.pop_back();
        d2.push_back(k);
    }
    for (int i = 0; i < len; ++i) {
        if (i > 0) {
            // slide both windows right by one
            int k1 = i + half;
            while (!d1.empty() && a(d1.back()) <= a(k1)) d1.pop_back();
            d1.push_back(k1);
            while (d1.front() <= i) d1.pop_front();
            int k2 = i + len - 1;
            while (!d2.empty() && b(d2.back()) <= b(k2)) d2.pop_back();
            d2.push_back(k2);
            while (d2.front() < i + lo2) d2.pop_front();
        }
        int best = a(d1.front()) - i;
        if (!d2.empty()) best = std::max(best, b(d2.front()) + len + i);
        out[i] = best;
    }
    return out;
}

RadiusReport cactus_eccentricities(const Graph& g, const CactusCertificate& cert) {
    int n = g.n;
    int nb = static_cast<int>(cert.blocks.size());
    std::vector<std::vector<int>> vblocks(n);
    for (int b = 0; b < nb; ++b)
        for (int v : cert.blocks[b].vertices) vblocks[v].push_back(b);

    // preorder over the block tree rooted at vertex 0
    std::vector<int> border;
    border.reserve(nb);
    std::vector<int> parent_attach(nb, -1);
    std::vector<std::vector<int>> positions(nb);  // attach point first
    std::vector<std::vector<int>> child_blocks(n);
    std::vector<char> seen_b(nb, 0), seen_v(n, 0);
    std::vector<int> vstack{0};
    seen_v[0] = 1;
    while (!vstack.empty()) {
        int v = vstack.back();
        vstack.pop_back();
        for (int b : vblocks[v]) {
            if (seen_b[b]) continue;
            seen_b[b] = 1;
            parent_attach[b] = v;
            border.push_back(b);
            child_blocks[v].push_back(b);
            const auto& verts = cert.blocks[b].vertices;
            auto& pos = positions[b];
            if (cert.blocks[b].type == Block::Type::Edge) {
                pos = {v, verts[0] == v ? verts[1] : verts[0]};
            } else {
                int idx = static_cast<int>(
                    std::find(verts.begin(), verts.end(), v) - verts.begin());
                int len = static_cast<int>(verts.size());
                pos.reserve(len);
                for (int i = 0; i < len; ++i) pos.push_back(verts[(idx + i) % len]);
            }
            for (size_t i = 1; i < pos.size(); ++i) {
                seen_v[pos[i]] = 1;
                vstack.push_back(pos[i]);
            }
        }
    }

    // bottom-up: farthest distance into each vertex's own subtree
    std::vector<int> down(n, 0), down_via(nb, 0);
    for (int i = nb - 1; i >= 0; --i) {
        int b = border[i];
        const auto& pos = positions[b];
        int len = static_cast<int>(pos.size());
        int best = 0;
        if (cert.blocks[b].type == Block::Type::Edge) {
            best = 1 + down[pos[1]];
        } else {
            for (int j = 1; j < len; ++j)
                best = std::max(best, std::min(j, len - j) + down[pos[j]]);
        }
        down_via[b] = best;
        down[parent_attach[b]] = std::max(down[parent_attach[b]], best);
    }

    // top-down: farthest distance leaving the subtree
    std::vector<int> up(n, 0);
    std::vector<std::vector<int>> pre(n), suf(n);  // maxima over sibling blocks
    for (int v = 0; v < n; ++v) {
        const auto& cb = child_blocks[v];
        pre[v].assign(cb.size() + 1, -1);
        suf[v].assign(cb.size() + 1, -1);
        for (size_t i = 0; i < cb.size(); ++i)
            pre[v][i + 1] = std::max(pre[v][i], down_via[cb[i]]);
        for (size_t i = cb.size(); i-- > 0;)
            suf[v][i] = std::max(suf[v][i + 1], down_via[cb[i]]);
    }
    std::vector<int> block_index(nb, 0);
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < child_blocks[v].size(); ++i)
            block_index[child_blocks[v][i]] = static_cast<int>(i);
    for (int b : border) {
        int p = parent_attach[b];
        int idx = block_index[b];
        int others = std::max(pre[p][idx], suf[p][idx + 1]);
        int ext = std::max(up[p], std::max(others, 0));
        const auto& pos = positions[b];
        if (cert.blocks[b].type == Block::Type::Edge) {
            up[pos[1]] = 1 + ext;
        } else {
            std::vector<int> val(pos.size());
            val[0] = ext;
            for (size_t i = 1; i < pos.size(); ++i) val[i] = down[pos[i]];
            auto far = cycle_far_values(val);
            for (size_t i = 1; i < pos.size(); ++i) up[pos[i]] = far[i];
        }
    }

    RadiusReport r;
    r.ecc.resize(n);
    for (int v = 0; v < n; ++v) r.ecc[v] = std::max(down[v], up[v]);
    r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
    r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
    for (int v = 0; v < n; ++v)
        if (r.ecc[v] == r.radius) r.centers.push_back(v);
    return r;
}

}  // namespace

RadiusReport radius_center(const Graph& g) {
    require_connected(g);
    if (g.n == 0) throw GraphError("empty graph has no radius");
    if (g.n == 1) {
        RadiusReport r;
        r.centers = {0};
        r.ecc = {0};
        return r;
    }
    auto cert = validate_cactus(g);
    if (!cert.is_cactus) return radius_center_bfs(g);
    return cactus_eccentricities(g, cert);
}

}  // namespace cactusmp
