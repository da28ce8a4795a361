#include "cactusmp/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "cactusmp/multipack.hpp"

namespace cactusmp {

namespace {

struct BudgetExceeded {};

struct NodeCounter {
    long used = 0;
    long limit = 0;
    void tick() {
        if (++used > limit) throw BudgetExceeded{};
    }
};

std::vector<int> eccentricities_from(const DistMatrix& dm) {
    std::vector<int> ecc(dm.n, 0);
    for (int u = 0; u < dm.n; ++u)
        for (int v = 0; v < dm.n; ++v) ecc[u] = std::max(ecc[u], dm.at(u, v));
    return ecc;
}

// partition into cliques of the distance-2 square; any far-apart set has at
// most one vertex per part, so the part count bounds MP from above
struct SquareCliques {
    std::vector<int> part_of;
    std::vector<int> max_member;
    int count = 0;
};

SquareCliques square_clique_partition(const DistMatrix& dm) {
    SquareCliques sq;
    sq.part_of.assign(dm.n, -1);
    for (int v = 0; v < dm.n; ++v) {
        if (sq.part_of[v] >= 0) continue;
        int cid = sq.count++;
        std::vector<int> members{v};
        sq.part_of[v] = cid;
        sq.max_member.push_back(v);
        for (int u = v + 1; u < dm.n; ++u) {
            if (sq.part_of[u] >= 0) continue;
            bool close = true;
            for (int w : members)
                if (dm.at(u, w) > 2) {
                    close = false;
                    break;
                }
            if (close) {
                sq.part_of[u] = cid;
                members.push_back(u);
                sq.max_member[cid] = u;
            }
        }
    }
    return sq;
}

PathSeq diametral_path(const Graph& g) {
    auto d0 = bfs_distances(g, 0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_distances(g, a);
    int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
    PathSeq path{b};
    int cur = b;
    while (cur != a) {
        for (int w : g.adj[cur])
            if (da[w] == da[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

struct MpSearch {
    const DistMatrix& dm;
    const std::vector<int>& ecc;
    const SquareCliques& sq;
    NodeCounter nodes;
    int n;
    int ub;
    std::vector<std::vector<int>> cnt;  // cnt[u][s] members within distance s
    std::vector<int> chosen;
    std::vector<int> clique_used;
    std::vector<int> best_set;
    int best;
    bool done = false;

    bool can_add(int v) const {
        for (int u = 0; u < n; ++u) {
            int s0 = std::max(1, dm.at(u, v));
            for (int s = s0; s <= ecc[u]; ++s)
                if (cnt[u][s] + 1 > s) return false;
        }
        return true;
    }
    void apply(int v, int delta) {
        for (int u = 0; u < n; ++u) {
            int s0 = std::max(1, dm.at(u, v));
            for (int s = s0; s <= ecc[u]; ++s) cnt[u][s] += delta;
        }
        clique_used[sq.part_of[v]] += delta;
    }

    void dfs(int v) {
        nodes.tick();
        if (done) return;
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
            if (best == ub) {
                done = true;
                return;
            }
        }
        if (v == n) return;
        if (static_cast<int>(chosen.size()) + n - v <= best) return;
        int open = 0;
        for (int cid = 0; cid < sq.count; ++cid)
            if (!clique_used[cid] && sq.max_member[cid] >= v) ++open;
        if (static_cast<int>(chosen.size()) + open <= best) return;

        if (!clique_used[sq.part_of[v]] && can_add(v)) {
            chosen.push_back(v);
            apply(v, 1);
            dfs(v + 1);
            apply(v, -1);
            chosen.pop_back();
            if (done) return;
        }
        dfs(v + 1);
    }
};

}  // namespace

BroadcastCheck verify_broadcast(const Graph& g, const Broadcast& f) {
    require_connected(g);
    auto rep = radius_center(g);
    std::vector<int> heard(g.n, 0);
    for (auto& [v, p] : f) {
        if (v < 0 || v >= g.n) throw GraphError("tower on unknown vertex");
        if (p < 0 || p > rep.diameter)
            throw GraphError("tower power outside [0, diam]");
        if (p == 0) continue;
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < g.n; ++u)
            if (dist[u] <= p) ++heard[u];
    }
    BroadcastCheck res;
    res.dominating = true;
    res.efficient = true;
    for (int u = 0; u < g.n; ++u) {
        if (heard[u] == 0) {
            res.dominating = false;
            res.undominated.push_back(u);
        } else if (heard[u] > 1) {
            res.efficient = false;
        }
    }
    return res;
}

MpResult exact_mp(const Graph& g, const SearchBudget& budget) {
    require_connected(g);
    MpResult res;
    if (g.n == 1) {
        res.lo = res.hi = 1;
        res.witness = {0};
        return res;
    }

    auto dm = all_pairs_distances(g);
    auto ecc = eccentricities_from(dm);
    auto sq = square_clique_partition(dm);
    long lp_floor = floor_long(lp_fractional(g).value);
    int ub = static_cast<int>(std::min<long>(lp_floor, sq.count));

    // greedy far-apart set; valid only if the full verifier agrees
    std::vector<int> greedy;
    for (int v = 0; v < g.n; ++v) {
        bool far = true;
        for (int u : greedy)
            if (dm.at(u, v) <= 2) {
                far = false;
                break;
            }
        if (far) greedy.push_back(v);
    }
    std::vector<int> lb_set;
    if (verify_multipacking(g, greedy).ok) lb_set = greedy;
    auto thirds = every_third(g, diametral_path(g));
    if (thirds.size() > lb_set.size()) lb_set = thirds;

    if (static_cast<int>(lb_set.size()) >= ub) {
        res.lo = res.hi = ub;
        res.witness = lb_set;
        return res;
    }

    MpSearch search{dm, ecc, sq, {0, budget.nodes}, g.n, ub, {}, {}, {}, {}, 0, false};
    search.cnt.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) search.cnt[u].assign(ecc[u] + 1, 0);
    search.clique_used.assign(sq.count, 0);
    search.best = static_cast<int>(lb_set.size());
    search.best_set = lb_set;
    try {
        search.dfs(0);
        res.lo = res.hi = search.best;
    } catch (const BudgetExceeded&) {
        res.status = OracleStatus::Range;
        res.lo = search.best;
        res.hi = ub;
    }
    res.witness = search.best_set;
    return res;
}

namespace {

struct GammaBSearch {
    const Graph& g;
    const DistMatrix& dm;
    const std::vector<Rational>& dual;
    NodeCounter nodes;
    int n;
    std::vector<char> dominated;
    Rational dual_rem;
    Broadcast partial;
    int spent = 0;

    bool run(int target) {
        nodes.tick();
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!dominated[v]) {
                u = v;
                break;
            }
        if (u < 0) return true;
        if (spent >= target) return false;
        for (int t = 0; t < n; ++t) {
            if (partial.count(t)) continue;
            int pmin = std::max(1, dm.at(t, u));
            for (int p = pmin; p <= target - spent; ++p) {
                std::vector<int> fresh;
                for (int w = 0; w < n; ++w)
                    if (!dominated[w] && dm.at(t, w) <= p) {
                        dominated[w] = 1;
                        dual_rem -= dual[w];
                        fresh.push_back(w);
                    }
                partial[t] = p;
                spent += p;
                bool ok = spent + static_cast<int>(ceil_long(dual_rem)) <= target &&
                          run(target);
                if (ok) return true;
                spent -= p;
                partial.erase(t);
                for (int w : fresh) {
                    dominated[w] = 0;
                    dual_rem += dual[w];
                }
            }
        }
        return false;
    }
};

Broadcast greedy_power1_broadcast(const Graph& g) {
    std::vector<char> dominated(g.n, 0);
    Broadcast f;
    for (;;) {
        int best = -1, gain = 0;
        for (int v = 0; v < g.n; ++v) {
            if (f.count(v)) continue;
            int cover = dominated[v] ? 0 : 1;
            for (int w : g.adj[v]) cover += !dominated[w];
            if (cover > gain) {
                gain = cover;
                best = v;
            }
        }
        if (best < 0) break;
        f[best] = 1;
        dominated[best] = 1;
        for (int w : g.adj[best]) dominated[w] = 1;
        if (std::all_of(dominated.begin(), dominated.end(),
                        [](char c) { return c != 0; }))
            break;
    }
    return f;
}

int broadcast_cost(const Broadcast& f) {
    int c = 0;
    for (auto& [v, p] : f) c += p;
    return c;
}

}  // namespace

GammaBResult exact_gamma_b(const Graph& g, const SearchBudget& budget) {
    require_connected(g);
    if (g.n < 2)
        throw GraphError("broadcast domination needs at least two vertices");

    auto sol = lp_fractional(g);
    auto rep = radius_center(g);
    int lb = static_cast<int>(ceil_long(sol.value));

    Broadcast center_tower{{rep.centers.front(), rep.radius}};
    Broadcast greedy = greedy_power1_broadcast(g);
    Broadcast ub_witness = center_tower;
    int ub = rep.radius;
    if (broadcast_cost(greedy) < ub && verify_broadcast(g, greedy).dominating) {
        ub_witness = greedy;
        ub = broadcast_cost(greedy);
    }

    GammaBResult res;
    if (ub == lb) {
        res.lo = res.hi = ub;
        res.witness = ub_witness;
        res.efficient = verify_broadcast(g, res.witness).efficient;
        return res;
    }

    auto dm = all_pairs_distances(g);
    GammaBSearch search{g, dm, sol.y, {0, budget.nodes}, g.n, {}, Rational(0), {}, 0};
    for (int b = lb; b <= ub; ++b) {
        search.dominated.assign(g.n, 0);
        search.dual_rem = sol.value;
        search.partial.clear();
        search.spent = 0;
        bool feasible;
        try {
            feasible = search.run(b);
        } catch (const BudgetExceeded&) {
            res.status = OracleStatus::Range;
            res.lo = b;
            res.hi = ub;
            res.witness = ub_witness;
            res.efficient = verify_broadcast(g, res.witness).efficient;
            return res;
        }
        if (feasible) {
            res.lo = res.hi = b;
            res.witness = search.partial;
            res.efficient = verify_broadcast(g, res.witness).efficient;
            return res;
        }
    }
    res.lo = res.hi = ub;
    res.witness = ub_witness;
    res.efficient = verify_broadcast(g, res.witness).efficient;
    return res;
}

namespace {

struct DomSearch {
    const Graph& g;
    const DistMatrix& dm;
    NodeCounter nodes;
    int n;
    std::vector<int> cover_count;
    std::vector<int> chosen;
    std::vector<int> best_set;
    int best;

    int lower_bound() const {
        // vertices pairwise at distance >= 3 need pairwise distinct dominators
        int lb = 0;
        std::vector<int> picked;
        for (int v = 0; v < n; ++v) {
            if (cover_count[v]) continue;
            bool far = true;
            for (int u : picked)
                if (dm.at(u, v) <= 2) {
                    far = false;
                    break;
                }
            if (far) {
                picked.push_back(v);
                ++lb;
            }
        }
        return lb;
    }

    void apply(int w, int delta) {
        cover_count[w] += delta;
        for (int u : g.adj[w]) cover_count[u] += delta;
    }

    void dfs() {
        nodes.tick();
        // branch on the undominated vertex with the fewest dominators
        int u = -1, udeg = 0;
        for (int v = 0; v < n; ++v)
            if (!cover_count[v] && (u < 0 || degree_plus_one(v) < udeg)) {
                u = v;
                udeg = degree_plus_one(v);
            }
        if (u < 0) {
            if (static_cast<int>(chosen.size()) < best) {
                best = static_cast<int>(chosen.size());
                best_set = chosen;
            }
            return;
        }
        if (static_cast<int>(chosen.size()) + lower_bound() >= best) return;
        std::vector<int> cands{u};
        cands.insert(cands.end(), g.adj[u].begin(), g.adj[u].end());
        // most new coverage first, then smallest id, so good solutions
        // appear early and tighten the bound
        std::vector<std::pair<int, int>> ranked;
        for (int w : cands) {
            int fresh = !cover_count[w];
            for (int x : g.adj[w]) fresh += !cover_count[x];
            ranked.emplace_back(-fresh, w);
        }
        std::sort(ranked.begin(), ranked.end());
        for (auto [neg, w] : ranked) {
            (void)neg;
            chosen.push_back(w);
            apply(w, 1);
            dfs();
            apply(w, -1);
            chosen.pop_back();
        }
    }

    int degree_plus_one(int v) const {
        return static_cast<int>(g.adj[v].size()) + 1;
    }
};

}  // namespace

DominationResult exact_domination(const Graph& g, const SearchBudget& budget) {
    require_connected(g);
    DominationResult res;
    if (g.n == 1) {
        res.lo = res.hi = 1;
        res.witness = {0};
        return res;
    }
    auto dm = all_pairs_distances(g);

    std::vector<int> greedy_set;
    {
        std::vector<char> dominated(g.n, 0);
        for (;;) {
            int best = -1, gain = 0;
            for (int v = 0; v < g.n; ++v) {
                int cover = !dominated[v];
                for (int w : g.adj[v]) cover += !dominated[w];
                if (cover > gain) {
                    gain = cover;
                    best = v;
                }
            }
            if (best < 0) break;
            greedy_set.push_back(best);
            dominated[best] = 1;
            for (int w : g.adj[best]) dominated[w] = 1;
        }
        std::sort(greedy_set.begin(), greedy_set.end());
    }

    DomSearch search{g, dm, {0, budget.nodes}, g.n, {}, {}, greedy_set,
                     static_cast<int>(greedy_set.size())};
    search.cover_count.assign(g.n, 0);
    int root_lb = std::max(1, search.lower_bound());
    try {
        search.dfs();
        res.lo = res.hi = search.best;
    } catch (const BudgetExceeded&) {
        res.status = OracleStatus::Range;
        res.lo = root_lb;
        res.hi = search.best;
    }
    res.witness = search.best_set;
    return res;
}

}  // namespace cactusmp
