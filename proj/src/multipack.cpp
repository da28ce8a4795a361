#include "cactusmp/multipack.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace cactusmp {

MultipackingCheck verify_multipacking(const Graph& g, const std::vector<int>& members) {
    require_connected(g);
    std::vector<char> is_mem(g.n, 0);
    for (int v : members) {
        if (v < 0 || v >= g.n) throw GraphError("multipacking member out of range");
        is_mem[v] = 1;
    }
    MultipackingCheck res;
    std::vector<int> ring;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int u = 0; u < g.n; ++u) ecc = std::max(ecc, dist[u]);
        ring.assign(ecc + 1, 0);
        for (int u = 0; u < g.n; ++u)
            if (is_mem[u]) ++ring[dist[u]];
        int cum = ring[0];
        for (int s = 1; s <= ecc; ++s) {
            cum += ring[s];
            if (cum > s) {
                res.ok = false;
                res.vertex = v;
                res.radius = s;
                res.count = cum;
                return res;
            }
        }
    }
    return res;
}

Multipacking every_third(const Graph& g, const PathSeq& p) {
    if (!is_isometric_path(g, p))
        throw GraphError("every_third requires an isometric path");
    std::set<int> out;
    for (size_t s = 0; s < p.size(); s += 3) out.insert(p[s]);
    return {out.begin(), out.end()};
}

Multipacking choice1(const HSubgraph& h, int a1, int b1) {
    int half = h.gamma / 2;
    if (a1 < 0 || a1 > std::min(h.m - 1, half - 1))
        throw GraphError("choice1: a1 outside its legal range");
    if (b1 < 0 || b1 > std::min(h.gamma - 1 - h.m, half - 1))
        throw GraphError("choice1: b1 outside its legal range");
    std::set<int> out;
    for (int s = 3; s <= h.alpha; s += 3) out.insert(h.p_prime[s]);
    for (int i = 3; i <= a1; i += 3) out.insert(h.cycle[i]);
    for (int s = 3; s <= h.beta; s += 3) out.insert(h.q_prime[s]);
    for (int i = h.m + 3; i <= h.m + b1; i += 3) out.insert(h.cycle[i]);
    return {out.begin(), out.end()};
}

Multipacking choice2(const HSubgraph& h, Side root) {
    const PathSeq& arm = root == Side::C0 ? h.p_prime : h.q_prime;
    int arm_len = static_cast<int>(arm.size()) - 1;
    int anchor = root == Side::C0 ? 0 : h.m;
    std::set<int> out;
    for (int s = 3; s <= arm_len; s += 3) out.insert(arm[s]);
    std::vector<int> pos;
    for (int i = anchor % 3; i < h.gamma; i += 3)
        if (i != anchor) pos.push_back(i);
    // keep cyclic gaps >= 3: the residue class wraps badly when gamma % 3 != 0
    if (pos.size() > 1 && h.gamma - pos.back() + pos.front() < 3) pos.pop_back();
    for (int i : pos) out.insert(h.cycle[i]);
    return {out.begin(), out.end()};
}

Multipacking choice3(const HSubgraph& h, Side root, bool short_tail) {
    if (h.t < 0 || h.r_prime.empty())
        throw GraphError("choice3 requires the third arm");
    int anchor = root == Side::C0 ? 0 : h.m;
    int arc = std::abs(h.t - anchor);
    int dct = std::min(arc, h.gamma - arc);
    int d1 = h.gamma / 2 - dct;
    if (d1 < 0) throw GraphError("choice3: negative tail offset");
    if (h.delta < d1) throw GraphError("choice3: third arm shorter than the offset");
    auto base = choice2(h, root);
    std::set<int> out(base.begin(), base.end());
    int start = d1 + 1 + (short_tail ? 3 : 0);
    for (int i = start; i <= h.delta; i += 3) out.insert(h.r_prime[i]);
    return {out.begin(), out.end()};
}

const char* to_string(BranchTrace::Tag tag) {
    using Tag = BranchTrace::Tag;
    switch (tag) {
        case Tag::TrivialRadius: return "TrivialRadius";
        case Tag::NoJoin: return "NoJoin";
        case Tag::F1AtLeastF2: return "F1AtLeastF2";
        case Tag::SrMeetsP: return "SrMeetsP";
        case Tag::SrMeetsQ: return "SrMeetsQ";
        case Tag::SrMeetsCycle: return "SrMeetsCycle";
        case Tag::SrOutside_xGEalpha: return "SrOutside_xGEalpha";
        case Tag::SrOutside_xGEbeta: return "SrOutside_xGEbeta";
        case Tag::SrOutside_Case1: return "SrOutside_Case1";
        case Tag::SrOutside_Case2_zGEy: return "SrOutside_Case2_zGEy";
        case Tag::SrOutside_Case2_zLTy: return "SrOutside_Case2_zLTy";
        case Tag::FallbackEveryThird: return "FallbackEveryThird";
    }
    return "?";
}

namespace {

int global_bound(int r) {
    int b = (2 * r + 2) / 3 - 4;
    return b < 1 ? 1 : b;
}

PathSeq combined_pq(const PathSeq& p, const PathSeq& q) {
    PathSeq pq(p.rbegin(), p.rend());
    pq.insert(pq.end(), q.begin() + 1, q.end());
    return pq;
}

// arm at c_0, the far arc, arm at c_m; isometric whenever x <= m
PathSeq around_far_arc(const HSubgraph& h) {
    PathSeq path(h.p_prime.rbegin(), h.p_prime.rend());
    for (int i = h.gamma - 1; i >= h.m; --i) path.push_back(h.cycle[i]);
    path.insert(path.end(), h.q_prime.begin() + 1, h.q_prime.end());
    return path;
}

void record_h(BranchTrace& tr, const HSubgraph& h) {
    tr.params["gamma"] = h.gamma;
    tr.params["m"] = h.m;
    tr.params["x"] = h.x;
    tr.params["y"] = h.y;
    tr.params["z"] = h.z;
    tr.params["k"] = h.k;
    tr.params["g"] = h.g;
    tr.params["alpha"] = h.alpha;
    tr.params["beta"] = h.beta;
}

}  // namespace

ApproxResult approx_multipacking(const Graph& g, const ApproxOptions& opts) {
    require_connected(g);
    auto cert = validate_cactus(g);
    if (!cert.is_cactus)
        throw GraphError("approx_multipacking requires a cactus");

    auto rep = radius_center(g);
    int r = rep.radius;
    int c = rep.centers.front();

    ApproxResult res;
    res.radius = r;
    res.guaranteed_lower_bound = global_bound(r);

    bool injected = opts.inject_candidate_failure;
    auto accept = [&](const Multipacking& m) {
        if (injected) {
            injected = false;
            return false;
        }
        if (!opts.verify) return true;
        return verify_multipacking(g, m).ok;
    };
    auto finish = [&](Multipacking set, BranchTrace tr) {
        if (set.empty()) set = {c};
        res.set = std::move(set);
        res.trace = std::move(tr);
        if (opts.verify) {
            auto chk = verify_multipacking(g, res.set);
            if (!chk.ok)
                throw GraphError("internal error: emitted set is not a multipacking");
            res.verified = true;
        }
        return res;
    };

    if (r <= 1) {
        BranchTrace tr;
        tr.tag = BranchTrace::Tag::TrivialRadius;
        tr.params["r"] = r;
        return finish({c}, tr);
    }

    auto p = radial_path(g, c, r);
    auto q = disjoint_radial_path(g, p, c);
    int r2 = static_cast<int>(q.size()) - 1;
    auto f1 = joining_path(g, p, q, c);

    BranchTrace tr;
    tr.params["r"] = r;
    tr.params["r2"] = r2;
    Multipacking cand;
    bool have = false;
    std::optional<HSubgraph> h;

    if (!f1.exists) {
        tr.tag = BranchTrace::Tag::NoJoin;
        cand = every_third(g, combined_pq(p, q));
        have = accept(cand);
    } else {
        h = build_h(g, p, q, f1);
        record_h(tr, *h);
        if (h->x >= h->m) {
            tr.tag = BranchTrace::Tag::F1AtLeastF2;
            cand = every_third(g, combined_pq(p, q));
            have = accept(cand);
        } else {
            int cg = h->cycle[h->g];
            auto dist = bfs_distances(g, cg);
            std::vector<char> in_p(g.n, 0), in_q(g.n, 0), on_cyc(g.n, 0);
            for (int v : h->p_prime) in_p[v] = 1;
            for (int v : h->q_prime) in_q[v] = 1;
            for (int v : h->cycle) on_cyc[v] = 1;
            int hit_p = -1, hit_q = -1, hit_cyc = -1, hit_out = -1;
            for (int v = 0; v < g.n; ++v) {
                if (dist[v] != r) continue;
                if (in_p[v]) {
                    if (hit_p < 0) hit_p = v;
                } else if (in_q[v]) {
                    if (hit_q < 0) hit_q = v;
                } else if (on_cyc[v]) {
                    if (hit_cyc < 0) hit_cyc = v;
                } else if (hit_out < 0) {
                    hit_out = v;
                }
            }
            int half = h->gamma / 2;
            auto clamped_choice1 = [&](int a1, int b1) {
                tr.params["a1_raw"] = a1;
                tr.params["b1_raw"] = b1;
                a1 = std::min({a1, h->m - 1, half - 1});
                b1 = std::min({b1, h->gamma - 1 - h->m, half - 1});
                a1 = std::max(a1, 0);
                b1 = std::max(b1, 0);
                tr.params["a1"] = a1;
                tr.params["b1"] = b1;
                return choice1(*h, a1, b1);
            };
            if (hit_p >= 0) {
                tr.tag = BranchTrace::Tag::SrMeetsP;
                cand = clamped_choice1(h->x - 1, h->z - 1);
                have = accept(cand);
            } else if (hit_q >= 0) {
                tr.tag = BranchTrace::Tag::SrMeetsQ;
                cand = clamped_choice1(h->y - 1, h->x - 1);
                have = accept(cand);
            } else if (hit_cyc >= 0) {
                tr.tag = BranchTrace::Tag::SrMeetsCycle;
                std::set<int> sel;
                for (int s = 0; s < h->gamma / 3; ++s) sel.insert(h->cycle[3 * s]);
                cand.assign(sel.begin(), sel.end());
                have = accept(cand);
            } else {
                h = attach_r_path(g, *h, hit_out);
                tr.params["t"] = h->t;
                tr.params["delta"] = h->delta;
                auto try_choice3 = [&](Side side) {
                    cand = choice3(*h, side, false);
                    have = accept(cand);
                    if (!have) {
                        tr.params["short_tail"] = 1;
                        cand = choice3(*h, side, true);
                        have = accept(cand);
                    }
                };
                if (h->x >= h->alpha) {
                    tr.tag = BranchTrace::Tag::SrOutside_xGEalpha;
                    cand = choice2(*h, Side::Cm);
                    have = accept(cand);
                } else if (h->x >= h->beta) {
                    tr.tag = BranchTrace::Tag::SrOutside_xGEbeta;
                    cand = choice2(*h, Side::C0);
                    have = accept(cand);
                } else if (r <= half + h->x / 2) {
                    tr.tag = BranchTrace::Tag::SrOutside_Case1;
                    cand = choice2(*h, Side::C0);
                    have = accept(cand);
                } else if (h->z >= h->y) {
                    tr.tag = BranchTrace::Tag::SrOutside_Case2_zGEy;
                    int arc = std::min(h->t, h->gamma - h->t);
                    tr.params["delta1"] = half - arc;
                    try_choice3(Side::C0);
                } else {
                    tr.tag = BranchTrace::Tag::SrOutside_Case2_zLTy;
                    int arc = std::min(std::abs(h->t - h->m),
                                       h->gamma - std::abs(h->t - h->m));
                    tr.params["delta2"] = half - arc;
                    try_choice3(Side::Cm);
                }
            }
        }
    }

    if (have) return finish(std::move(cand), std::move(tr));

    // fallback chain: clamped two-arm set, then one-arm set, then plain
    // every-third on the longest isometric path at hand
    tr.tag = BranchTrace::Tag::FallbackEveryThird;
    if (h) {
        int half = h->gamma / 2;
        int a1 = std::max(0, std::min({h->x - 1, h->m - 1, half - 1}));
        int b1 = std::max(0, std::min({h->z - 1, h->gamma - 1 - h->m, half - 1}));
        tr.params["a1"] = a1;
        tr.params["b1"] = b1;
        cand = choice1(*h, a1, b1);
        if (!cand.empty() && accept(cand)) {
            tr.params["fallback_step"] = 1;
            return finish(std::move(cand), std::move(tr));
        }
        cand = choice2(*h, h->alpha >= h->beta ? Side::C0 : Side::Cm);
        if (!cand.empty() && accept(cand)) {
            tr.params["fallback_step"] = 2;
            return finish(std::move(cand), std::move(tr));
        }
    }
    std::vector<PathSeq> paths;
    if (h && h->x < h->m) paths.push_back(around_far_arc(*h));
    if (!h || h->x >= h->m) paths.push_back(combined_pq(p, q));
    paths.push_back(p);
    std::stable_sort(paths.begin(), paths.end(),
                     [](const PathSeq& a, const PathSeq& b) { return a.size() > b.size(); });
    for (const auto& path : paths) {
        try {
            cand = every_third(g, path);
        } catch (const GraphError&) {
            continue;
        }
        if (!cand.empty() && accept(cand)) {
            tr.params["fallback_step"] = 3;
            return finish(std::move(cand), std::move(tr));
        }
    }
    tr.params["fallback_step"] = 4;
    return finish({c}, std::move(tr));
}

}  // namespace cactusmp
