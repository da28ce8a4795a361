#include "cactusmp/hyperbolicity.hpp"

#include <algorithm>

#include "cactusmp/families.hpp"

namespace cactusmp {

DeltaReport delta_hyperbolicity(const Graph& g) {
    require_connected(g);
    DeltaReport rep;
    if (g.n < 4) return rep;

    auto dm = all_pairs_distances(g);
    int best_gap = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            for (int w = v + 1; w < g.n; ++w)
                for (int x = w + 1; x < g.n; ++x) {
                    ++rep.quadruples_scanned;
                    int s1 = dm.at(u, v) + dm.at(w, x);
                    int s2 = dm.at(u, w) + dm.at(v, x);
                    int s3 = dm.at(u, x) + dm.at(v, w);
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - lo;
                    int gap = hi - mid;
                    if (gap > best_gap) {
                        best_gap = gap;
                        rep.witness = {u, v, w, x};
                    }
                }
    rep.delta = rational_from(best_gap, 2);
    if (best_gap == 0 && rep.quadruples_scanned > 0) rep.witness = {0, 1, 2, 3};
    return rep;
}

bool check_gk_half_hyperbolic(int k) {
    if (k < 1) throw GraphError("pentagon chain index must be positive");
    if (k > 3)
        throw GraphError(
            "quadruple scan guard: pentagon chain check limited to k <= 3");
    auto inst = gen_gk(k);
    return delta_hyperbolicity(inst.graph).delta == rational_from(1, 2);
}

}  // namespace cactusmp
