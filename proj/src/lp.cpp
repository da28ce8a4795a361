#include "cactusmp/lp.hpp"

#include <algorithm>
#include <numeric>

namespace cactusmp {

namespace {

// full-tableau simplex with Bland's rule throughout; exact rationals make
// every pivot lossless, Bland's rule makes cycling impossible
struct Tableau {
    int m = 0;
    int ncols = 0;
    std::vector<std::vector<Rational>> row;
    std::vector<Rational> rhs;
    std::vector<Rational> obj;  // reduced costs of the current basis
    Rational z;                 // objective value of the current basis
    std::vector<int> basis;
    std::vector<char> allowed;

    void pivot(int l, int e) {
        Rational d = row[l][e];
        for (auto& v : row[l]) v /= d;
        rhs[l] /= d;
        for (int i = 0; i < m; ++i) {
            if (i == l) continue;
            Rational f = row[i][e];
            if (f == 0) continue;
            for (int j = 0; j < ncols; ++j) row[i][j] -= f * row[l][j];
            rhs[i] -= f * rhs[l];
        }
        Rational f = obj[e];
        if (f != 0) {
            for (int j = 0; j < ncols; ++j) obj[j] -= f * row[l][j];
            z += f * rhs[l];
        }
        basis[l] = e;
    }

    // one Bland step; false when the current basis is optimal
    bool step() {
        int e = -1;
        for (int j = 0; j < ncols; ++j)
            if (allowed[j] && obj[j] < 0) {
                e = j;
                break;
            }
        if (e < 0) return false;
        int l = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (row[i][e] <= 0) continue;
            Rational ratio = rhs[i] / row[i][e];
            if (l < 0 || ratio < best || (ratio == best && basis[i] < basis[l])) {
                l = i;
                best = ratio;
            }
        }
        if (l < 0) throw GraphError("internal error: LP unbounded");
        pivot(l, e);
        return true;
    }

    void run() {
        while (step()) {
        }
    }
};

}  // namespace

LpSolution lp_fractional(const Graph& g) {
    require_connected(g);
    if (g.n < 2) throw GraphError("fractional program needs at least two vertices");

    auto rep = radius_center(g);
    int n = g.n;
    int rad = rep.radius;
    auto dm = all_pairs_distances(g);

    int nstruct = n * rad;  // column i*rad + (k-1) is the power-k tower at i
    int surplus = nstruct;
    int art = nstruct + n;

    Tableau t;
    t.m = n;
    t.ncols = nstruct + 2 * n;
    t.row.assign(n, std::vector<Rational>(t.ncols, Rational(0)));
    t.rhs.assign(n, Rational(1));
    t.basis.resize(n);
    t.allowed.assign(t.ncols, 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int d = std::max(1, dm.at(i, j));
            for (int k = d; k <= rad; ++k) t.row[j][i * rad + (k - 1)] = 1;
        }
        t.row[j][surplus + j] = -1;
        t.row[j][art + j] = 1;
        t.basis[j] = art + j;
    }

    // phase 1: minimize the artificial total
    t.obj.assign(t.ncols, Rational(0));
    t.z = 0;
    for (int j = 0; j < t.ncols; ++j) {
        if (j >= art) continue;
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += t.row[i][j];
        t.obj[j] = -s;
    }
    for (int i = 0; i < n; ++i) t.z += t.rhs[i];
    t.run();

    LpSolution sol;
    if (t.z != 0) {
        sol.status = LpStatus::InfeasibleGuard;
        return sol;
    }
    for (int i = 0; i < t.m; ++i) {
        if (t.basis[i] < art) continue;
        int e = -1;
        for (int j = 0; j < art && e < 0; ++j)
            if (t.row[i][j] != 0) e = j;
        if (e < 0) throw GraphError("internal error: redundant LP row");
        t.pivot(i, e);
    }
    for (int j = art; j < t.ncols; ++j) t.allowed[j] = 0;

    // phase 2: minimize the broadcast cost
    auto cost = [&](int j) {
        return j < nstruct ? Rational(j % rad + 1) : Rational(0);
    };
    t.obj.assign(t.ncols, Rational(0));
    t.z = 0;
    std::vector<Rational> cb(t.m);
    for (int i = 0; i < t.m; ++i) cb[i] = cost(t.basis[i]);
    for (int j = 0; j < t.ncols; ++j) {
        if (!t.allowed[j]) continue;
        Rational s = cost(j);
        for (int i = 0; i < t.m; ++i) s -= cb[i] * t.row[i][j];
        t.obj[j] = s;
    }
    for (int i = 0; i < t.m; ++i) t.z += cb[i] * t.rhs[i];
    t.run();

    sol.value = t.z;
    sol.y.assign(n, Rational(0));
    for (int j = 0; j < n; ++j) sol.y[j] = t.obj[surplus + j];
    for (int i = 0; i < t.m; ++i) {
        if (t.basis[i] >= nstruct || t.rhs[i] == 0) continue;
        sol.x[{t.basis[i] / rad, t.basis[i] % rad + 1}] = t.rhs[i];
    }

    // independent certificate: primal feasible, dual feasible, equal values
    Rational primal = 0;
    for (auto& [key, w] : sol.x) {
        if (w < 0) throw GraphError("internal error: negative primal weight");
        primal += Rational(key.second) * w;
    }
    if (primal != sol.value) throw GraphError("internal error: primal cost mismatch");
    for (int j = 0; j < n; ++j) {
        Rational covered = 0;
        for (auto& [key, w] : sol.x)
            if (dm.at(key.first, j) <= key.second) covered += w;
        if (covered < 1) throw GraphError("internal error: primal infeasible");
    }
    Rational dual = 0;
    for (int j = 0; j < n; ++j) {
        if (sol.y[j] < 0) throw GraphError("internal error: negative dual weight");
        dual += sol.y[j];
    }
    if (dual != sol.value) throw GraphError("internal error: strong duality violated");
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> by_dist(rad + 1, Rational(0));
        for (int j = 0; j < n; ++j)
            if (dm.at(i, j) <= rad) by_dist[dm.at(i, j)] += sol.y[j];
        Rational ball = by_dist[0];
        for (int k = 1; k <= rad; ++k) {
            ball += by_dist[k];
            if (ball > k) throw GraphError("internal error: dual infeasible");
        }
    }
    if (sol.value > rad) throw GraphError("internal error: LP value above radius");
    return sol;
}

FractionalCheck verify_fractional_weights(const Graph& g, const WeightFn& w) {
    require_connected(g);
    FractionalCheck res;
    res.value = 0;
    std::vector<Rational> weight(g.n, Rational(0));
    for (auto& [v, wt] : w) {
        if (v < 0 || v >= g.n) throw GraphError("weight on unknown vertex");
        if (wt < 0) throw GraphError("negative fractional weight");
        weight[v] = wt;
        res.value += wt;
    }
    auto rep = radius_center(g);
    int diam = rep.diameter;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        std::vector<Rational> ring(diam + 1, Rational(0));
        for (int u = 0; u < g.n; ++u) ring[dist[u]] += weight[u];
        Rational cum = ring[0];
        for (int r = 1; r <= diam; ++r) {
            cum += ring[r];
            if (cum > r) {
                res.feasible = false;
                res.vertex = v;
                res.radius = r;
                res.ball_weight = cum;
                return res;
            }
        }
    }
    return res;
}

}  // namespace cactusmp
