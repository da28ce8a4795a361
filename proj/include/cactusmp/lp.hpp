#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cactusmp/core.hpp"
#include "cactusmp/rational.hpp"

namespace cactusmp {

enum class LpStatus { Optimal, InfeasibleGuard };

/// Optimal primal/dual pair for the covering program
///   min { c.x : Ax >= 1, x >= 0 }
/// whose rows are vertices and whose columns are (tower, power) pairs with
/// cost c_(i,k) = k and a_(j,(i,k)) = 1 iff d(i,j) <= k. The dual optimum y
/// is a maximum-weight fractional multipacking; the primal optimum x is a
/// minimum-cost fractional broadcast. Both are exact rationals.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::map<std::pair<int, int>, Rational> x;  // nonzero weights by (vertex, power)
    std::vector<Rational> y;                    // one weight per vertex
};

/// Solves the fractional broadcast/multipacking pair exactly. Powers above
/// rad(g) are dropped: a radius-power tower at a center already covers every
/// vertex, so larger powers never appear in an optimal solution.
/// Requires a connected graph with n >= 2.
LpSolution lp_fractional(const Graph& g);

struct FractionalCheck {
    bool feasible = true;
    Rational value;    // total weight
    int vertex = -1;   // first violated ball, when infeasible
    int radius = 0;
    Rational ball_weight;
};

/// Checks w(N_r[v]) <= r for every vertex v and every 1 <= r <= diam(g).
/// Weights must be non-negative. Reports the lexicographically smallest
/// (vertex, radius) violation.
FractionalCheck verify_fractional_weights(const Graph& g, const WeightFn& w);

}  // namespace cactusmp
