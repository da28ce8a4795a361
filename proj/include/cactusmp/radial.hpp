#pragma once

#include "cactusmp/core.hpp"

namespace cactusmp {

struct JoiningPath {
    bool exists = false;
    PathSeq path;  // runs from a vertex of P to a vertex of Q, interior outside both
    int i = 0;     // index of path.front() on P
    int j = 0;     // index of path.back() on Q
};

/// Cycle with up to three pendant isometric arms, assembled from two radial
/// paths and their joining path. Cycle positions are c_0..c_{gamma-1}: the
/// arc c_0..c_m passes through the center (F_2, length m), the rest is the
/// joining path (F_1, length x = gamma - m).
struct HSubgraph {
    int gamma = 0;
    int m = 0;
    int t = -1;  // attachment index of the third arm, -1 when absent
    int k = 0;   // index of the center on the cycle
    int alpha = 0, beta = 0, delta = 0;  // arm lengths at c_0, c_m, c_t
    int x = 0, y = 0, z = 0;  // l(F_1), l(c_0..center), l(center..c_m)
    int g = 0;   // index of the far point of F_1 (midpoint of the far arc)
    std::vector<int> cycle;
    PathSeq p_prime;  // rooted at c_0
    PathSeq q_prime;  // rooted at c_m
    PathSeq r_prime;  // rooted at c_t, empty when absent

    bool in_h(int v) const;
};

/// Shortest path from c to a farthest vertex (distance r = ecc(c)), ties
/// broken by smallest vertex id at every step. Result starts at c.
PathSeq radial_path(const Graph& g, int c, int r);

/// Shortest path from c of length >= r-1 that shares only c with p, found by
/// marking which parent-DAG vertices are reachable while avoiding p. Errors
/// if no such path exists (cannot happen on a connected cactus).
PathSeq disjoint_radial_path(const Graph& g, const PathSeq& p, int c);

/// Shortest connection between p and q that avoids c, trimmed so its
/// interior avoids both paths. On a cactus this connection is unique when it
/// exists; a second disjoint connection raises an error.
JoiningPath joining_path(const Graph& g, const PathSeq& p, const PathSeq& q, int c);

/// Assembles the cycle-with-arms subgraph from two radial paths and their
/// joining path.
HSubgraph build_h(const Graph& g, const PathSeq& p, const PathSeq& q,
                  const JoiningPath& f1);

/// Attaches the third arm: the tail of a shortest path from c_g to u after
/// its last vertex inside the subgraph. That vertex must lie strictly inside
/// the arc c_1..c_{m-1}.
HSubgraph attach_r_path(const Graph& g, const HSubgraph& h, int u);

}  // namespace cactusmp
