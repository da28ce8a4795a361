#pragma once

#include <array>

#include "cactusmp/core.hpp"
#include "cactusmp/rational.hpp"

namespace cactusmp {

/// Result of the exhaustive four-point scan. For every unordered quadruple
/// {u,v,w,x} the three pairing sums d(u,v)+d(w,x), d(u,w)+d(v,x),
/// d(u,x)+d(v,w) are formed; the quadruple's defect is (largest - second
/// largest) and delta is half the maximum defect over all quadruples.
struct DeltaReport {
    Rational delta{0};
    std::array<int, 4> witness{-1, -1, -1, -1};  // lexicographically smallest
    long quadruples_scanned = 0;

    bool has_witness() const { return witness[0] >= 0; }
};

/// Exact hyperbolicity constant via O(n^4) enumeration. Graphs with fewer
/// than four vertices report delta 0 with no witness.
DeltaReport delta_hyperbolicity(const Graph& g);

/// True when the k-th pentagon chain has delta exactly 1/2. Guarded to the
/// sizes the quadruple scan handles comfortably (k <= 3).
bool check_gk_half_hyperbolic(int k);

}  // namespace cactusmp
