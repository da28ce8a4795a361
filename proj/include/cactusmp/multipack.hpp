#pragma once

#include <map>
#include <string>

#include "cactusmp/core.hpp"
#include "cactusmp/radial.hpp"

namespace cactusmp {

/// Sorted vertex ids.
using Multipacking = std::vector<int>;

struct MultipackingCheck {
    bool ok = true;
    /// First violated ball constraint, smallest (vertex, radius) first.
    int vertex = -1;
    int radius = 0;
    int count = 0;
};

/// Checks |N_s[v] ∩ members| <= s for every vertex v and 1 <= s <= ecc(v)
/// (constraints at larger s are implied). One BFS per vertex.
MultipackingCheck verify_multipacking(const Graph& g, const std::vector<int>& members);

/// Every third vertex of an isometric path, starting at its first vertex;
/// size ceil(k/3) for k path vertices. Errors when p is not isometric.
Multipacking every_third(const Graph& g, const PathSeq& p);

/// Which pendant arm of an HSubgraph a selection is rooted at.
enum class Side { C0, Cm };

/// Two arms extended into the cycle: every third vertex along the c_0-arm
/// plus cycle positions <= a1, and along the c_m-arm plus positions
/// m..m+b1, excluding the roots themselves.
/// Requires 0 <= a1 <= min(m-1, gamma/2 - 1) and
/// 0 <= b1 <= min(gamma-1-m, gamma/2 - 1).
Multipacking choice1(const HSubgraph& h, int a1, int b1);

/// One arm plus a full every-third residue class around the cycle, root
/// excluded. No preconditions beyond the arm existing.
Multipacking choice2(const HSubgraph& h, Side root);

/// choice2 plus every third vertex of the far end of the third arm. The
/// tail starts at index delta1+1 (delta1 = gamma/2 - cycle distance from the
/// root to the attachment); with short_tail the first member is dropped,
/// which is never needed for the size bound but kept as a defensive
/// alternative for the driver. Requires the third arm and delta >= delta1.
Multipacking choice3(const HSubgraph& h, Side root, bool short_tail = false);

struct BranchTrace {
    enum class Tag {
        TrivialRadius,
        NoJoin,
        F1AtLeastF2,
        SrMeetsP,
        SrMeetsQ,
        SrMeetsCycle,
        SrOutside_xGEalpha,
        SrOutside_xGEbeta,
        SrOutside_Case1,
        SrOutside_Case2_zGEy,
        SrOutside_Case2_zLTy,
        FallbackEveryThird,
    };
    Tag tag = Tag::TrivialRadius;
    std::map<std::string, long> params;
};

const char* to_string(BranchTrace::Tag tag);

struct ApproxOptions {
    bool verify = true;
    /// Test hook: pretend the prescribed candidate failed verification so
    /// the fallback chain runs end to end.
    bool inject_candidate_failure = false;
};

struct ApproxResult {
    Multipacking set;
    BranchTrace trace;
    int radius = 0;
    /// max(1, ceil(2r/3) - 4): the size the construction promises.
    int guaranteed_lower_bound = 0;
    bool verified = false;
};

/// Builds a multipacking of size >= max(1, ceil(2r/3) - 4) on a connected
/// cactus in near-linear time (verification itself costs one BFS per
/// vertex and can be disabled for timing runs).
ApproxResult approx_multipacking(const Graph& g, const ApproxOptions& opts = {});

}  // namespace cactusmp
