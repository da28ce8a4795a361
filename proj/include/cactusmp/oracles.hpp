#pragma once

#include <vector>

#include "cactusmp/core.hpp"
#include "cactusmp/lp.hpp"

namespace cactusmp {

struct BroadcastCheck {
    bool dominating = false;
    bool efficient = false;        // no vertex hears two towers
    std::vector<int> undominated;  // ascending
};

/// Exact check by BFS from every tower. Powers must lie in [0, diam].
BroadcastCheck verify_broadcast(const Graph& g, const Broadcast& f);

/// Explicit node budget for the exact searches. Exhausting it yields a
/// structured range result, never a silent wrong answer.
struct SearchBudget {
    long nodes = 10'000'000;
};

enum class OracleStatus { Exact, Range };

/// Maximum multipacking. Exact when status == Exact (lo == hi == value);
/// otherwise the optimum lies in [lo, hi] and witness realizes lo.
struct MpResult {
    OracleStatus status = OracleStatus::Exact;
    int lo = 0;
    int hi = 0;
    std::vector<int> witness;
    int value() const { return lo; }
};

MpResult exact_mp(const Graph& g, const SearchBudget& budget = {});

/// Minimum dominating broadcast cost. Exact when status == Exact; on budget
/// exhaustion the optimum lies in [lo, hi] ("unknown above lower bound lo")
/// and witness realizes hi.
struct GammaBResult {
    OracleStatus status = OracleStatus::Exact;
    int lo = 0;
    int hi = 0;
    Broadcast witness;
    bool efficient = false;  // whether the returned witness is efficient
    int value() const { return lo; }
};

GammaBResult exact_gamma_b(const Graph& g, const SearchBudget& budget = {});

/// Minimum dominating set size.
struct DominationResult {
    OracleStatus status = OracleStatus::Exact;
    int lo = 0;
    int hi = 0;
    std::vector<int> witness;
    int value() const { return lo; }
};

DominationResult exact_domination(const Graph& g, const SearchBudget& budget = {});

}  // namespace cactusmp
