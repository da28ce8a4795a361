#pragma once

#include <cstdint>

#include "cactusmp/core.hpp"
#include "cactusmp/rational.hpp"

namespace cactusmp {

/// Chain of 3k pentagons joined by bridges. Pentagon i (1-based) occupies
/// vertex ids 5(i-1)..5i-1, in the order a,b,c,d,e, with cycle edges
/// (a,b),(b,c),(c,d),(d,e),(e,a); bridge edges join b_i to e_{i+1}.
struct GkInstance {
    int k = 0;
    Graph graph;
    int a(int i) const { return 5 * (i - 1); }
    int b(int i) const { return 5 * (i - 1) + 1; }
    int c(int i) const { return 5 * (i - 1) + 2; }
    int d(int i) const { return 5 * (i - 1) + 3; }
    int e(int i) const { return 5 * (i - 1) + 4; }
};

GkInstance gen_gk(int k);

/// {a_i : i = 1..3k}; a multipacking of maximum size 3k.
std::vector<int> gk_canonical_multipacking(int k);

/// Power 4 on a_i for i = 2, 5, 8, ...; dominating and efficient, cost 4k.
Broadcast gk_optimal_broadcast(int k);

/// Weight 1/3 on b_i, c_i, d_i, e_i for every pentagon; total 4k, which
/// matches the fractional optimum.
WeightFn gk_fractional_weights(int k);

struct RandomCactusParams {
    int n = 1;
    std::uint64_t seed = 0;
    /// Probability of attaching a cycle instead of a pendant edge, num/den.
    std::uint32_t cycle_prob_num = 1;
    std::uint32_t cycle_prob_den = 2;
    int max_cycle_len = 8;
};

/// Seeded growth process: repeatedly pick a uniform existing vertex and
/// attach either a pendant edge or a cycle sharing exactly that vertex,
/// truncating the final cycle so the graph has exactly n vertices.
/// The draw sequence is fixed (see README) so instances are reproducible
/// bit-for-bit from the seed.
Graph random_cactus(const RandomCactusParams& params);

/// splitmix64. The state transition is part of the generator contract.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace cactusmp
