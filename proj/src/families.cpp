#include "cactusmp/families.hpp"

namespace cactusmp {

GkInstance gen_gk(int k) {
    if (k < 1) throw GraphError("gen_gk requires k >= 1");
    GkInstance inst;
    inst.k = k;
    int pentagons = 3 * k;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;
    const char* names = "abcde";
    for (int i = 1; i <= pentagons; ++i) {
        int base = 5 * (i - 1);
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(base + j, base + (j + 1) % 5);
            labels[base + j] = std::string(1, names[j]) + std::to_string(i);
        }
    }
    for (int i = 1; i < pentagons; ++i)
        edges.emplace_back(inst.b(i), inst.e(i + 1));
    inst.graph = from_edge_list(5 * pentagons, edges, labels);
    return inst;
}

std::vector<int> gk_canonical_multipacking(int k) {
    if (k < 1) throw GraphError("k >= 1 required");
    std::vector<int> m;
    for (int i = 1; i <= 3 * k; ++i) m.push_back(5 * (i - 1));
    return m;
}

Broadcast gk_optimal_broadcast(int k) {
    if (k < 1) throw GraphError("k >= 1 required");
    Broadcast f;
    for (int i = 2; i <= 3 * k; i += 3) f[5 * (i - 1)] = 4;
    return f;
}

WeightFn gk_fractional_weights(int k) {
    if (k < 1) throw GraphError("k >= 1 required");
    WeightFn w;
    Rational third = rational_from(1, 3);
    for (int i = 1; i <= 3 * k; ++i)
        for (int j = 1; j <= 4; ++j)  // b,c,d,e
            w[5 * (i - 1) + j] = third;
    return w;
}

Graph random_cactus(const RandomCactusParams& params) {
    if (params.n < 1) throw GraphError("random_cactus requires n >= 1");
    if (params.max_cycle_len < 3) throw GraphError("max_cycle_len must be >= 3");
    if (params.cycle_prob_den == 0 || params.cycle_prob_num > params.cycle_prob_den)
        throw GraphError("cycle_prob must be a rational in [0,1]");

    SplitMix64 rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    int cur = 1;
    while (cur < params.n) {
        int v = static_cast<int>(rng.next() % static_cast<std::uint64_t>(cur));
        bool cycle = params.cycle_prob_num > 0 &&
                     (rng.next() % params.cycle_prob_den) < params.cycle_prob_num;
        int fresh = 1;
        if (cycle) {
            int len = 3 + static_cast<int>(
                              rng.next() %
                              static_cast<std::uint64_t>(params.max_cycle_len - 2));
            fresh = std::min(len - 1, params.n - cur);  // truncate at the end
        }
        if (cycle && fresh >= 2) {
            edges.emplace_back(v, cur);
            for (int j = 0; j + 1 < fresh; ++j) edges.emplace_back(cur + j, cur + j + 1);
            edges.emplace_back(cur + fresh - 1, v);
        } else {
            edges.emplace_back(v, cur);
            fresh = 1;
        }
        cur += fresh;
    }
    return from_edge_list(params.n, edges);
}

}  // namespace cactusmp
