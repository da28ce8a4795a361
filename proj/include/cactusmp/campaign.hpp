#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactusmp/families.hpp"
#include "cactusmp/oracles.hpp"

namespace cactusmp {

struct CampaignConfig {
    std::vector<int> gk;  // pentagon chain sizes to include
    std::vector<RandomCactusParams> random_instances;
    SearchBudget budget{};
    /// 0 = env CACTUS_MP_THREADS, falling back to the hardware count.
    int threads = 0;
};

/// One instance's measurements. Oracle fields are only meaningful when the
/// matching *_known flag is set; budget-exhausted rows stay partial and are
/// never counted as violations.
struct CampaignRow {
    std::string id;
    std::uint64_t seed = 0;
    int n = 0;
    int radius = 0;
    bool mp_known = false;
    int mp = 0;
    bool gamma_b_known = false;
    int gamma_b = 0;
    bool gamma_known = false;
    int gamma = 0;
    Rational mp_f{0};
    int approx_size = 0;
    std::string branch;
    std::vector<std::string> violations;
};

struct CampaignReport {
    std::vector<CampaignRow> rows;
    bool any_ratio = false;
    Rational max_ratio{0};  // max gamma_b/mp over fully solved rows
    int max_gap = 0;        // max gamma_b - mp over fully solved rows
    std::vector<std::string> violations;  // empty on success

    std::string csv() const;
    nlohmann::json to_json() const;
};

/// Runs every oracle and the construction on every instance and checks the
/// bound chain mp <= mp_f <= gamma_b <= min(gamma, radius),
/// 2*gamma_b <= 3*mp + 11, and the construction's guaranteed size, on
/// whatever subset of values is exactly known per row.
CampaignReport run_campaign(const CampaignConfig& config);

struct BenchRow {
    int n = 0;
    double seconds = 0;         // construction only, no verification
    double us_per_vertex = 0;
    double verify_seconds = -1;  // -1 when skipped (large n)
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double growth = 0;  // us_per_vertex, largest size over smallest
    bool linear_ok = false;
};

/// Times the construction on random cacti of the given ascending sizes;
/// growth compares cost per vertex between the extremes.
BenchReport bench_linear(const std::vector<int>& sizes, std::uint64_t seed);

}  // namespace cactusmp
