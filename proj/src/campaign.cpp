#include "cactusmp/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "cactusmp/multipack.hpp"

namespace cactusmp {

namespace {

int thread_count(int requested, size_t jobs) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("CACTUS_MP_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return static_cast<int>(std::min<size_t>(t, jobs ? jobs : 1));
}

CampaignRow measure(const std::string& id, std::uint64_t seed, const Graph& g,
                    const SearchBudget& budget) {
    CampaignRow row;
    row.id = id;
    row.seed = seed;
    row.n = g.n;
    auto rep = radius_center(g);
    row.radius = rep.radius;

    auto approx = approx_multipacking(g);
    row.approx_size = static_cast<int>(approx.set.size());
    row.branch = to_string(approx.trace.tag);
    if (!approx.verified)
        row.violations.push_back(id + ": construction output failed verification");
    if (row.approx_size < approx.guaranteed_lower_bound)
        row.violations.push_back(id + ": construction below its guaranteed size");

    row.mp_f = lp_fractional(g).value;

    auto mp = exact_mp(g, budget);
    if (mp.status == OracleStatus::Exact) {
        row.mp_known = true;
        row.mp = mp.value();
        if (Rational(row.mp) > row.mp_f)
            row.violations.push_back(id + ": mp exceeds the fractional optimum");
    }
    if (g.n >= 2) {
        auto gb = exact_gamma_b(g, budget);
        if (gb.status == OracleStatus::Exact) {
            row.gamma_b_known = true;
            row.gamma_b = gb.value();
            if (row.mp_f > Rational(row.gamma_b))
                row.violations.push_back(id +
                                         ": fractional optimum exceeds gamma_b");
            if (row.gamma_b > rep.radius)
                row.violations.push_back(id + ": gamma_b exceeds the radius");
        }
    }
    auto dom = exact_domination(g, budget);
    if (dom.status == OracleStatus::Exact) {
        row.gamma_known = true;
        row.gamma = dom.value();
    }

    if (row.mp_known && row.gamma_b_known) {
        if (row.mp > row.gamma_b)
            row.violations.push_back(id + ": mp exceeds gamma_b");
        if (2 * row.gamma_b > 3 * row.mp + 11)
            row.violations.push_back(id + ": gamma_b above (3/2)mp + 11/2");
    }
    if (row.gamma_b_known && row.gamma_known && row.gamma_b > row.gamma)
        row.violations.push_back(id + ": gamma_b exceeds gamma");
    if (row.mp_known && row.approx_size > row.mp)
        row.violations.push_back(id + ": construction larger than the optimum");
    return row;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
    struct Job {
        std::string id;
        std::uint64_t seed;
        Graph graph;
    };
    std::vector<Job> jobs;
    for (int k : config.gk)
        jobs.push_back({"gk:" + std::to_string(k), 0, gen_gk(k).graph});
    for (const auto& prm : config.random_instances)
        jobs.push_back({"rand:" + std::to_string(prm.seed) + ":n" +
                            std::to_string(prm.n),
                        prm.seed, random_cactus(prm)});

    CampaignReport report;
    report.rows.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            report.rows[i] =
                measure(jobs[i].id, jobs[i].seed, jobs[i].graph, config.budget);
        }
    };
    int nthreads = thread_count(config.threads, jobs.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // aggregate in row order so the report is schedule-independent
    for (const auto& row : report.rows) {
        if (row.mp_known && row.gamma_b_known) {
            Rational ratio = rational_from(row.gamma_b, row.mp);
            if (!report.any_ratio || ratio > report.max_ratio)
                report.max_ratio = ratio;
            report.any_ratio = true;
            report.max_gap = std::max(report.max_gap, row.gamma_b - row.mp);
        }
        for (const auto& v : row.violations) report.violations.push_back(v);
    }
    return report;
}

std::string CampaignReport::csv() const {
    std::ostringstream out;
    out << "id,seed,n,radius,mp_exact,gamma_b_exact,gamma_exact,mp_f,"
           "approx_size,branch,violations\n";
    for (const auto& row : rows) {
        out << row.id << ',' << row.seed << ',' << row.n << ',' << row.radius
            << ',';
        if (row.mp_known) out << row.mp;
        out << ',';
        if (row.gamma_b_known) out << row.gamma_b;
        out << ',';
        if (row.gamma_known) out << row.gamma;
        out << ',' << rational_str(row.mp_f) << ',' << row.approx_size << ','
            << row.branch << ',' << row.violations.size() << '\n';
    }
    return out.str();
}

nlohmann::json CampaignReport::to_json() const {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["id"] = row.id;
        r["seed"] = row.seed;
        r["n"] = row.n;
        r["radius"] = row.radius;
        if (row.mp_known) r["mp_exact"] = row.mp;
        if (row.gamma_b_known) r["gamma_b_exact"] = row.gamma_b;
        if (row.gamma_known) r["gamma_exact"] = row.gamma;
        r["mp_f"] = rational_str(row.mp_f);
        r["approx_size"] = row.approx_size;
        r["branch"] = row.branch;
        if (row.mp_known && row.gamma_b_known)
            r["ratio"] = rational_str(rational_from(row.gamma_b, row.mp));
        r["violations"] = row.violations;
        j["rows"].push_back(r);
    }
    nlohmann::json agg;
    if (any_ratio) {
        agg["max_ratio"] = rational_str(max_ratio);
        agg["max_gap"] = max_gap;
    }
    agg["violations"] = violations;
    j["aggregate"] = agg;
    return j;
}

BenchReport bench_linear(const std::vector<int>& sizes, std::uint64_t seed) {
    BenchReport report;
    for (size_t i = 0; i < sizes.size(); ++i)
        if (i && sizes[i] < sizes[i - 1])
            throw GraphError("bench sizes must be ascending");
    ApproxOptions fast;
    fast.verify = false;
    for (int n : sizes) {
        RandomCactusParams prm;
        prm.n = n;
        prm.seed = seed;
        Graph g = random_cactus(prm);
        double best = -1;
        ApproxResult res;
        for (int rep = 0; rep < 3; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            res = approx_multipacking(g, fast);
            auto t1 = std::chrono::steady_clock::now();
            double sec = std::chrono::duration<double>(t1 - t0).count();
            if (best < 0 || sec < best) best = sec;
        }
        BenchRow row;
        row.n = n;
        row.seconds = best;
        row.us_per_vertex = best * 1e6 / n;
        if (n <= 5000) {
            auto t0 = std::chrono::steady_clock::now();
            auto chk = verify_multipacking(g, res.set);
            auto t1 = std::chrono::steady_clock::now();
            if (!chk.ok) throw GraphError("benchmark output failed verification");
            row.verify_seconds = std::chrono::duration<double>(t1 - t0).count();
        }
        report.rows.push_back(row);
    }
    if (report.rows.size() >= 2) {
        report.growth = report.rows.back().us_per_vertex /
                        report.rows.front().us_per_vertex;
        report.linear_ok = report.growth <= 3.0;
    } else if (!report.rows.empty()) {
        report.growth = 1.0;
        report.linear_ok = true;
    }
    return report;
}

}  // namespace cactusmp
