#include "cactusmp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cactusmp/campaign.hpp"
#include "cactusmp/io.hpp"

namespace cactusmp {

namespace {

using nlohmann::json;

/// Thrown when a checked object or bound fails: mapped to exit code 2.
struct ViolationExit {
    std::string output;
    std::string path;  // honor -o even on failure
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path);
    out << text;
}

std::string jdump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw GraphError("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw GraphError(path + ": " + e.what());
    }
}

std::vector<int> int_set_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw GraphError(what + " must be a JSON array of ids");
    std::vector<int> out;
    for (auto& e : j) {
        if (!e.is_number_integer())
            throw GraphError(what + " must be a JSON array of ids");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected comma-separated integers");
        }
    }
    if (out.empty())
        throw CLI::ValidationError(flag, "expected comma-separated integers");
    return out;
}

std::pair<long, long> parse_seed_range(const std::string& s) {
    size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long a = std::stol(s.substr(0, dots));
        long b = std::stol(s.substr(dots + 2));
        if (a > b) throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seeds", "expected S or A..B");
    }
}

std::pair<std::uint32_t, std::uint32_t> parse_prob(const std::string& s) {
    Rational q;
    try {
        q = parse_rational(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--cycle-prob", "expected a fraction p/q");
    }
    if (q < 0 || q > 1)
        throw CLI::ValidationError("--cycle-prob", "must lie in [0, 1]");
    return {static_cast<std::uint32_t>(q.get_num().get_ui()),
            static_cast<std::uint32_t>(q.get_den().get_ui())};
}

json certificate_to_json(const CactusCertificate& cert) {
    json j;
    j["is_cactus"] = cert.is_cactus;
    j["blocks"] = json::array();
    for (const auto& blk : cert.blocks) {
        json b;
        b["type"] = blk.type == Block::Type::Cycle ? "cycle" : "edge";
        b["vertices"] = blk.vertices;
        j["blocks"].push_back(b);
    }
    if (!cert.is_cactus) j["witness"] = cert.witness;
    return j;
}

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "json") return jdump(graph_to_json(g));
    if (format == "edgelist") return write_edge_list_text(g);
    if (format == "dot") return export_dot(g);
    throw CLI::ValidationError("--format", "expected json, edgelist or dot");
}

struct CampaignArgs {
    std::string gk_list;
    std::string seeds;
    int n = 20;
    std::string cycle_prob = "1/2";
    int max_cycle_len = 8;
    long budget = SearchBudget{}.nodes;
    int threads = 0;
    long timeout_rows = -1;
    std::string format = "json";
    std::string output;
};

int run_campaign_cmd(const CampaignArgs& args) {
    CampaignConfig cfg;
    if (!args.gk_list.empty()) cfg.gk = parse_int_list(args.gk_list, "--gk");
    if (!args.seeds.empty()) {
        auto [lo, hi] = parse_seed_range(args.seeds);
        auto [num, den] = parse_prob(args.cycle_prob);
        for (long s = lo; s <= hi; ++s) {
            RandomCactusParams prm;
            prm.n = args.n;
            prm.seed = static_cast<std::uint64_t>(s);
            prm.cycle_prob_num = num;
            prm.cycle_prob_den = den;
            prm.max_cycle_len = args.max_cycle_len;
            cfg.random_instances.push_back(prm);
        }
    }
    if (cfg.gk.empty() && cfg.random_instances.empty())
        throw CLI::ValidationError("campaign", "needs --gk and/or --seeds");
    cfg.budget.nodes = args.budget;
    cfg.threads = args.threads;

    auto report = run_campaign(cfg);
    std::string text;
    if (args.format == "csv")
        text = report.csv();
    else if (args.format == "json")
        text = jdump(report.to_json());
    else
        throw CLI::ValidationError("--format", "expected json or csv");
    if (!report.violations.empty()) throw ViolationExit{text, args.output};
    emit(text, args.output);
    if (args.timeout_rows >= 0) {
        long partial = 0;
        for (const auto& row : report.rows)
            if (!row.mp_known || !row.gamma_b_known || !row.gamma_known)
                ++partial;
        if (partial > args.timeout_rows)
            throw GraphError(std::to_string(partial) +
                             " partial rows exceed --timeout-rows " +
                             std::to_string(args.timeout_rows));
    }
    return 0;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"multipacking and broadcast domination toolkit for cacti"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    app.add_option("-o,--output", output, "write to a file instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph")->fallthrough();
    gen->require_subcommand(1);
    auto* gen_gk_cmd = gen->add_subcommand("gk", "pentagon chain")->fallthrough();
    int gk_k = 1;
    std::string gen_format = "json";
    gen_gk_cmd->add_option("--k", gk_k, "number of pentagon triples")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    gen_gk_cmd->add_option("--format", gen_format, "json|edgelist|dot");
    auto* gen_rand = gen->add_subcommand("random", "seeded random cactus")->fallthrough();
    int rand_n = 0;
    std::uint64_t rand_seed = 0;
    std::string rand_prob = "1/2";
    int rand_maxlen = 8;
    gen_rand->add_option("--n", rand_n, "vertex count")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    gen_rand->add_option("--seed", rand_seed, "generator seed");
    gen_rand->add_option("--cycle-prob", rand_prob, "cycle probability p/q");
    gen_rand->add_option("--max-cycle-len", rand_maxlen, "largest cycle length")
        ->check(CLI::Range(3, 1 << 20));
    gen_rand->add_option("--format", gen_format, "json|edgelist|dot");

    // graph-consuming commands; every <graph> defaults to stdin ("-")
    std::string graph_path = "-";
    auto add_graph_arg = [&graph_path](CLI::App* cmd) {
        cmd->add_option("graph", graph_path,
                        "graph file (json or edge list), - for stdin");
    };

    auto* validate = app.add_subcommand("validate", "cactus certificate")->fallthrough();
    add_graph_arg(validate);
    auto* stats = app.add_subcommand("stats", "radius, diameter, centers")->fallthrough();
    add_graph_arg(stats);

    auto* approx = app.add_subcommand("approx", "multipacking construction")->fallthrough();
    add_graph_arg(approx);
    bool no_verify = false;
    approx->add_flag("--no-verify", no_verify, "skip output verification");

    auto* exact = app.add_subcommand("exact", "exact oracles")->fallthrough();
    exact->require_subcommand(1);
    long budget = SearchBudget{}.nodes;
    auto* exact_mp_cmd = exact->add_subcommand("mp", "maximum multipacking")->fallthrough();
    auto* exact_gb_cmd =
        exact->add_subcommand("gb", "minimum dominating broadcast")->fallthrough();
    auto* exact_dom_cmd = exact->add_subcommand("dom", "minimum dominating set")->fallthrough();
    for (auto* cmd : {exact_mp_cmd, exact_gb_cmd, exact_dom_cmd}) {
        add_graph_arg(cmd);
        cmd->add_option("--budget", budget, "search node budget");
    }

    auto* lp = app.add_subcommand("lp", "fractional relaxation, exact rationals")->fallthrough();
    add_graph_arg(lp);

    auto* weights = app.add_subcommand("weights-check", "fractional weights")->fallthrough();
    add_graph_arg(weights);
    std::string weights_path;
    weights->add_option("--weights", weights_path, "JSON {\"vertex\": \"p/q\"}")
        ->required();

    auto* hyper = app.add_subcommand("hyperbolicity", "four point delta")->fallthrough();
    add_graph_arg(hyper);

    auto* verify = app.add_subcommand("verify", "check a certificate")->fallthrough();
    verify->require_subcommand(1);
    auto* verify_mp = verify->add_subcommand("mp", "multipacking check")->fallthrough();
    add_graph_arg(verify_mp);
    std::string set_path;
    verify_mp->add_option("--set", set_path, "JSON array of vertex ids")
        ->required();
    auto* verify_bc = verify->add_subcommand("broadcast", "domination check")->fallthrough();
    add_graph_arg(verify_bc);
    std::string broadcast_path;
    verify_bc
        ->add_option("--broadcast", broadcast_path,
                     "JSON [[vertex, power], ...]")
        ->required();

    CampaignArgs cargs;
    auto* campaign = app.add_subcommand("campaign", "bound-checking sweep")->fallthrough();
    campaign->add_option("--gk", cargs.gk_list, "pentagon sizes, e.g. 1,2,3");
    campaign->add_option("--seeds", cargs.seeds, "random seeds S or A..B");
    campaign->add_option("--n", cargs.n, "random instance size")
        ->check(CLI::Range(1, 1 << 20));
    campaign->add_option("--cycle-prob", cargs.cycle_prob, "p/q");
    campaign->add_option("--max-cycle-len", cargs.max_cycle_len, "")
        ->check(CLI::Range(3, 1 << 20));
    campaign->add_option("--budget", cargs.budget, "per-oracle node budget");
    campaign->add_option("--threads", cargs.threads,
                         "worker cap (also env CACTUS_MP_THREADS)");
    campaign->add_option("--timeout-rows", cargs.timeout_rows,
                         "fail when more rows stay partial");
    campaign->add_option("--format", cargs.format, "json|csv");

    auto* bench = app.add_subcommand("bench", "construction timing")->fallthrough();
    std::string sizes_list = "10000,100000";
    std::uint64_t bench_seed = 1;
    std::string bench_format = "json";
    bench->add_option("--sizes", sizes_list, "ascending sizes, e.g. 1000,10000");
    bench->add_option("--seed", bench_seed, "generator seed");
    bench->add_option("--format", bench_format, "json|text");

    auto* dot = app.add_subcommand("dot", "DOT export with highlights")->fallthrough();
    add_graph_arg(dot);
    std::string dot_set_path, dot_broadcast_path;
    dot->add_option("--set", dot_set_path, "JSON array: members drawn boxed");
    dot->add_option("--broadcast", dot_broadcast_path,
                    "JSON [[vertex, power], ...]: towers labeled");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (gen_gk_cmd->parsed()) {
        emit(render_graph(gen_gk(gk_k).graph, gen_format), output);
        return 0;
    }
    if (gen_rand->parsed()) {
        RandomCactusParams prm;
        prm.n = rand_n;
        prm.seed = rand_seed;
        std::tie(prm.cycle_prob_num, prm.cycle_prob_den) = parse_prob(rand_prob);
        prm.max_cycle_len = rand_maxlen;
        emit(render_graph(random_cactus(prm), gen_format), output);
        return 0;
    }
    if (validate->parsed()) {
        auto cert = validate_cactus(read_graph_file(graph_path));
        std::string text = jdump(certificate_to_json(cert));
        if (!cert.is_cactus) throw ViolationExit{text, output};
        emit(text, output);
        return 0;
    }
    if (stats->parsed()) {
        Graph g = read_graph_file(graph_path);
        auto rep = radius_center(g);
        json j;
        j["n"] = g.n;
        j["m"] = g.edge_count();
        j["radius"] = rep.radius;
        j["diameter"] = rep.diameter;
        j["centers"] = rep.centers;
        j["is_cactus"] = validate_cactus(g).is_cactus;
        emit(jdump(j), output);
        return 0;
    }
    if (approx->parsed()) {
        Graph g = read_graph_file(graph_path);
        ApproxOptions opts;
        opts.verify = !no_verify;
        auto res = approx_multipacking(g, opts);
        std::string text = jdump(approx_to_json(res));
        if (opts.verify && !res.verified) throw ViolationExit{text, output};
        if (static_cast<int>(res.set.size()) < res.guaranteed_lower_bound)
            throw ViolationExit{text, output};
        emit(text, output);
        return 0;
    }
    if (exact->parsed()) {
        Graph g = read_graph_file(graph_path);
        SearchBudget sb;
        sb.nodes = budget;
        json j;
        if (exact_mp_cmd->parsed()) j = mp_result_to_json(exact_mp(g, sb));
        if (exact_gb_cmd->parsed())
            j = gamma_b_result_to_json(exact_gamma_b(g, sb));
        if (exact_dom_cmd->parsed())
            j = domination_result_to_json(exact_domination(g, sb));
        emit(jdump(j), output);
        return 0;
    }
    if (lp->parsed()) {
        emit(jdump(lp_to_json(lp_fractional(read_graph_file(graph_path)))),
             output);
        return 0;
    }
    if (weights->parsed()) {
        Graph g = read_graph_file(graph_path);
        json wj = read_json_file(weights_path);
        if (!wj.is_object())
            throw GraphError("weights must be a JSON object {\"vertex\": \"p/q\"}");
        WeightFn w;
        for (auto& [key, val] : wj.items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                throw GraphError("weights: bad vertex id \"" + key + "\"");
            }
            if (!val.is_string())
                throw GraphError("weights: values must be rational strings");
            w[v] = parse_rational(val.get<std::string>());
        }
        auto chk = verify_fractional_weights(g, w);
        json j;
        j["feasible"] = chk.feasible;
        j["value"] = rational_str(chk.value);
        if (!chk.feasible) {
            j["vertex"] = chk.vertex;
            j["radius"] = chk.radius;
            j["ball_weight"] = rational_str(chk.ball_weight);
            throw ViolationExit{jdump(j), output};
        }
        emit(jdump(j), output);
        return 0;
    }
    if (hyper->parsed()) {
        emit(jdump(delta_report_to_json(
                 delta_hyperbolicity(read_graph_file(graph_path)))),
             output);
        return 0;
    }
    if (verify_mp->parsed()) {
        Graph g = read_graph_file(graph_path);
        auto members = int_set_from_json(read_json_file(set_path), "--set");
        auto chk = verify_multipacking(g, members);
        json j;
        j["ok"] = chk.ok;
        if (!chk.ok) {
            j["vertex"] = chk.vertex;
            j["radius"] = chk.radius;
            j["count"] = chk.count;
            throw ViolationExit{jdump(j), output};
        }
        emit(jdump(j), output);
        return 0;
    }
    if (verify_bc->parsed()) {
        Graph g = read_graph_file(graph_path);
        auto f = broadcast_from_json(read_json_file(broadcast_path));
        auto chk = verify_broadcast(g, f);
        json j;
        j["dominating"] = chk.dominating;
        j["efficient"] = chk.efficient;
        j["undominated"] = chk.undominated;
        if (!chk.dominating) throw ViolationExit{jdump(j), output};
        emit(jdump(j), output);
        return 0;
    }
    if (campaign->parsed()) {
        cargs.output = output;
        return run_campaign_cmd(cargs);
    }
    if (bench->parsed()) {
        auto sizes = parse_int_list(sizes_list, "--sizes");
        auto rep = bench_linear(sizes, bench_seed);
        std::string text;
        if (bench_format == "json") {
            json j;
            j["rows"] = json::array();
            for (const auto& row : rep.rows) {
                json r;
                r["n"] = row.n;
                r["seconds"] = row.seconds;
                r["us_per_vertex"] = row.us_per_vertex;
                if (row.verify_seconds >= 0)
                    r["verify_seconds"] = row.verify_seconds;
                j["rows"].push_back(r);
            }
            j["growth"] = rep.growth;
            j["linear_ok"] = rep.linear_ok;
            text = jdump(j);
        } else if (bench_format == "text") {
            std::ostringstream os;
            for (const auto& row : rep.rows) {
                os << "n=" << row.n << " construct=" << row.seconds << "s"
                   << " per_vertex=" << row.us_per_vertex << "us";
                if (row.verify_seconds >= 0)
                    os << " verify=" << row.verify_seconds << "s";
                os << '\n';
            }
            os << "growth=" << rep.growth
               << (rep.linear_ok ? " (within 3x)" : " (EXCEEDS 3x)") << '\n';
            text = os.str();
        } else {
            throw CLI::ValidationError("--format", "expected json or text");
        }
        if (!rep.linear_ok) throw ViolationExit{text, output};
        emit(text, output);
        return 0;
    }
    if (dot->parsed()) {
        Graph g = read_graph_file(graph_path);
        std::vector<int> boxed;
        if (!dot_set_path.empty())
            boxed = int_set_from_json(read_json_file(dot_set_path), "--set");
        Broadcast towers;
        if (!dot_broadcast_path.empty())
            towers = broadcast_from_json(read_json_file(dot_broadcast_path));
        emit(export_dot(g, boxed, towers), output);
        return 0;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const ViolationExit& v) {
        try {
            emit(v.output, v.path);
        } catch (const GraphError& e) {
            std::cerr << "error: " << e.what() << '\n';
        }
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cactusmp
