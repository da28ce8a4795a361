#include "cactusmp/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cactusmp {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw GraphError("line " + std::to_string(line) + ": " + what);
}

bool comment_or_blank(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph read_edge_list_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string extra;
            if (!(ls >> n >> m) || (ls >> extra))
                parse_fail(lineno, "expected header \"n m\"");
            if (n < 1) parse_fail(lineno, "vertex count must be positive");
            if (m < 0) parse_fail(lineno, "edge count must be non-negative");
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            parse_fail(lineno, "more than the declared " + std::to_string(m) +
                                   " edges");
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            parse_fail(lineno, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lineno, "endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) parse_fail(lineno, "loop edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) parse_fail(lineno, "missing header \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        parse_fail(lineno, "declared " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
    return from_edge_list(n, edges);
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw GraphError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw GraphError("graph JSON: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1) throw GraphError("graph JSON: vertex count must be positive");
    if (!j["edges"].is_array())
        throw GraphError("graph JSON: \"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw GraphError("graph JSON: each edge must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<int, std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw GraphError("graph JSON: \"labels\" must be an object");
        for (auto& [key, val] : j["labels"].items()) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(key, &pos);
            } catch (const std::exception&) {
                throw GraphError("graph JSON: label key \"" + key +
                                 "\" is not a vertex id");
            }
            if (pos != key.size() || v < 0 || v >= n)
                throw GraphError("graph JSON: label key \"" + key +
                                 "\" is not a vertex id");
            if (!val.is_string())
                throw GraphError("graph JSON: label values must be strings");
            labels[v] = val.get<std::string>();
        }
    }
    return from_edge_list(n, edges, labels);
}

Graph read_graph_stream(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw GraphError(std::string("graph JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream is(text);
    return read_edge_list_text(is);
}

Graph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_graph_stream(in);
}

std::string write_edge_list_text(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels.empty()) {
        json labels = json::object();
        for (auto& [v, name] : g.labels) labels[std::to_string(v)] = name;
        j["labels"] = labels;
    }
    return j;
}

std::string export_dot(const Graph& g, const std::vector<int>& boxed,
                       const Broadcast& towers) {
    std::vector<char> is_boxed(g.n, 0);
    for (int v : boxed) {
        if (v < 0 || v >= g.n) throw GraphError("highlight on unknown vertex");
        is_boxed[v] = 1;
    }
    std::ostringstream out;
    out << "graph cactus {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) {
        std::string name =
            g.labels.count(v) ? g.labels.at(v) : std::to_string(v);
        auto tower = towers.find(v);
        bool has_power = tower != towers.end() && tower->second > 0;
        if (!is_boxed[v] && !has_power && !g.labels.count(v)) continue;
        out << "  " << v << " [";
        if (is_boxed[v]) out << "shape=box ";
        out << "label=\"" << name;
        if (has_power) out << "\\np=" << tower->second;
        out << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

json broadcast_to_json(const Broadcast& f) {
    json arr = json::array();
    for (auto& [v, p] : f) arr.push_back({v, p});
    return arr;
}

Broadcast broadcast_from_json(const json& j) {
    if (!j.is_array()) throw GraphError("broadcast JSON must be [[vertex, power], ...]");
    Broadcast f;
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw GraphError("broadcast JSON must be [[vertex, power], ...]");
        f[e[0].get<int>()] = e[1].get<int>();
    }
    return f;
}

json approx_to_json(const ApproxResult& r) {
    json j;
    j["radius"] = r.radius;
    j["branch"] = to_string(r.trace.tag);
    j["params"] = json::object();
    for (auto& [key, val] : r.trace.params) j["params"][key] = val;
    j["set"] = r.set;
    j["size"] = r.set.size();
    j["guaranteed_lower_bound"] = r.guaranteed_lower_bound;
    j["verified"] = r.verified;
    return j;
}

json h_to_json(const HSubgraph& h) {
    json j;
    j["gamma"] = h.gamma;
    j["m"] = h.m;
    j["t"] = h.t;
    j["k"] = h.k;
    j["alpha"] = h.alpha;
    j["beta"] = h.beta;
    j["delta"] = h.delta;
    j["x"] = h.x;
    j["y"] = h.y;
    j["z"] = h.z;
    j["g"] = h.g;
    j["cycle"] = h.cycle;
    j["p_prime"] = h.p_prime;
    j["q_prime"] = h.q_prime;
    j["r_prime"] = h.r_prime;
    return j;
}

json lp_to_json(const LpSolution& s) {
    json j;
    j["status"] =
        s.status == LpStatus::Optimal ? "optimal" : "infeasible_guard";
    j["value"] = rational_str(s.value);
    json xs = json::array();
    for (auto& [key, weight] : s.x) {
        json entry;
        entry["vertex"] = key.first;
        entry["power"] = key.second;
        entry["weight"] = rational_str(weight);
        xs.push_back(entry);
    }
    j["x"] = xs;
    json ys = json::array();
    for (auto& w : s.y) ys.push_back(rational_str(w));
    j["y"] = ys;
    return j;
}

namespace {

const char* status_str(OracleStatus s) {
    return s == OracleStatus::Exact ? "exact" : "range";
}

}  // namespace

json mp_result_to_json(const MpResult& r) {
    json j;
    j["status"] = status_str(r.status);
    j["value"] = r.value();
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["witness"] = r.witness;
    return j;
}

json gamma_b_result_to_json(const GammaBResult& r) {
    json j;
    j["status"] = status_str(r.status);
    j["value"] = r.value();
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["witness"] = broadcast_to_json(r.witness);
    j["efficient"] = r.efficient;
    return j;
}

json domination_result_to_json(const DominationResult& r) {
    json j;
    j["status"] = status_str(r.status);
    j["value"] = r.value();
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["witness"] = r.witness;
    return j;
}

json delta_report_to_json(const DeltaReport& r) {
    json j;
    j["delta"] = rational_str(r.delta);
    j["witness"] = json::array();
    if (r.has_witness())
        for (int v : r.witness) j["witness"].push_back(v);
    j["quadruples_scanned"] = r.quadruples_scanned;
    return j;
}

}  // namespace cactusmp
