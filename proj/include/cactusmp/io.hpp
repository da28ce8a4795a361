#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cactusmp/core.hpp"
#include "cactusmp/hyperbolicity.hpp"
#include "cactusmp/lp.hpp"
#include "cactusmp/multipack.hpp"
#include "cactusmp/oracles.hpp"
#include "cactusmp/radial.hpp"

namespace cactusmp {

/// Plain text graph format: '#' comment lines and blank lines are skipped,
/// the first data line is "n m", followed by exactly m lines "u v".
/// Malformed input raises GraphError with a line number.
Graph read_edge_list_text(std::istream& in);

/// {"n": int, "edges": [[u,v],...], "labels": {"id": "name", ...}?}
Graph graph_from_json(const nlohmann::json& j);

/// Reads either format, sniffing JSON by a leading '{'.
Graph read_graph_stream(std::istream& in);

/// Reads a graph file; "-" means stdin.
Graph read_graph_file(const std::string& path);

std::string write_edge_list_text(const Graph& g);
nlohmann::json graph_to_json(const Graph& g);

/// Deterministic DOT text. Multipacking members render as boxes; broadcast
/// towers carry a "p=<power>" label line.
std::string export_dot(const Graph& g, const std::vector<int>& boxed = {},
                       const Broadcast& towers = {});

/// Broadcasts serialize as sorted [vertex, power] pairs.
nlohmann::json broadcast_to_json(const Broadcast& f);
Broadcast broadcast_from_json(const nlohmann::json& j);

nlohmann::json approx_to_json(const ApproxResult& r);
nlohmann::json h_to_json(const HSubgraph& h);
nlohmann::json lp_to_json(const LpSolution& s);
nlohmann::json mp_result_to_json(const MpResult& r);
nlohmann::json gamma_b_result_to_json(const GammaBResult& r);
nlohmann::json domination_result_to_json(const DominationResult& r);
nlohmann::json delta_report_to_json(const DeltaReport& r);

}  // namespace cactusmp
