#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cactusmp/io.hpp"

#include <doctest.h>

#include <sstream>

#include "cactusmp/families.hpp"
#include "util.hpp"

using namespace cactusmp;
using nlohmann::json;
using testutil::cycle_graph;

namespace {

Graph read_text(const std::string& s) {
    std::istringstream in(s);
    return read_edge_list_text(in);
}

std::string error_of(const std::string& s) {
    try {
        read_text(s);
    } catch (const GraphError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("edge list reading") {
    Graph g = read_text("# triangle with a tail\n3 3\n0 1\n1 2\n\n2 0\n");
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 0));

    CHECK(error_of("") == "line 0: missing header \"n m\"");
    CHECK(error_of("3\n") == "line 1: expected header \"n m\"");
    CHECK(error_of("3 3 9\n") == "line 1: expected header \"n m\"");
    CHECK(error_of("0 0\n") == "line 1: vertex count must be positive");
    CHECK(error_of("2 1\n0 0\n") == "line 2: loop edge");
    CHECK(error_of("2 1\n0 2\n") == "line 2: endpoint outside 0..1");
    CHECK(error_of("2 1\n0 1\n1 0\n") == "line 3: more than the declared 1 edges");
    CHECK(error_of("3 2\n0 1\n") == "line 2: declared 2 edges, found 1");
    CHECK(error_of("2 1\n0 1 junk\n") == "line 2: expected edge \"u v\"");
}

TEST_CASE("edge list writing round trip") {
    Graph g = gen_gk(1).graph;
    std::string text = write_edge_list_text(g);
    Graph back = read_text(text);
    CHECK(back.n == g.n);
    CHECK(back.edges() == g.edges());
    CHECK(write_edge_list_text(back) == text);
    CHECK(text.substr(0, 5) == "15 17");
}

TEST_CASE("graph json round trip") {
    json j = {{"n", 4},
              {"edges", {{0, 1}, {1, 2}, {2, 3}}},
              {"labels", {{"0", "root"}, {"3", "leaf"}}}};
    Graph g = graph_from_json(j);
    CHECK(g.n == 4);
    CHECK(g.labels.at(0) == "root");
    CHECK(g.labels.at(3) == "leaf");
    json back = graph_to_json(g);
    CHECK(back["n"] == 4);
    CHECK(back["edges"].size() == 3);
    CHECK(back["labels"]["3"] == "leaf");
    CHECK(graph_from_json(back).edges() == g.edges());

    json plain = graph_to_json(cycle_graph(4));
    CHECK_FALSE(plain.contains("labels"));

    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), GraphError);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 2}}), GraphError);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 0}, {"edges", json::array()}}),
                    GraphError);
    CHECK_THROWS_AS(
        graph_from_json(json{{"n", 2}, {"edges", {{0, 1, 2}}}}), GraphError);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 2},
                                         {"edges", json::array()},
                                         {"labels", {{"x", "bad"}}}}),
                    GraphError);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 2},
                                         {"edges", json::array()},
                                         {"labels", {{"5", "oob"}}}}),
                    GraphError);
}

TEST_CASE("format sniffing") {
    std::istringstream text("2 1\n0 1\n");
    CHECK(read_graph_stream(text).n == 2);
    std::istringstream as_json("  {\"n\": 2, \"edges\": [[0,1]]}");
    CHECK(read_graph_stream(as_json).n == 2);
    std::istringstream broken("  {\"n\": 2,");
    CHECK_THROWS_AS(read_graph_stream(broken), GraphError);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/path.json"), GraphError);
}

TEST_CASE("dot export") {
    auto inst = gen_gk(1);
    auto mp = gk_canonical_multipacking(1);
    std::string dot = export_dot(inst.graph, mp);
    CHECK(dot == export_dot(inst.graph, mp));
    size_t boxes = 0;
    for (size_t at = dot.find("shape=box"); at != std::string::npos;
         at = dot.find("shape=box", at + 1))
        ++boxes;
    CHECK(boxes == 3);
    CHECK(dot.find("p=") == std::string::npos);

    std::string plain = export_dot(inst.graph);
    CHECK(plain.find("shape=box") == std::string::npos);
    CHECK(plain.find("0 -- 1;") != std::string::npos);

    std::string towers = export_dot(inst.graph, {}, gk_optimal_broadcast(1));
    CHECK(towers.find("p=4") != std::string::npos);

    CHECK_THROWS_AS(export_dot(inst.graph, {99}), GraphError);
}

TEST_CASE("result serialization") {
    Graph g = gen_gk(1).graph;
    auto approx = approx_multipacking(g);
    json ja = approx_to_json(approx);
    CHECK(ja["radius"] == 4);
    CHECK(ja["branch"] == "F1AtLeastF2");
    CHECK(ja["size"] == approx.set.size());
    CHECK(ja["verified"] == true);
    CHECK(ja["guaranteed_lower_bound"] == 1);
    CHECK(ja["params"].is_object());

    json jlp = lp_to_json(lp_fractional(cycle_graph(4)));
    CHECK(jlp["status"] == "optimal");
    CHECK(jlp["value"] == "4/3");
    CHECK(jlp["y"].size() == 4);

    json jmp = mp_result_to_json(exact_mp(g));
    CHECK(jmp["status"] == "exact");
    CHECK(jmp["value"] == 3);
    CHECK(jmp["witness"].size() == 3);

    json jgb = gamma_b_result_to_json(exact_gamma_b(g));
    CHECK(jgb["value"] == 4);
    Broadcast back = broadcast_from_json(jgb["witness"]);
    CHECK(verify_broadcast(g, back).dominating);
    CHECK_THROWS_AS(broadcast_from_json(json{{"vertex", 1}}), GraphError);

    json jdom = domination_result_to_json(exact_domination(g));
    CHECK(jdom["status"] == "exact");
    CHECK(jdom["value"].get<int>() >= 3);

    json jd = delta_report_to_json(delta_hyperbolicity(g));
    CHECK(jd["delta"] == "1/2");
    CHECK(jd["witness"].size() == 4);
    CHECK(jd["quadruples_scanned"] == 1365);

    json jh;
    {
        auto dm_path = radial_path(g, radius_center(g).centers.front(), 4);
        auto q = disjoint_radial_path(g, dm_path, dm_path.front());
        auto f1 = joining_path(g, dm_path, q, dm_path.front());
        jh = h_to_json(build_h(g, dm_path, q, f1));
    }
    for (const char* key : {"gamma", "m", "t", "k", "alpha", "beta", "delta",
                            "x", "y", "z", "g", "cycle", "p_prime", "q_prime",
                            "r_prime"})
        CHECK(jh.contains(key));
}
