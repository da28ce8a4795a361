#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactusmp/families.hpp"
#include "cactusmp/lp.hpp"
#include "util.hpp"

using namespace cactusmp;

TEST_CASE("fractional value on small fixed graphs") {
    CHECK(lp_fractional(testutil::path_graph(2)).value == 1);
    CHECK(lp_fractional(testutil::path_graph(4)).value == 2);
    CHECK(lp_fractional(testutil::star_graph(5)).value == 1);
    CHECK(lp_fractional(testutil::cycle_graph(4)).value == Rational(4, 3));
    CHECK(lp_fractional(testutil::cycle_graph(5)).value == Rational(5, 3));
    CHECK(lp_fractional(testutil::cycle_graph(6)).value == 2);
    CHECK(lp_fractional(testutil::complete_graph(4)).value == 1);
}

TEST_CASE("pentagon chain fractional value is four per pentagon") {
    for (int k = 1; k <= 3; ++k) {
        auto sol = lp_fractional(gen_gk(k).graph);
        CHECK(sol.status == LpStatus::Optimal);
        CHECK(sol.value == 4 * k);
    }
}

TEST_CASE("dual weights form a feasible fractional multipacking") {
    for (auto g : {testutil::path_graph(7), testutil::cycle_graph(5),
                   testutil::cycle_graph(9), gen_gk(1).graph}) {
        auto sol = lp_fractional(g);
        WeightFn w;
        for (int v = 0; v < g.n; ++v)
            if (sol.y[v] != 0) w[v] = sol.y[v];
        auto chk = verify_fractional_weights(g, w);
        CHECK(chk.feasible);
        CHECK(chk.value == sol.value);
    }
}

TEST_CASE("primal weights cover every vertex") {
    auto g = testutil::cycle_graph(5);
    auto sol = lp_fractional(g);
    auto dm = all_pairs_distances(g);
    for (int j = 0; j < g.n; ++j) {
        Rational covered = 0;
        for (auto& [key, wt] : sol.x)
            if (dm.at(key.first, j) <= key.second) covered += wt;
        CHECK(covered >= 1);
    }
    for (auto& [key, wt] : sol.x) {
        CHECK(key.second >= 1);
        CHECK(key.second <= 2);  // rad(C_5)
        CHECK(wt > 0);
    }
}

TEST_CASE("strong duality on random cacti") {
    for (unsigned long seed = 0; seed < 25; ++seed) {
        RandomCactusParams prm;
        prm.n = 2 + static_cast<int>(seed % 18);
        prm.seed = seed + 11;
        auto g = random_cactus(prm);
        auto sol = lp_fractional(g);
        CHECK(sol.status == LpStatus::Optimal);
        Rational dual = 0;
        for (auto& y : sol.y) dual += y;
        CHECK(dual == sol.value);
        auto rep = radius_center(g);
        CHECK(sol.value <= rep.radius);
        CHECK(sol.value >= 1);
    }
}

TEST_CASE("canonical pentagon weights match the optimum") {
    for (int k = 1; k <= 2; ++k) {
        auto inst = gen_gk(k);
        auto w = gk_fractional_weights(k);
        auto chk = verify_fractional_weights(inst.graph, w);
        CHECK(chk.feasible);
        CHECK(chk.value == 4 * k);
        CHECK(chk.value == lp_fractional(inst.graph).value);
    }
}

TEST_CASE("weight checker reports the first violated ball") {
    auto g = testutil::path_graph(4);
    WeightFn w{{1, Rational(1)}, {2, Rational(1)}};
    auto chk = verify_fractional_weights(g, w);
    CHECK(!chk.feasible);
    CHECK(chk.vertex == 1);
    CHECK(chk.radius == 1);
    CHECK(chk.ball_weight == 2);

    WeightFn zero;
    auto ok = verify_fractional_weights(g, zero);
    CHECK(ok.feasible);
    CHECK(ok.value == 0);

    CHECK_THROWS_AS(verify_fractional_weights(g, WeightFn{{9, Rational(1)}}),
                    GraphError);
    CHECK_THROWS_AS(verify_fractional_weights(g, WeightFn{{0, Rational(-1)}}),
                    GraphError);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(lp_fractional(testutil::path_graph(1)), GraphError);
    Graph two = from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(lp_fractional(two), DisconnectedError);
}
