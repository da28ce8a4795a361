#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cactusmp/families.hpp"

#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "cactusmp/lp.hpp"
#include "cactusmp/multipack.hpp"
#include "cactusmp/oracles.hpp"

using namespace cactusmp;

TEST_CASE("pentagon chain shape") {
    for (int k = 1; k <= 3; ++k) {
        auto inst = gen_gk(k);
        CHECK(inst.graph.n == 15 * k);
        CHECK(inst.graph.edge_count() == 18 * k - 1);
        for (int i = 1; i <= 3 * k; ++i) {
            CHECK(inst.graph.has_edge(inst.a(i), inst.b(i)));
            CHECK(inst.graph.has_edge(inst.b(i), inst.c(i)));
            CHECK(inst.graph.has_edge(inst.c(i), inst.d(i)));
            CHECK(inst.graph.has_edge(inst.d(i), inst.e(i)));
            CHECK(inst.graph.has_edge(inst.e(i), inst.a(i)));
            if (i < 3 * k) CHECK(inst.graph.has_edge(inst.b(i), inst.e(i + 1)));
        }
        auto cert = validate_cactus(inst.graph);
        CHECK(cert.is_cactus);
        int cycles = 0, bridges = 0;
        for (auto& blk : cert.blocks) {
            if (blk.type == Block::Type::Cycle) {
                CHECK(blk.vertices.size() == 5);
                ++cycles;
            } else {
                ++bridges;
            }
        }
        CHECK(cycles == 3 * k);
        CHECK(bridges == 3 * k - 1);
        auto rep = radius_center(inst.graph);
        CHECK(rep.diameter == 9 * k - 1);
    }
    CHECK(gen_gk(1).graph.labels.at(0) == "a1");
    CHECK(gen_gk(2).graph.labels.at(29) == "e6");
    CHECK_THROWS_AS(gen_gk(0), GraphError);
}

TEST_CASE("canonical multipacking") {
    for (int k = 1; k <= 3; ++k) {
        auto inst = gen_gk(k);
        auto mp = gk_canonical_multipacking(k);
        CHECK(static_cast<int>(mp.size()) == 3 * k);
        for (int i = 1; i <= 3 * k; ++i)
            CHECK(std::find(mp.begin(), mp.end(), inst.a(i)) != mp.end());
        CHECK(verify_multipacking(inst.graph, mp).ok);
    }
    // no two vertices of one pentagon fit in any multipacking
    auto inst = gen_gk(1);
    for (int i = 1; i <= 3; ++i) {
        std::vector<int> pent{inst.a(i), inst.b(i), inst.c(i), inst.d(i),
                              inst.e(i)};
        for (size_t s = 0; s < pent.size(); ++s)
            for (size_t t = s + 1; t < pent.size(); ++t)
                CHECK_FALSE(
                    verify_multipacking(inst.graph, {pent[s], pent[t]}).ok);
    }
}

TEST_CASE("canonical broadcast") {
    for (int k = 1; k <= 3; ++k) {
        auto inst = gen_gk(k);
        auto f = gk_optimal_broadcast(k);
        CHECK(static_cast<int>(f.size()) == k);
        int cost = 0;
        for (auto& [v, p] : f) {
            CHECK(p == 4);
            cost += p;
        }
        for (int i = 1; i <= 3 * k; ++i) {
            bool tower = f.count(inst.a(i)) > 0;
            CHECK(tower == (i % 3 == 2));
        }
        CHECK(cost == 4 * k);
        auto chk = verify_broadcast(inst.graph, f);
        CHECK(chk.dominating);
        CHECK(chk.efficient);
    }
}

TEST_CASE("canonical fractional weights") {
    for (int k = 1; k <= 2; ++k) {
        auto inst = gen_gk(k);
        auto w = gk_fractional_weights(k);
        Rational total(0);
        for (auto& [v, weight] : w) {
            CHECK(weight == rational_from(1, 3));
            total += weight;
        }
        CHECK(static_cast<int>(w.size()) == 12 * k);
        for (int i = 1; i <= 3 * k; ++i) CHECK_FALSE(w.count(inst.a(i)));
        CHECK(total == Rational(4 * k));
        auto chk = verify_fractional_weights(inst.graph, w);
        CHECK(chk.feasible);
        CHECK(chk.value == Rational(4 * k));
        CHECK(lp_fractional(inst.graph).value == chk.value);
    }
}

TEST_CASE("random cactus generator") {
    RandomCactusParams one;
    one.n = 1;
    Graph k1 = random_cactus(one);
    CHECK(k1.n == 1);
    CHECK(k1.edge_count() == 0);

    RandomCactusParams treeish;
    treeish.n = 30;
    treeish.seed = 5;
    treeish.cycle_prob_num = 0;
    treeish.cycle_prob_den = 1;
    Graph tree = random_cactus(treeish);
    CHECK(tree.n == 30);
    CHECK(tree.edge_count() == 29);
    CHECK(validate_cactus(tree).is_cactus);

    RandomCactusParams spec_example;
    spec_example.n = 50;
    spec_example.seed = 42;
    spec_example.max_cycle_len = 7;
    Graph fifty = random_cactus(spec_example);
    CHECK(fifty.n == 50);
    CHECK(validate_cactus(fifty).is_cactus);

    for (unsigned long seed = 1; seed <= 100; ++seed) {
        RandomCactusParams prm;
        prm.n = 3 + static_cast<int>(seed % 60);
        prm.seed = seed;
        Graph g = random_cactus(prm);
        CHECK(g.n == prm.n);
        CHECK(g.connected);
        CHECK(validate_cactus(g).is_cactus);
        CHECK(brute::is_cactus(g));
    }

    RandomCactusParams prm;
    prm.n = 25;
    prm.seed = 123;
    CHECK(random_cactus(prm).edges() == random_cactus(prm).edges());
    RandomCactusParams other = prm;
    other.seed = 124;
    CHECK(random_cactus(prm).edges() != random_cactus(other).edges());
}

TEST_CASE("splitmix64 reference values") {
    // reference stream for seed 1234567, as in the generator docs
    SplitMix64 rng(1234567ULL);
    CHECK(rng.next() == 0x599ed017fb08fc85ULL);
    CHECK(rng.next() == 0x2c73f08458540fa5ULL);
}
