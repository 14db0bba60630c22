#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/certificate.hpp"
#include "dpcolor/coloring.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/product.hpp"
#include "dpcolor/rng.hpp"
#include "dpcolor/solver.hpp"

using namespace dpc;

TEST_CASE("shift classes of odd cycles") {
    auto cls = shift_classes(cycle_graph(3), 3);
    CHECK(cls.class_count() == 2);  // 6 colorings / 3
    for (std::size_t c = 0; c < cls.class_count(); ++c) {
        for (int j = 0; j < 3; ++j) {
            auto m = cls.member(c, j);
            CHECK(is_proper(cycle_graph(3), m));
            if (j > 0) {
                auto prev = cls.member(c, j - 1);
                for (int v = 0; v < 3; ++v) CHECK(m[v] != prev[v]);  // disagree everywhere
            }
        }
    }
    CHECK(shift_classes(cycle_graph(5), 3).class_count() == 10);
    CHECK(shift_classes(complete_graph(3), 4).class_count() == 6);
    // Representatives ordered lexicographically; the all-least coloring leads.
    CHECK(cls.representatives[0] < cls.representatives[1]);
}

TEST_CASE("product cover layout") {
    auto pc = make_product_cover(cycle_graph(3), 3, 1, 2);
    CHECK(pc.fold() == 3);
    CHECK(pc.kv() == 3);
    CHECK(pc.cover.base.n() == 9);
    CHECK(validate_cover(pc.cover).empty());
    // Cross matchings start empty; copy edges are identity.
    CHECK(pc.cross_matching(0, 0, 0) == std::vector<int>{-1, -1, -1});
    auto sub = pc.x_subcover();
    CHECK(sub.base.n() == 3);
    CHECK(sub.base.m() == 3);
    CHECK(count_transversals(sub) == 6);  // canonical C3 copy
}

TEST_CASE("volatility and witnesses") {
    auto g = cycle_graph(3);
    auto cls = shift_classes(g, 3);
    auto pc = assemble_star_cover(g, 3, 2, cls);
    auto xs = enumerate_transversals(pc.x_subcover());
    REQUIRE(xs.size() == 6);
    int volatile_total = 0;
    for (const auto& ix : xs) {
        int hits = 0;
        for (int q = 0; q < 2; ++q) {
            auto rep = check_volatile(pc, ix, q);
            if (rep.is_volatile) {
                ++hits;
                REQUIRE(rep.tau.has_value());
                CHECK(*rep.tau == 1);
            } else {
                REQUIRE(rep.witness.has_value());
            }
        }
        CHECK(hits == 1);  // each coloring collides with exactly its own class leaf
        volatile_total += hits;
    }
    CHECK(volatile_total == 6);
    CHECK(count_volatile(pc, 0) == 3);  // one shift class
    CHECK(count_volatile(pc, 1) == 3);
}

TEST_CASE("star construction is bad exactly at the threshold") {
    auto cert = build_star_bad_cover(cycle_graph(3), 3, 2);
    CHECK(cert.verified);
    CHECK(cert.kind == "star");
    CHECK(cert.b == 2);
    auto verdict = verify_bad_by_volatility(cert.product);
    CHECK(verdict.bad);
    CHECK(verdict.x_colorings == 6);
    // Below threshold: rejected.
    CHECK_THROWS_AS(build_star_bad_cover(cycle_graph(3), 3, 1), PreconditionError);
    // Non-critical base: rejected.
    CHECK_THROWS_AS(build_star_bad_cover(cycle_graph(4), 3, 100), PreconditionError);
}

TEST_CASE("one leaf is never enough") {
    // t=1 star assembly (one class wired) leaves the other class extendable.
    auto g = cycle_graph(3);
    auto cls = shift_classes(g, 3);
    auto pc = assemble_star_cover(g, 3, 1, cls);
    auto verdict = verify_bad_by_volatility(pc);
    CHECK(!verdict.bad);
    REQUIRE(verdict.counterexample.has_value());
    CHECK(check_transversal(pc.cover, *verdict.counterexample));
}

TEST_CASE("c constants") {
    CHECK(c_constant(2, 2) == 2);
    CHECK(c_constant(3, 2) == 2);
    CHECK(c_constant(3, 3) == 8);
    CHECK(c_constant(2, 3) == 9);
    CHECK(c_constant(4, 3) == 7);
    CHECK(c_constant(6, 6) == 70);
    CHECK_THROWS(c_constant(3, 1));
    for (int k = 2; k <= 6; ++k)
        for (int l = 2; l <= 6; ++l) CHECK(c_bound_check(k, l));
}

TEST_CASE("volatility probability") {
    CHECK(volatility_probability_formula(3, 2) == mpq_class(3, 4));
    CHECK(volatility_probability_formula(2, 2) == mpq_class(2, 3));
    CHECK(volatility_probability_formula(3, 1) == 1);
    CHECK(volatility_probability_exact(3, 2) == mpq_class(3, 4));  // 432 of 576 tuples
    CHECK(volatility_probability_exact(2, 2) == mpq_class(2, 3));
    CHECK(volatility_probability_exact(2, 3) == volatility_probability_formula(2, 3));
    double mc = volatility_probability_montecarlo(3, 2, 100'000, 12345);
    CHECK(std::abs(mc - 0.75) < 0.02);
    CHECK(mc == volatility_probability_montecarlo(3, 2, 100'000, 12345));  // deterministic
}

TEST_CASE("randomized construction on K_2") {
    // k=2, l=2: fold 3, b = P(K_2,3)/3 = 2, c = 2, threshold t = 2*4 = 8.
    auto cert = build_random_bad_cover(complete_graph(2), 2, 2, 8, 99);
    CHECK(cert.verified);
    CHECK(cert.c == 2);
    CHECK(cert.b == 2);
    CHECK(cert.bijections.size() == 4);
    CHECK(verify_bad_by_volatility(cert.product).bad);
    // Deterministic in the seed.
    auto again = build_random_bad_cover(complete_graph(2), 2, 2, 8, 99);
    CHECK(again.product.cover.matchings == cert.product.cover.matchings);
    CHECK(again.block_attempts == cert.block_attempts);
    // Threshold and l=1 misuse are rejected.
    CHECK_THROWS_AS(build_random_bad_cover(complete_graph(2), 2, 2, 7, 1), PreconditionError);
    CHECK_THROWS_AS(build_random_bad_cover(cycle_graph(3), 3, 1, 100, 1), PreconditionError);
}

TEST_CASE("f_dp bracket") {
    auto br = f_dp_bracket(cycle_graph(3), 3);
    CHECK(br.lower == 2);
    CHECK(br.upper == 2);
    REQUIRE(br.exact.has_value());
    CHECK(*br.exact == 2);
    CHECK(f_dp_bracket(cycle_graph(5), 3).exact == mpq_class(10));
    CHECK_THROWS_AS(f_dp_bracket(cycle_graph(4), 3), PreconditionError);
}

TEST_CASE("volatile colorings per leaf stay at most k under random wiring") {
    SplitMix64 rng(404);
    auto g = cycle_graph(5);
    int k = 3;
    for (int iter = 0; iter < 100; ++iter) {
        auto pc = make_product_cover(g, k, 1, 2);
        for (int u = 0; u < g.n(); ++u)
            for (int q = 0; q < 2; ++q) {
                auto m = rng.permutation(k);
                for (int& x : m)
                    if (rng.below(2)) x = -1;
                pc.cross_matching(u, 0, q) = m;
            }
        for (int q = 0; q < 2; ++q)
            CHECK(count_volatile(pc, q) <= static_cast<std::uint64_t>(k));
    }
}
