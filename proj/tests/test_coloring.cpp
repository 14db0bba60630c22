#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/coloring.hpp"
#include "dpcolor/rng.hpp"

using namespace dpc;

TEST_CASE("chromatic polynomial values") {
    CHECK(chromatic_polynomial_eval(cycle_graph(3), 3) == 6);
    CHECK(chromatic_polynomial_eval(cycle_graph(4), 3) == 18);
    CHECK(chromatic_polynomial_eval(cycle_graph(5), 3) == 30);
    CHECK(chromatic_polynomial_eval(cycle_graph(7), 3) == 126);
    CHECK(chromatic_polynomial_eval(complete_graph(4), 3) == 0);
    CHECK(chromatic_polynomial_eval(complete_graph(4), 4) == 24);
    CHECK(chromatic_polynomial_eval(cycle_graph(4), 4) == 84);
    CHECK(chromatic_polynomial_eval(cycle_graph(5), 4) == 240);
    CHECK(chromatic_polynomial_eval(path_graph(4), 3) == 3 * 2 * 2 * 2);
    CHECK(chromatic_polynomial_eval(empty_graph(3), 5) == 125);
    // P(C_n, k) = (k-1)^n + (-1)^n (k-1), spot checked above; an edgeless
    // vertex multiplies by k.
    CHECK(chromatic_polynomial_eval(cycle_graph(6), 3) == 66);
}

TEST_CASE("chromatic polynomial agrees with enumeration") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng.below(5));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2)) edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        for (int k = 1; k <= 4; ++k) {
            auto all = enumerate_proper_colorings(g, k);
            CHECK(chromatic_polynomial_eval(g, k) == mpz_class(all.size()));
            for (const auto& c : all) CHECK(is_proper(g, c.assignment));
        }
    }
}

TEST_CASE("chromatic and coloring numbers") {
    CHECK(chromatic_number(cycle_graph(4)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(empty_graph(4)) == 1);

    CHECK(coloring_number(path_graph(5)) == 2);
    CHECK(coloring_number(cycle_graph(4)) == 3);
    CHECK(coloring_number(complete_graph(4)) == 4);
    CHECK(coloring_number(petersen_graph()) == 4);
}

TEST_CASE("degeneracy ordering property") {
    for (const auto& g : {cycle_graph(6), petersen_graph(), complete_bipartite(2, 3)}) {
        auto ord = degeneracy_ordering(g);
        int col = coloring_number(g);
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[ord[i]] = i;
        for (int i = 0; i < g.n(); ++i) {
            int back = 0;
            for (int w : g.neighbors(ord[i]))
                if (pos[w] < i) ++back;
            CHECK(back < col);
        }
    }
}

TEST_CASE("criticality") {
    CHECK(is_k_critical(complete_graph(2), 2));
    CHECK(is_k_critical(cycle_graph(3), 3));
    CHECK(is_k_critical(cycle_graph(5), 3));
    CHECK(is_k_critical(cycle_graph(7), 3));
    CHECK(is_k_critical(complete_graph(4), 4));
    CHECK(!is_k_critical(cycle_graph(4), 3));
    CHECK(!is_k_critical(cycle_graph(4), 2));  // C4 is 2-chromatic but P4 still needs 2
    CHECK(!is_k_critical(petersen_graph(), 3));
}

TEST_CASE("lexicographic enumeration order") {
    auto all = enumerate_proper_colorings(complete_graph(2), 2);
    REQUIRE(all.size() == 2);
    CHECK(all[0].assignment == std::vector<int>{0, 1});
    CHECK(all[1].assignment == std::vector<int>{1, 0});
}
