#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/coloring.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/rng.hpp"
#include "dpcolor/solver.hpp"

using namespace dpc;

namespace {

std::vector<std::vector<int>> random_relabeling(SplitMix64& rng, int n, int k) {
    std::vector<std::vector<int>> rho(n);
    for (auto& r : rho) r = rng.permutation(k);
    return rho;
}

}  // namespace

TEST_CASE("canonical cover basics") {
    auto c = canonical_cover(cycle_graph(4), 3);
    CHECK(c.uniform_fold());
    CHECK(c.uniform_k() == 3);
    CHECK(is_full(c));
    CHECK(is_canonical(c));
    CHECK(validate_cover(c).empty());
    // Transversals of the canonical cover are exactly the proper colorings.
    CHECK(count_transversals(c) == chromatic_polynomial_eval(cycle_graph(4), 3));
}

TEST_CASE("transversal check") {
    auto c = canonical_cover(complete_graph(2), 2);
    CHECK(check_transversal(c, Transversal{{0, 1}}));
    CHECK(!check_transversal(c, Transversal{{1, 1}}));
}

TEST_CASE("validation catches malformed covers") {
    auto c = canonical_cover(cycle_graph(3), 2);
    c.matchings[0] = {1, 1};  // not injective
    CHECK(!validate_cover(c).empty());
    c = canonical_cover(cycle_graph(3), 2);
    c.matchings[0] = {5, -1};  // out of range
    CHECK(!validate_cover(c).empty());
    c = canonical_cover(cycle_graph(3), 2);
    c.matchings[0] = {0};  // wrong length
    CHECK(!validate_cover(c).empty());
}

TEST_CASE("relabeling preserves transversal counts") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        auto g = cycle_graph(3 + static_cast<int>(rng.below(3)));
        int k = 2 + static_cast<int>(rng.below(2));
        auto c = canonical_cover(g, k);
        auto base = count_transversals(c);
        auto rho = random_relabeling(rng, g.n(), k);
        auto c2 = apply_relabeling(c, rho);
        CHECK(validate_cover(c2).empty());
        CHECK(count_transversals(c2) == base);
        // Relabelings of a canonical cover stay canonical.
        CHECK(is_canonical(c2));
    }
}

TEST_CASE("canonical labeling detects holonomy") {
    auto c = canonical_cover(cycle_graph(3), 2);
    CHECK(find_canonical_labeling(c).has_value());
    c.matchings[0] = {1, 0};  // one twisted edge: cycle holonomy is a swap
    CHECK(is_full(c));
    CHECK(!find_canonical_labeling(c).has_value());
    // Twisting a tree edge of a tree never breaks canonicity.
    auto p = canonical_cover(path_graph(3), 2);
    p.matchings[1] = {1, 0};
    CHECK(find_canonical_labeling(p).has_value());
}

TEST_CASE("gauge normalization") {
    SplitMix64 rng(23);
    auto g = cycle_graph(4);
    for (int iter = 0; iter < 50; ++iter) {
        int k = 3;
        auto c = canonical_cover(g, k);
        for (auto& m : c.matchings) m = rng.permutation(k);
        auto base = count_transversals(c);
        std::vector<std::vector<int>> rho;
        auto norm = gauge_normalize(c, &rho);
        CHECK(count_transversals(norm) == base);
        // Tree matchings become identity.
        for (int e : bfs_tree_edges(g)) {
            for (int i = 0; i < k; ++i) CHECK(norm.matchings[e][i] == i);
        }
        CHECK(apply_relabeling(c, rho).matchings == norm.matchings);
    }
}

TEST_CASE("subcovers") {
    auto g = cycle_graph(4);
    auto c = canonical_cover(g, 3);
    auto sub = subcover_induced(c, {0, 1, 2});
    CHECK(sub.base.n() == 3);
    CHECK(sub.base.m() == 2);
    CHECK(validate_cover(sub).empty());
    // Reversed kept order flips matchings consistently.
    auto rev = subcover_induced(c, {2, 1, 0});
    CHECK(rev.base.m() == 2);
    CHECK(validate_cover(rev).empty());
    CHECK(count_transversals(rev) == count_transversals(sub));

    auto sparse = subcover_corresponding(c, {0, 1, 2}, SimpleGraph(3, {{0, 1}}));
    CHECK(sparse.base.m() == 1);
    CHECK(validate_cover(sparse).empty());
}

TEST_CASE("non-uniform folds") {
    Cover c(path_graph(2), {2, 3}, {{0, 1}});
    CHECK(!c.uniform_fold());
    CHECK(validate_cover(c).empty());
    CHECK(count_transversals(c) == 2 * 3 - 2);
}
