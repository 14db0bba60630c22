#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcolor/coloring.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/invariants.hpp"
#include "dpcolor/solver.hpp"

namespace dpc {

// Partition of the proper k-colorings of g by constant mod-k shift.
// Classes are ordered by lexicographically smallest member; within a class
// the members are ordered by shift amount j = 0..k-1 from that
// representative. Every class has exactly k members and any two distinct
// members disagree at every vertex.
struct ShiftClasses {
    int k = 0;
    std::vector<std::vector<int>> representatives;  // assignment vectors

    std::size_t class_count() const { return representatives.size(); }
    // Member `shift` of class `cls` (shift in [0,k)).
    std::vector<int> member(std::size_t cls, int shift) const;
};

ShiftClasses shift_classes(const SimpleGraph& g, int k, std::uint64_t cap = kDefaultNodeCap);

// A cover of g x K_{l,t} (Cartesian product, K vertices ordered X then Y)
// whose per-copy subcovers are canonical (identity matchings within every
// copy); cross matchings live only on edges between (u,x_j) and (u,y_q).
struct ProductCover {
    SimpleGraph g;  // the first factor
    int l = 0, t = 0;
    Cover cover;  // over cartesian_product(g, complete_bipartite(l,t))

    int fold() const { return cover.uniform_k(); }
    int kv() const { return l + t; }                               // |V(K)|
    int x_vertex(int u, int j) const { return u * kv() + j; }      // j in [0,l)
    int y_vertex(int u, int q) const { return u * kv() + l + q; }  // q in [0,t)
    // Cross matching L(u,x_j) -> L(u,y_q).
    const std::vector<int>& cross_matching(int u, int j, int q) const;
    std::vector<int>& cross_matching(int u, int j, int q);

    // Subcover induced on V(g) x X; vertex order (u,x_j) = u*l + j.
    Cover x_subcover() const;
};

// Copies canonical, all cross matchings empty.
ProductCover make_product_cover(const SimpleGraph& g, int k, int l, int t);

struct VolatilityReport {
    std::vector<int> x_choice;  // per (u,x_j) = u*l+j, the chosen color index
    int leaf = 0;               // q in [0,t)
    // Surviving color indices of L(u, y_leaf) per vertex u of g.
    std::vector<std::vector<int>> reduced_lists;
    // Number of distinct removed indices when removal is uniform across
    // vertices (as in both constructions); nullopt otherwise.
    std::optional<int> tau;
    bool is_volatile = false;
    // Extension of the X-coloring to the leaf copy when not volatile,
    // as original color indices of the leaf lists.
    std::optional<Transversal> witness;
};

// Builds the reduced cover on leaf q induced by the H_X-coloring `ix`
// (colors with a chosen neighbor removed) and solves it.
VolatilityReport check_volatile(const ProductCover& pc, const Transversal& ix, int q,
                                const SolveOptions& opts = {});

struct BadnessVerdict {
    bool bad = false;
    std::uint64_t x_colorings = 0;
    // When not bad: an H_X-coloring volatile for no leaf, assembled with its
    // per-leaf extensions into a transversal of the whole product cover.
    std::optional<Transversal> counterexample;
};

// The cover is bad iff every H_X-coloring is volatile for at least one leaf.
BadnessVerdict verify_bad_by_volatility(const ProductCover& pc, const EnumOptions& opts = {});

// Number of H_X-colorings volatile for leaf q.
std::uint64_t count_volatile(const ProductCover& pc, int q, const EnumOptions& opts = {});

// ceil( l*ln(k+l-1) / (ln((k-1)!) + l*ln(k+l-1) - ln((k-1)!*(k+l-1)^l - (k+l-1)!)) ).
// Evaluated exactly: the ceiling is the least c with (1-p)^c <= (k+l-1)^-l
// where p is the exact volatility probability, decided in rational
// arithmetic. Requires k >= 2, l >= 2.
int c_constant(int k, int l);

// c_constant(k,l) <= (l*(k-1)!*ln(k+l-1)/(k+l-1)!)*(k+l-1)^l, decided with
// directed-rounding interval evaluation.
bool c_bound_check(int k, int l);

// (k+l-1)! / ((k-1)! * (k+l-1)^l).
mpq_class volatility_probability_formula(int k, int l);
// Brute force over all ((k+l-1)!)^l bijection tuples, counting tau == l.
mpq_class volatility_probability_exact(int k, int l, std::uint64_t cap = 100'000'000);
double volatility_probability_montecarlo(int k, int l, std::uint64_t samples, std::uint64_t seed);

struct CoverCertificate;

// Deterministic star construction: canonical covers on
// every copy of g, shift class j paired with leaf y_j via the class-member
// cross matchings, surplus leaves empty. Requires g k-critical with
// chi_DP(g) = k (checked unless check_hypotheses is false) and t >= P(g,k)/k.
CoverCertificate build_star_bad_cover(const SimpleGraph& g, int k, int t,
                                      const EnumOptions& opts = {}, bool check_hypotheses = true);

// Randomized construction: blocks of l class indices, c = c_{k,l} leaves per
// block, uniformly random bijections per (block, copy, leaf), block-level
// verification with resampling. Requires l >= 2 and
// t >= c_{k,l} * (P(g,k+l-1)/(k+l-1))^l.
CoverCertificate build_random_bad_cover(const SimpleGraph& g, int k, int l, int t,
                                        std::uint64_t seed, const EnumOptions& opts = {},
                                        bool check_hypotheses = true);

// Assembles the star product cover: leaf j carries the member matchings of
// shift class j, leaves beyond the class count stay empty. Used by both the
// builder and certificate replay.
ProductCover assemble_star_cover(const SimpleGraph& g, int k, int t, const ShiftClasses& classes);

// Assembles the random product cover from per-block bijections
// (bijections[block][j][omega][z] = leaf color of class member z).
ProductCover assemble_random_cover(
    const SimpleGraph& g, int k, int l, int t, int c, const ShiftClasses& classes,
    const std::vector<std::vector<std::vector<std::vector<int>>>>& bijections);

struct FdpBracket {
    mpq_class lower;                // P_DP(g,k)/k
    mpq_class upper;                // P(g,k)/k
    std::optional<mpq_class> exact; // set when lower == upper
};

// Requires g robustly k-critical (verified).
FdpBracket f_dp_bracket(const SimpleGraph& g, int k, const EnumOptions& opts = {});

}  // namespace dpc
