#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpc {

constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

// Proper coloring with colors 0..k-1.
struct ProperColoring {
    std::vector<int> assignment;
    int k = 0;
};

bool is_proper(const SimpleGraph& g, const std::vector<int>& assignment);

// Vertex ordering witnessing the degeneracy (repeated minimum-degree removal,
// ties by lowest index), listed in the order vertices should be colored:
// each vertex has < col(G) neighbors among its predecessors.
std::vector<int> degeneracy_ordering(const SimpleGraph& g);

// Degeneracy + 1.
int coloring_number(const SimpleGraph& g);

bool is_k_colorable(const SimpleGraph& g, int k, std::uint64_t node_cap = kDefaultNodeCap);

// Exact chromatic number by backtracking, intended for n <= ~20.
int chromatic_number(const SimpleGraph& g, std::uint64_t node_cap = kDefaultNodeCap);

// chi(g) == k, chi(g - e) < k for every edge and chi(g - v) < k for every vertex.
bool is_k_critical(const SimpleGraph& g, int k, std::uint64_t node_cap = kDefaultNodeCap);

// Exact P(G,k) via deletion-contraction with memoization on canonical forms
// (n <= 8), direct enumeration when k^n is small.
mpz_class chromatic_polynomial_eval(const SimpleGraph& g, int k,
                                    std::uint64_t cap = kDefaultNodeCap);

// All proper k-colorings in lexicographic order of assignment vectors.
std::vector<ProperColoring> enumerate_proper_colorings(const SimpleGraph& g, int k,
                                                       std::uint64_t cap = kDefaultNodeCap);

}  // namespace dpc
