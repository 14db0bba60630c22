#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>

#include "dpcolor/cover.hpp"

namespace dpc {

struct SolveOptions {
    std::uint64_t node_cap = 10'000'000;
};

// Backtracking with per-vertex domain bitmasks, forward checking and unit
// propagation. Deterministic: most-constrained vertex first (ties by lowest
// index), lowest color index first.
std::optional<Transversal> find_transversal(const Cover& c, const SolveOptions& opts = {});

mpz_class count_transversals(const Cover& c, const SolveOptions& opts = {});

// Visits every transversal; the callback returns false to stop early.
// Returns false iff stopped early.
bool for_each_transversal(const Cover& c, const std::function<bool(const Transversal&)>& visit,
                          const SolveOptions& opts = {});

std::vector<Transversal> enumerate_transversals(const Cover& c, const SolveOptions& opts = {});

}  // namespace dpc
