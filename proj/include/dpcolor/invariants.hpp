#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>

#include "dpcolor/cover.hpp"
#include "dpcolor/solver.hpp"

namespace dpc {

struct EnumOptions {
    std::uint64_t cover_cap = 10'000'000;
    std::uint64_t node_cap = 10'000'000;
    int threads = 1;
};

// Gauge-reduced enumeration of full k-fold covers of a connected graph:
// one representative per gauge class, with identity matchings on the BFS
// spanning tree and each non-tree edge ranging over all k! permutations in
// lexicographic order (later non-tree edges vary fastest). Total count is
// k!^(m-n+1). Deleting matched pairs never decreases the transversal count,
// so minima of P_DP over all covers are attained on full covers; gauge
// relabeling is count-preserving, so one representative per class suffices.
class FullCoverSpace {
public:
    FullCoverSpace(const SimpleGraph& g, int k, std::uint64_t cover_cap = 10'000'000);
    std::uint64_t size() const { return size_; }
    Cover cover_at(std::uint64_t idx) const;
    // True iff every non-tree permutation at idx is the identity.
    bool is_canonical_index(std::uint64_t idx) const;

private:
    SimpleGraph g_;
    int k_;
    std::vector<int> free_edges_;             // non-tree edge indices
    std::vector<std::vector<int>> perms_;     // all k! permutations, lexicographic
    std::uint64_t size_;
};

std::vector<Cover> enumerate_full_covers(const SimpleGraph& g, int k,
                                         const EnumOptions& opts = {});

// Brute-force oracle: every cover of g including partial matchings, no
// symmetry reduction. Tiny instances only.
std::vector<Cover> enumerate_all_covers(const SimpleGraph& g, int k,
                                        const EnumOptions& opts = {});
bool for_each_cover(const SimpleGraph& g, int k, const std::function<bool(const Cover&)>& visit,
                    const EnumOptions& opts = {});

// Exact DP color function P_DP(g,k): minimum transversal count over full
// k-fold covers (gauge-reduced). Disconnected inputs are split into
// components and the component values multiplied.
mpz_class p_dp(const SimpleGraph& g, int k, const EnumOptions& opts = {});

// Smallest k such that every full k-fold cover admits a transversal.
int chi_dp(const SimpleGraph& g, const EnumOptions& opts = {});

// First gauge-reduced full k-fold cover with no transversal, in enumeration
// order, or nullopt.
std::optional<Cover> find_bad_full_cover(const SimpleGraph& g, int k,
                                         const EnumOptions& opts = {});

// True iff no bad k-fold cover of g has a non-perfect matching. Checked via
// single-pair deletions of bad full covers (monotonicity closes the gap).
bool every_bad_cover_full(const SimpleGraph& g, int k, const EnumOptions& opts = {});

enum class RobustMode { reduced, oracle };

struct RobustResult {
    bool robust = false;
    bool critical = false;
    // A non-canonical bad (k-1)-fold cover, present when robust is false
    // because of such a cover.
    std::optional<Cover> witness;
};

// g is robustly k-critical iff it is k-critical and every bad (k-1)-fold
// cover is canonical. Reduced mode checks (a) every full non-canonical
// gauge-reduced (k-1)-fold cover has a transversal and (b) every single
// matched-pair deletion from the canonical (k-1)-fold cover has a
// transversal; monotonicity extends (b) to all deeper deletions and (a)
// covers all full classes, so together they decide the definition. Oracle
// mode enumerates every cover literally.
RobustResult is_robustly_critical(const SimpleGraph& g, int k, RobustMode mode = RobustMode::reduced,
                                  const EnumOptions& opts = {});

// min{chi_dp_g + col_h, chi_dp_h + col_g} - 1.
int product_upper_bound(int chi_dp_g, int col_g, int chi_dp_h, int col_h);

}  // namespace dpc
