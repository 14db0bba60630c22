#include "dpcolor/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "dpcolor/coloring.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/parallel.hpp"

namespace dpc {

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

FullCoverSpace::FullCoverSpace(const SimpleGraph& g, int k, std::uint64_t cover_cap)
    : g_(g), k_(k) {
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    if (!g.connected())
        throw std::invalid_argument("full-cover enumeration requires a connected graph");
    auto tree = bfs_tree_edges(g);
    std::vector<bool> in_tree(g.m(), false);
    for (int e : tree) in_tree[e] = true;
    for (int e = 0; e < g.m(); ++e)
        if (!in_tree[e]) free_edges_.push_back(e);
    perms_ = all_permutations(k);
    std::uint64_t fact = factorial_u64(k);
    size_ = 1;
    for (std::size_t i = 0; i < free_edges_.size(); ++i) {
        if (size_ > cover_cap / std::max<std::uint64_t>(fact, 1))
            throw CapExceeded("full-cover enumeration exceeds cover cap");
        size_ *= fact;
    }
    if (size_ > cover_cap) throw CapExceeded("full-cover enumeration exceeds cover cap");
}

Cover FullCoverSpace::cover_at(std::uint64_t idx) const {
    Cover c = canonical_cover(g_, k_);
    std::uint64_t fact = perms_.size();
    // Mixed radix, last free edge varies fastest.
    for (auto it = free_edges_.rbegin(); it != free_edges_.rend(); ++it) {
        c.matchings[*it] = perms_[idx % fact];
        idx /= fact;
    }
    return c;
}

bool FullCoverSpace::is_canonical_index(std::uint64_t idx) const {
    std::uint64_t fact = perms_.size();
    for (std::size_t i = 0; i < free_edges_.size(); ++i) {
        if (idx % fact != 0) return false;
        idx /= fact;
    }
    return true;
}

std::vector<Cover> enumerate_full_covers(const SimpleGraph& g, int k, const EnumOptions& opts) {
    FullCoverSpace space(g, k, opts.cover_cap);
    std::vector<Cover> out;
    out.reserve(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.cover_at(i));
    return out;
}

namespace {

// All partial injective maps [k] -> [k] u {-1}, ordered lexicographically
// with -1 first.
std::vector<std::vector<int>> all_partial_matchings(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(k, -1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.push_back(m);
            return;
        }
        m[i] = -1;
        self(self, i + 1);
        for (int img = 0; img < k; ++img) {
            bool used = false;
            for (int j = 0; j < i; ++j)
                if (m[j] == img) used = true;
            if (used) continue;
            m[i] = img;
            self(self, i + 1);
        }
        m[i] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool for_each_cover(const SimpleGraph& g, int k, const std::function<bool(const Cover&)>& visit,
                    const EnumOptions& opts) {
    auto choices = all_partial_matchings(k);
    std::uint64_t per_edge = choices.size();
    std::uint64_t total = 1;
    for (int e = 0; e < g.m(); ++e) {
        if (total > opts.cover_cap / std::max<std::uint64_t>(per_edge, 1))
            throw CapExceeded("all-cover enumeration exceeds cover cap");
        total *= per_edge;
    }
    if (total > opts.cover_cap) throw CapExceeded("all-cover enumeration exceeds cover cap");
    Cover c = canonical_cover(g, k);
    std::vector<std::uint64_t> digit(g.m(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int e = g.m() - 1; e >= 0; --e) {
            c.matchings[e] = choices[rest % per_edge];
            rest /= per_edge;
        }
        if (!visit(c)) return false;
    }
    return true;
}

std::vector<Cover> enumerate_all_covers(const SimpleGraph& g, int k, const EnumOptions& opts) {
    std::vector<Cover> out;
    for_each_cover(
        g, k,
        [&](const Cover& c) {
            out.push_back(c);
            return true;
        },
        opts);
    return out;
}

namespace {

mpz_class p_dp_connected(const SimpleGraph& g, int k, const EnumOptions& opts) {
    FullCoverSpace space(g, k, opts.cover_cap);
    SolveOptions sopts{opts.node_cap};
    std::mutex mu;
    std::optional<mpz_class> best;
    parallel_ranges(space.size(), opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::optional<mpz_class> local;
        for (std::uint64_t i = lo; i < hi; ++i) {
            mpz_class cnt = count_transversals(space.cover_at(i), sopts);
            if (!local || cnt < *local) local = cnt;
            if (*local == 0) break;  // can't go lower
        }
        if (local) {
            std::lock_guard<std::mutex> g_(mu);
            if (!best || *local < *best) best = *local;
        }
    });
    return best.value_or(0);
}

std::optional<std::uint64_t> find_bad_index(const SimpleGraph& g, int k, const EnumOptions& opts) {
    FullCoverSpace space(g, k, opts.cover_cap);
    SolveOptions sopts{opts.node_cap};
    std::atomic<std::uint64_t> best{space.size()};
    parallel_ranges(space.size(), opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i >= best.load()) return;
            if (!find_transversal(space.cover_at(i), sopts)) {
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    });
    std::uint64_t idx = best.load();
    if (idx == space.size()) return std::nullopt;
    return idx;
}

}  // namespace

mpz_class p_dp(const SimpleGraph& g, int k, const EnumOptions& opts) {
    auto comp = g.components();
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (ncomp == 1) return p_dp_connected(g, k, opts);
    mpz_class result = 1;
    for (int ci = 0; ci < ncomp; ++ci) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == ci) verts.push_back(v);
        result *= p_dp_connected(induced_subgraph(g, verts), k, opts);
    }
    return result;
}

std::optional<Cover> find_bad_full_cover(const SimpleGraph& g, int k, const EnumOptions& opts) {
    FullCoverSpace space(g, k, opts.cover_cap);
    auto idx = find_bad_index(g, k, opts);
    if (!idx) return std::nullopt;
    return space.cover_at(*idx);
}

int chi_dp(const SimpleGraph& g, const EnumOptions& opts) {
    auto comp = g.components();
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (ncomp > 1) {
        int best = 1;
        for (int ci = 0; ci < ncomp; ++ci) {
            std::vector<int> verts;
            for (int v = 0; v < g.n(); ++v)
                if (comp[v] == ci) verts.push_back(v);
            best = std::max(best, chi_dp(induced_subgraph(g, verts), opts));
        }
        return best;
    }
    int ub = coloring_number(g);
    for (int k = 1; k < ub; ++k)
        if (!find_bad_index(g, k, opts)) return k;
    return ub;  // chi_dp <= col always holds
}

bool every_bad_cover_full(const SimpleGraph& g, int k, const EnumOptions& opts) {
    FullCoverSpace space(g, k, opts.cover_cap);
    SolveOptions sopts{opts.node_cap};
    std::atomic<bool> ok{true};
    parallel_ranges(space.size(), opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi && ok.load(); ++i) {
            Cover c = space.cover_at(i);
            if (find_transversal(c, sopts)) continue;
            // Bad full cover: all of its single-pair deletions must stay
            // colorable, else a non-full bad cover exists.
            for (int e = 0; e < c.base.m() && ok.load(); ++e) {
                for (int j = 0; j < k; ++j) {
                    Cover d = c;
                    d.matchings[e][j] = -1;
                    if (!find_transversal(d, sopts)) {
                        ok.store(false);
                        break;
                    }
                }
            }
        }
    });
    return ok.load();
}

RobustResult is_robustly_critical(const SimpleGraph& g, int k, RobustMode mode,
                                  const EnumOptions& opts) {
    RobustResult res;
    res.critical = is_k_critical(g, k, opts.node_cap);
    if (!res.critical) return res;
    int kk = k - 1;
    SolveOptions sopts{opts.node_cap};
    if (mode == RobustMode::oracle) {
        std::optional<Cover> witness;
        for_each_cover(
            g, kk,
            [&](const Cover& c) {
                if (!find_transversal(c, sopts) && !is_canonical(c)) {
                    witness = c;
                    return false;
                }
                return true;
            },
            opts);
        if (witness) {
            res.witness = witness;
            return res;
        }
        res.robust = true;
        return res;
    }
    // Reduced mode. Critical graphs are connected, so gauge enumeration applies.
    // (a) every full non-canonical gauge class must be colorable.
    {
        FullCoverSpace space(g, kk, opts.cover_cap);
        std::mutex mu;
        std::optional<std::uint64_t> bad_idx;
        parallel_ranges(space.size(), opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                {
                    std::lock_guard<std::mutex> g_(mu);
                    if (bad_idx && *bad_idx <= i) return;
                }
                if (space.is_canonical_index(i)) continue;
                if (!find_transversal(space.cover_at(i), sopts)) {
                    std::lock_guard<std::mutex> g_(mu);
                    if (!bad_idx || i < *bad_idx) bad_idx = i;
                    return;
                }
            }
        });
        if (bad_idx) {
            res.witness = space.cover_at(*bad_idx);
            return res;
        }
    }
    // (b) every single matched-pair deletion from the canonical cover must be
    // colorable; by monotonicity this covers all proper subcovers.
    Cover canon = canonical_cover(g, kk);
    for (int e = 0; e < g.m(); ++e) {
        for (int j = 0; j < kk; ++j) {
            Cover d = canon;
            d.matchings[e][j] = -1;
            if (!find_transversal(d, sopts)) {
                res.witness = d;
                return res;
            }
        }
    }
    res.robust = true;
    return res;
}

int product_upper_bound(int chi_dp_g, int col_g, int chi_dp_h, int col_h) {
    if (chi_dp_g < 1 || col_g < 1 || chi_dp_h < 1 || col_h < 1)
        throw std::invalid_argument("product_upper_bound arguments must be >= 1");
    return std::min(chi_dp_g + col_h, chi_dp_h + col_g) - 1;
}

}  // namespace dpc
