#include "dpcolor/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "dpcolor/errors.hpp"

namespace dpc {

bool is_proper(const SimpleGraph& g, const std::vector<int>& assignment) {
    for (auto [u, v] : g.edges())
        if (assignment[u] == assignment[v]) return false;
    return true;
}

std::vector<int> degeneracy_ordering(const SimpleGraph& g) {
    int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

int coloring_number(const SimpleGraph& g) {
    auto order = degeneracy_ordering(g);
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    int d = 0;
    for (int i = 0; i < n; ++i) {
        int back = 0;
        for (int w : g.neighbors(order[i]))
            if (pos[w] < i) ++back;
        d = std::max(d, back);
    }
    return d + 1;
}

namespace {

// Backtracking k-colorability along a fixed order with new-color symmetry
// breaking: vertex i may use at most one color beyond the max used so far.
bool colorable_rec(const SimpleGraph& g, const std::vector<int>& order, std::vector<int>& color,
                   int i, int maxused, int k, std::uint64_t& nodes, std::uint64_t cap) {
    if (i == static_cast<int>(order.size())) return true;
    int v = order[i];
    int limit = std::min(k - 1, maxused + 1);
    for (int c = 0; c <= limit; ++c) {
        if (++nodes > cap) throw CapExceeded("chromatic_number node cap exceeded");
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable_rec(g, order, color, i + 1, std::max(maxused, c), k, nodes, cap))
            return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

bool is_k_colorable(const SimpleGraph& g, int k, std::uint64_t node_cap) {
    if (k <= 0) return g.n() == 0;
    auto order = degeneracy_ordering(g);
    std::vector<int> color(g.n(), -1);
    std::uint64_t nodes = 0;
    return colorable_rec(g, order, color, 0, -1, k, nodes, node_cap);
}

int chromatic_number(const SimpleGraph& g, std::uint64_t node_cap) {
    int ub = coloring_number(g);
    for (int k = 1; k < ub; ++k)
        if (is_k_colorable(g, k, node_cap)) return k;
    return ub;
}

bool is_k_critical(const SimpleGraph& g, int k, std::uint64_t node_cap) {
    if (k < 2) throw std::invalid_argument("is_k_critical requires k >= 2");
    if (chromatic_number(g, node_cap) != k) return false;
    for (int e = 0; e < g.m(); ++e)
        if (!is_k_colorable(delete_edge(g, e), k - 1, node_cap)) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (g.n() == 1) break;
        if (!is_k_colorable(delete_vertex(g, v), k - 1, node_cap)) return false;
    }
    return true;
}

namespace {

// Canonical 28-bit edge mask over all vertex relabelings; only for n <= 8.
std::uint32_t canonical_mask(const SimpleGraph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto mask_of = [&](const std::vector<int>& p) {
        std::uint32_t m = 0;
        for (auto [u, v] : g.edges()) {
            int a = p[u], b = p[v];
            if (a > b) std::swap(a, b);
            m |= 1u << (b * (b - 1) / 2 + a);
        }
        return m;
    };
    std::uint32_t best = mask_of(perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, mask_of(perm));
    return best;
}

void for_each_proper_coloring(const SimpleGraph& g, int k,
                              const std::function<void(const std::vector<int>&)>& emit,
                              std::uint64_t& nodes, std::uint64_t cap) {
    int n = g.n();
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            emit(color);
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (++nodes > cap) throw CapExceeded("coloring enumeration cap exceeded");
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
}

mpz_class count_colorings_direct(const SimpleGraph& g, int k, std::uint64_t& nodes,
                                 std::uint64_t cap) {
    mpz_class total = 0;
    for_each_proper_coloring(g, k, [&](const std::vector<int>&) { ++total; }, nodes, cap);
    return total;
}

using Memo = std::map<std::tuple<int, std::uint32_t, int>, mpz_class>;

mpz_class chrompoly_rec(const SimpleGraph& g, int k, Memo& memo, std::uint64_t& nodes,
                        std::uint64_t cap) {
    if (g.m() == 0) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(g.n()));
        return r;
    }
    if (k == 0) return 0;
    // Direct enumeration when the assignment space is small.
    double space = std::pow(static_cast<double>(k), g.n());
    if (space <= 1e6) return count_colorings_direct(g, k, nodes, cap);

    bool memoize = g.n() <= 8;
    std::uint32_t key = 0;
    if (memoize) {
        key = canonical_mask(g);
        auto it = memo.find({g.n(), key, k});
        if (it != memo.end()) return it->second;
    }
    if (++nodes > cap) throw CapExceeded("deletion-contraction node cap exceeded");
    // Pivot: edge whose endpoints have the largest degrees.
    int best = 0, best_score = -1;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        int score = g.degree(u) + g.degree(v) + std::max(g.degree(u), g.degree(v)) * g.n();
        if (score > best_score) {
            best_score = score;
            best = e;
        }
    }
    mpz_class r = chrompoly_rec(delete_edge(g, best), k, memo, nodes, cap) -
                  chrompoly_rec(contract_edge(g, best), k, memo, nodes, cap);
    if (memoize) memo[{g.n(), key, k}] = r;
    return r;
}

}  // namespace

mpz_class chromatic_polynomial_eval(const SimpleGraph& g, int k, std::uint64_t cap) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Memo memo;
    std::uint64_t nodes = 0;
    return chrompoly_rec(g, k, memo, nodes, cap);
}

std::vector<ProperColoring> enumerate_proper_colorings(const SimpleGraph& g, int k,
                                                       std::uint64_t cap) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    double space = std::pow(static_cast<double>(std::max(k, 1)), g.n());
    if (space > static_cast<double>(cap))
        throw CapExceeded("k^n exceeds enumeration cap");
    std::vector<ProperColoring> out;
    std::uint64_t nodes = 0;
    for_each_proper_coloring(
        g, k, [&](const std::vector<int>& a) { out.push_back({a, k}); }, nodes, cap);
    return out;
}

}  // namespace dpc
