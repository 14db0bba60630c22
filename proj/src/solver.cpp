#include "dpcolor/solver.hpp"

#include <bit>
#include <stdexcept>

#include "dpcolor/errors.hpp"

namespace dpc {

namespace {

struct Searcher {
    const Cover& c;
    int n;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> domain;
    std::vector<int> assigned;  // color index or -1
    // For each vertex: (neighbor, map color-of-vertex -> forbidden neighbor color or -1).
    std::vector<std::vector<std::pair<int, std::vector<int>>>> fwd;
    std::vector<std::pair<int, int>> trail;  // (vertex, color bit removed)
    std::vector<int> assign_trail;
    const std::function<bool(const Transversal&)>& visit;
    bool stopped = false;

    Searcher(const Cover& cover, std::uint64_t cap,
             const std::function<bool(const Transversal&)>& visit_)
        : c(cover), n(cover.base.n()), node_cap(cap), visit(visit_) {
        domain.resize(n);
        assigned.assign(n, -1);
        fwd.resize(n);
        for (int v = 0; v < n; ++v) {
            if (c.fold[v] > 63) throw std::invalid_argument("fold > 63 unsupported");
            domain[v] = c.fold[v] == 0 ? 0 : ((std::uint64_t{1} << c.fold[v]) - 1);
        }
        for (int e = 0; e < c.base.m(); ++e) {
            auto [u, v] = c.base.edges()[e];
            const auto& m = c.matchings[e];
            std::vector<int> inv(c.fold[v], -1);
            for (int i = 0; i < static_cast<int>(m.size()); ++i)
                if (m[i] >= 0) inv[m[i]] = i;
            fwd[u].emplace_back(v, m);
            fwd[v].emplace_back(u, std::move(inv));
        }
    }

    bool remove(int w, int color) {  // returns false on wipeout
        std::uint64_t bit = std::uint64_t{1} << color;
        if (!(domain[w] & bit)) return true;
        domain[w] &= ~bit;
        trail.emplace_back(w, color);
        return domain[w] != 0;
    }

    // Assign v <- color, forward check, and unit-propagate. Returns false on
    // conflict. All reductions land on the trail for undo.
    bool assign(int v, int color) {
        assigned[v] = color;
        assign_trail.push_back(v);
        std::vector<int> queue;
        for (const auto& [w, map] : fwd[v]) {
            if (assigned[w] >= 0) {
                if (map[color] == assigned[w]) return false;
                continue;
            }
            int f = map[color];
            if (f >= 0) {
                if (!remove(w, f)) return false;
                if (std::has_single_bit(domain[w])) queue.push_back(w);
            }
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int w = queue[qi];
            if (assigned[w] >= 0) continue;
            int wc = std::countr_zero(domain[w]);
            assigned[w] = wc;
            assign_trail.push_back(w);
            for (const auto& [x, map] : fwd[w]) {
                if (assigned[x] >= 0) {
                    if (map[wc] == assigned[x]) return false;
                    continue;
                }
                int f = map[wc];
                if (f >= 0) {
                    if (!remove(x, f)) return false;
                    if (std::has_single_bit(domain[x])) queue.push_back(x);
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t trail_mark, std::size_t assign_mark) {
        while (trail.size() > trail_mark) {
            auto [w, color] = trail.back();
            trail.pop_back();
            domain[w] |= std::uint64_t{1} << color;
        }
        while (assign_trail.size() > assign_mark) {
            assigned[assign_trail.back()] = -1;
            assign_trail.pop_back();
        }
    }

    // Most-constrained unassigned vertex: smallest domain/degree ratio
    // (compared exactly as s_a * d_b < s_b * d_a), ties by lowest index.
    int select() const {
        int best = -1;
        long best_size = 0, best_deg = 1;
        for (int v = 0; v < n; ++v) {
            if (assigned[v] >= 0) continue;
            long s = std::popcount(domain[v]);
            long d = c.base.degree(v);
            if (best < 0 || s * best_deg < best_size * d) {
                best_size = s;
                best_deg = d;
                best = v;
            }
        }
        return best;
    }

    // Decision mode: is there a transversal extending the current partial
    // assignment on `verts`? Splits into connected components of the
    // unassigned subgraph first — independent parts must not multiply each
    // other's backtracking. Leaves a witness assignment in place on success.
    bool decide(const std::vector<int>& verts) {
        std::vector<int> active;
        for (int v : verts)
            if (assigned[v] < 0) active.push_back(v);
        if (active.empty()) return true;

        std::vector<char> in_active(n, 0), seen(n, 0);
        for (int v : active) in_active[v] = 1;
        std::vector<std::vector<int>> comps;
        for (int s : active) {
            if (seen[s]) continue;
            comps.emplace_back();
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comps.back().push_back(v);
                for (int w : c.base.neighbors(v))
                    if (in_active[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        if (comps.size() > 1) {
            for (const auto& comp : comps)
                if (!decide(comp)) return false;
            return true;
        }

        int best = -1;
        long best_size = 0, best_deg = 1;
        for (int v : active) {
            long s = std::popcount(domain[v]);
            long d = c.base.degree(v);
            if (best < 0 || s * best_deg < best_size * d) {
                best_size = s;
                best_deg = d;
                best = v;
            }
        }
        std::uint64_t dom = domain[best];
        while (dom) {
            int color = std::countr_zero(dom);
            dom &= dom - 1;
            if (++nodes > node_cap) throw CapExceeded("transversal solver node cap exceeded");
            std::size_t tm = trail.size(), am = assign_trail.size();
            if (assign(best, color) && decide(active)) return true;
            undo_to(tm, am);
        }
        return false;
    }

    // Returns false if the visitor requested a stop.
    bool search() {
        int v = select();
        if (v < 0) {
            Transversal t{assigned};
            if (!visit(t)) {
                stopped = true;
                return false;
            }
            return true;
        }
        std::uint64_t dom = domain[v];
        while (dom) {
            int color = std::countr_zero(dom);
            dom &= dom - 1;
            if (++nodes > node_cap) throw CapExceeded("transversal solver node cap exceeded");
            std::size_t tm = trail.size(), am = assign_trail.size();
            if (assign(v, color)) {
                if (!search()) return false;
            }
            undo_to(tm, am);
        }
        return true;
    }
};

}  // namespace

bool for_each_transversal(const Cover& c, const std::function<bool(const Transversal&)>& visit,
                          const SolveOptions& opts) {
    for (int v = 0; v < c.base.n(); ++v)
        if (c.fold[v] == 0) return true;  // empty list: no transversal
    Searcher s(c, opts.node_cap, visit);
    s.search();
    return !s.stopped;
}

std::optional<Transversal> find_transversal(const Cover& c, const SolveOptions& opts) {
    for (int v = 0; v < c.base.n(); ++v)
        if (c.fold[v] == 0) return std::nullopt;
    static const std::function<bool(const Transversal&)> never = [](const Transversal&) {
        return true;
    };
    Searcher s(c, opts.node_cap, never);
    std::vector<int> all(c.base.n());
    for (int v = 0; v < c.base.n(); ++v) all[v] = v;
    if (!s.decide(all)) return std::nullopt;
    return Transversal{s.assigned};
}

mpz_class count_transversals(const Cover& c, const SolveOptions& opts) {
    mpz_class count = 0;
    for_each_transversal(
        c,
        [&](const Transversal&) {
            ++count;
            return true;
        },
        opts);
    return count;
}

std::vector<Transversal> enumerate_transversals(const Cover& c, const SolveOptions& opts) {
    std::vector<Transversal> out;
    for_each_transversal(
        c,
        [&](const Transversal& t) {
            out.push_back(t);
            return true;
        },
        opts);
    return out;
}

}  // namespace dpc
