#include "dpcolor/cover.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "dpcolor/errors.hpp"

namespace dpc {

bool Cover::uniform_fold() const {
    return std::all_of(fold.begin(), fold.end(), [&](int f) { return f == fold[0]; });
}

int Cover::uniform_k() const {
    if (!uniform_fold()) throw std::invalid_argument("cover fold is not uniform");
    return fold.empty() ? 0 : fold[0];
}

const std::vector<int>& Cover::matching(int u, int v) const {
    int e = base.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("matching requested on a non-edge");
    return matchings[e];
}

bool check_transversal(const Cover& c, const Transversal& t) {
    if (t.choice.size() != static_cast<std::size_t>(c.base.n())) return false;
    for (int v = 0; v < c.base.n(); ++v)
        if (t.choice[v] < 0 || t.choice[v] >= c.fold[v]) return false;
    for (int e = 0; e < c.base.m(); ++e) {
        auto [u, v] = c.base.edges()[e];
        int img = c.matchings[e][t.choice[u]];
        if (img >= 0 && img == t.choice[v]) return false;
    }
    return true;
}

std::vector<std::string> validate_cover(const Cover& c) {
    std::vector<std::string> report;
    auto edge_name = [&](int e) {
        auto [u, v] = c.base.edges()[e];
        return "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
    };
    if (c.fold.size() != static_cast<std::size_t>(c.base.n()))
        report.push_back("fold vector size does not match vertex count");
    if (c.matchings.size() != static_cast<std::size_t>(c.base.m()))
        report.push_back("matching count does not match edge count");
    if (!report.empty()) return report;
    for (int v = 0; v < c.base.n(); ++v)
        if (c.fold[v] < 0)
            report.push_back("negative fold at vertex " + std::to_string(v));
    for (int e = 0; e < c.base.m(); ++e) {
        auto [u, v] = c.base.edges()[e];
        const auto& m = c.matchings[e];
        if (m.size() != static_cast<std::size_t>(c.fold[u])) {
            report.push_back(edge_name(e) + ": matching domain size " + std::to_string(m.size()) +
                             " != fold " + std::to_string(c.fold[u]));
            continue;
        }
        std::vector<int> seen;
        for (int i = 0; i < c.fold[u]; ++i) {
            int img = m[i];
            if (img == -1) continue;
            if (img < 0 || img >= c.fold[v]) {
                report.push_back(edge_name(e) + ": index " + std::to_string(i) +
                                 " maps out of range (" + std::to_string(img) + ")");
                continue;
            }
            if (std::find(seen.begin(), seen.end(), img) != seen.end())
                report.push_back(edge_name(e) + ": not injective, target " + std::to_string(img) +
                                 " hit twice (second time from index " + std::to_string(i) + ")");
            seen.push_back(img);
        }
    }
    return report;
}

Cover canonical_cover(const SimpleGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("canonical_cover requires k >= 1");
    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    return Cover(g, std::vector<int>(g.n(), k),
                 std::vector<std::vector<int>>(g.m(), ident));
}

bool is_full(const Cover& c) {
    int k = c.uniform_k();
    for (const auto& m : c.matchings) {
        if (static_cast<int>(m.size()) != k) return false;
        std::vector<bool> hit(k, false);
        for (int img : m) {
            if (img < 0 || img >= k || hit[img]) return false;
            hit[img] = true;
        }
    }
    return true;
}

namespace {

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

// Inverse of a partial injective map, as a map from [target_fold].
std::vector<int> invert_partial(const std::vector<int>& m, int target_fold) {
    std::vector<int> inv(target_fold, -1);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] >= 0) inv[m[i]] = static_cast<int>(i);
    return inv;
}

// Matching of edge e read in the direction from -> to (full covers only).
std::vector<int> directed_matching(const Cover& c, int e, int from, int to) {
    auto [u, v] = c.base.edges()[e];
    if (from == u && to == v) return c.matchings[e];
    return invert_perm(c.matchings[e]);
}

}  // namespace

std::vector<int> bfs_tree_edges(const SimpleGraph& g) {
    if (!g.connected()) throw std::invalid_argument("bfs_tree_edges requires a connected graph");
    std::vector<bool> seen(g.n(), false);
    std::vector<int> tree;
    std::queue<int> q;
    seen[0] = true;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {  // increasing index order
            if (seen[w]) continue;
            seen[w] = true;
            tree.push_back(g.edge_index(v, w));
            q.push(w);
        }
    }
    return tree;
}

std::optional<CanonicalLabeling> find_canonical_labeling(const Cover& c) {
    int k = c.uniform_k();
    if (!is_full(c)) return std::nullopt;
    int n = c.base.n();
    std::vector<std::vector<int>> rho(n);
    std::vector<bool> have(n, false);
    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    // Per component: identity at the lowest-index vertex, propagate along a
    // BFS tree so every tree matching relabels to identity.
    for (int s = 0; s < n; ++s) {
        if (have[s]) continue;
        rho[s] = ident;
        have[s] = true;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : c.base.neighbors(v)) {
                if (have[w]) continue;
                int e = c.base.edge_index(v, w);
                // want rho_w . m_{v->w} . rho_v^{-1} == id  =>  rho_w = rho_v . m^{-1}
                auto m = directed_matching(c, e, v, w);
                rho[w] = compose(rho[v], invert_perm(m));
                have[w] = true;
                q.push(w);
            }
        }
    }
    // Every edge (including non-tree ones) must relabel to identity.
    for (int e = 0; e < c.base.m(); ++e) {
        auto [u, v] = c.base.edges()[e];
        auto relabeled = compose(rho[v], compose(c.matchings[e], invert_perm(rho[u])));
        if (relabeled != ident) return std::nullopt;
    }
    return CanonicalLabeling{rho};
}

bool is_canonical(const Cover& c) {
    return c.uniform_fold() && find_canonical_labeling(c).has_value();
}

Cover apply_relabeling(const Cover& c, const std::vector<std::vector<int>>& rho) {
    Cover out = c;
    for (int e = 0; e < c.base.m(); ++e) {
        auto [u, v] = c.base.edges()[e];
        const auto& m = c.matchings[e];
        std::vector<int> nm(m.size(), -1);
        auto inv_u = invert_perm(rho[u]);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            int img = m[inv_u[i]];
            nm[i] = img < 0 ? -1 : rho[v][img];
        }
        out.matchings[e] = nm;
    }
    return out;
}

Cover subcover_induced(const Cover& c, const std::vector<int>& verts) {
    SimpleGraph sub = induced_subgraph(c.base, verts);
    std::vector<int> fold;
    for (int v : verts) fold.push_back(c.fold[v]);
    std::vector<std::vector<int>> matchings(sub.m());
    for (int e = 0; e < sub.m(); ++e) {
        auto [a, b] = sub.edges()[e];
        int u = verts[a], v = verts[b];
        if (u < v)
            matchings[e] = c.matching(u, v);
        else
            matchings[e] = invert_partial(c.matching(v, u), c.fold[u]);
    }
    return Cover(std::move(sub), std::move(fold), std::move(matchings));
}

Cover subcover_corresponding(const Cover& c, const std::vector<int>& verts,
                             const SimpleGraph& sub) {
    Cover ind = subcover_induced(c, verts);
    if (sub.n() != ind.base.n())
        throw std::invalid_argument("subgraph vertex count mismatch");
    std::vector<std::vector<int>> matchings(sub.m());
    for (int e = 0; e < sub.m(); ++e) {
        auto [u, v] = sub.edges()[e];
        if (ind.base.edge_index(u, v) < 0)
            throw std::invalid_argument("sub is not a subgraph of the induced base");
        matchings[e] = ind.matching(u, v);
    }
    return Cover(sub, ind.fold, std::move(matchings));
}

Cover gauge_normalize(const Cover& c, std::vector<std::vector<int>>* relabelings) {
    int k = c.uniform_k();
    if (!is_full(c)) throw std::invalid_argument("gauge_normalize requires a full cover");
    if (!c.base.connected())
        throw std::invalid_argument("gauge_normalize requires a connected base");
    int n = c.base.n();
    std::vector<std::vector<int>> rho(n);
    std::vector<bool> have(n, false);
    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    rho[0] = ident;
    have[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : c.base.neighbors(v)) {
            if (have[w]) continue;
            int e = c.base.edge_index(v, w);
            auto m = directed_matching(c, e, v, w);
            rho[w] = compose(rho[v], invert_perm(m));
            have[w] = true;
            q.push(w);
        }
    }
    if (relabelings) *relabelings = rho;
    return apply_relabeling(c, rho);
}

}  // namespace dpc
