#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpc {

// A DP-cover of `base`: per-vertex color lists L(v) of size fold[v]
// (colors are addressed as (vertex, index) pairs; the cover graph is never
// materialized), and for each base edge uv with u < v a partial injective
// map from indices of L(u) to indices of L(v), -1 meaning unmatched.
struct Cover {
    SimpleGraph base;
    std::vector<int> fold;                    // list size per vertex
    std::vector<std::vector<int>> matchings;  // parallel to base.edges()

    Cover() = default;
    Cover(SimpleGraph base_, std::vector<int> fold_, std::vector<std::vector<int>> matchings_)
        : base(std::move(base_)), fold(std::move(fold_)), matchings(std::move(matchings_)) {}

    bool uniform_fold() const;
    // Uniform fold value; throws if folds differ.
    int uniform_k() const;
    const std::vector<int>& matching(int u, int v) const;  // u < v required
};

// One chosen color index per vertex.
struct Transversal {
    std::vector<int> choice;
};

// True iff for every base edge uv (u<v) with matching m:
// m[choice[u]] != choice[v].
bool check_transversal(const Cover& c, const Transversal& t);

// Empty iff the cover is structurally valid; otherwise one message per
// violation (non-injective matching, bad index, shape mismatch).
std::vector<std::string> validate_cover(const Cover& c);

// k-fold cover with the identity matching on every edge.
Cover canonical_cover(const SimpleGraph& g, int k);

// Every matching is a full permutation of [k]. Requires uniform fold.
bool is_full(const Cover& c);

struct CanonicalLabeling {
    std::vector<std::vector<int>> relabel;  // per-vertex bijection on [k]
};

// A labeling exists iff the cover is full and every cycle holonomy is the
// identity. Identity is fixed on the lowest-index vertex of each component,
// propagated along a BFS spanning tree, then every non-tree edge is checked.
std::optional<CanonicalLabeling> find_canonical_labeling(const Cover& c);
bool is_canonical(const Cover& c);

// Applies per-vertex relabelings rho: color (v,i) becomes (v, rho[v][i]).
// Matching maps transform as rho_v . m . rho_u^{-1}; transversal counts are
// preserved.
Cover apply_relabeling(const Cover& c, const std::vector<std::vector<int>>& rho);

// Induced subcover on a vertex subset (kept order defines new indices).
Cover subcover_induced(const Cover& c, const std::vector<int>& verts);

// Subcover corresponding to a subgraph: induce on `verts`, then keep
// matchings only on edges of `sub` (given in the induced index space).
Cover subcover_corresponding(const Cover& c, const std::vector<int>& verts,
                             const SimpleGraph& sub);

// Relabels lists so that all matchings on the BFS spanning tree (root 0,
// children in increasing index order) become identity. Requires a full
// uniform cover with connected base. If `relabelings` is non-null it
// receives the applied per-vertex bijections.
Cover gauge_normalize(const Cover& c, std::vector<std::vector<int>>* relabelings = nullptr);

// BFS spanning tree edge indices (root 0, children in increasing index
// order); requires connected base.
std::vector<int> bfs_tree_edges(const SimpleGraph& g);

}  // namespace dpc
