#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dpc {

// Finite simple undirected graph. Vertices are 0..n-1; edges are stored as
// sorted unique pairs (u,v) with u < v. Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph() : n_(1) {}
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges,
                std::vector<std::string> labels = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    // Index into edges() of {u,v}, or -1 if not an edge.
    int edge_index(int u, int v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

    bool connected() const;
    // Component id per vertex, ids 0..(#components-1) by lowest vertex.
    std::vector<int> components() const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// graph6 text format (standard nauty encoding), n <= 62 supported.
SimpleGraph parse_graph6(const std::string& text);
std::string to_graph6(const SimpleGraph& g);

// Edge-list text format: "n m\nu v\n...".
SimpleGraph parse_edge_list(const std::string& text);
std::string to_edge_list(const SimpleGraph& g);

// Vertex (u,v) of the product has index u*h.n()+v; labels record the pair.
SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h);

// K_{l,t} with partite sets X = {x_1..x_l} (indices 0..l-1) first, then
// Y = {y_1..y_t} (indices l..l+t-1). t = 0 is allowed.
SimpleGraph complete_bipartite(int l, int t);

// Disjoint union plus all cross edges; g's vertices keep their indices.
SimpleGraph join_graphs(const SimpleGraph& g, const SimpleGraph& h);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph petersen_graph();

// Shorthand names: "K4", "C5", "P3", "K2,3", "Petersen".
SimpleGraph named_graph(const std::string& name);

SimpleGraph delete_edge(const SimpleGraph& g, int edge_idx);
SimpleGraph delete_vertex(const SimpleGraph& g, int v);
// Contract edge, dropping any resulting parallel edges; the merged vertex
// takes the lower endpoint's slot and the higher index disappears.
SimpleGraph contract_edge(const SimpleGraph& g, int edge_idx);
// Induced subgraph on `verts` (kept order defines new indices).
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts);

}  // namespace dpc
