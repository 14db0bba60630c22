#include "dpcolor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dpcolor/errors.hpp"

namespace dpc {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int SimpleGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string SimpleGraph::label(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

std::vector<int> SimpleGraph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool SimpleGraph::connected() const {
    auto c = components();
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

SimpleGraph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (!s.empty() && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("truncated graph6: empty input", 0);
    std::size_t pos = 0;
    int n;
    if (s[0] == '~') throw ParseError("graph6 with n > 62 not supported", 0);
    if (s[0] < 63 || s[0] > 126) throw ParseError("graph6 header byte out of range", 0);
    n = s[0] - 63;
    pos = 1;
    if (n < 1) throw ParseError("graph6 with zero vertices", 0);

    std::vector<std::pair<int, int>> edges;
    int bits_needed = n * (n - 1) / 2;
    int bit = 0;
    int cur = 0, mask = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (mask == 0) {
                if (pos >= s.size()) throw ParseError("truncated graph6 bit stream", pos);
                char c = s[pos];
                if (c < 63 || c > 126) throw ParseError("graph6 body byte out of range", pos);
                cur = c - 63;
                mask = 0x20;
                ++pos;
            }
            if (cur & mask) edges.emplace_back(u, v);
            mask >>= 1;
            ++bit;
        }
    }
    (void)bits_needed;
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return SimpleGraph(n, std::move(edges));
}

std::string to_graph6(const SimpleGraph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6 with n > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int cur = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((cur << (6 - nbits)) + 63));
    return out;
}

SimpleGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw ParseError("edge-list header must be \"n m\"", 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) {
            auto pos = in.tellg();
            throw ParseError("edge-list truncated at edge " + std::to_string(i),
                             pos == -1 ? text.size() : static_cast<std::size_t>(pos));
        }
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h) {
    int nh = h.n();
    int n = g.n() * nh;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < nh; ++v)
            labels[u * nh + v] = "(" + g.label(u) + "," + h.label(v) + ")";
    for (int u = 0; u < g.n(); ++u)
        for (auto [v, w] : h.edges()) edges.emplace_back(u * nh + v, u * nh + w);
    for (auto [u, w] : g.edges())
        for (int v = 0; v < nh; ++v) edges.emplace_back(u * nh + v, w * nh + v);
    return SimpleGraph(n, std::move(edges), std::move(labels));
}

SimpleGraph complete_bipartite(int l, int t) {
    if (l < 1) throw std::invalid_argument("complete_bipartite requires l >= 1");
    if (t < 0) throw std::invalid_argument("complete_bipartite requires t >= 0");
    int n = l + t;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int j = 0; j < l; ++j) labels[j] = "x" + std::to_string(j + 1);
    for (int q = 0; q < t; ++q) labels[l + q] = "y" + std::to_string(q + 1);
    for (int j = 0; j < l; ++j)
        for (int q = 0; q < t; ++q) edges.emplace_back(j, l + q);
    return SimpleGraph(n, std::move(edges), std::move(labels));
}

SimpleGraph join_graphs(const SimpleGraph& g, const SimpleGraph& h) {
    int n = g.n() + h.n();
    std::vector<std::pair<int, int>> edges(g.edges());
    for (auto [u, v] : h.edges()) edges.emplace_back(g.n() + u, g.n() + v);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) edges.emplace_back(u, g.n() + v);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n, {}); }

SimpleGraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer 5-cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
    }
    return SimpleGraph(10, std::move(edges));
}

SimpleGraph named_graph(const std::string& name) {
    if (name == "Petersen" || name == "petersen") return petersen_graph();
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
        auto comma = name.find(',');
        try {
            if (name[0] == 'K' && comma != std::string::npos) {
                int l = std::stoi(name.substr(1, comma - 1));
                int t = std::stoi(name.substr(comma + 1));
                return complete_bipartite(l, t);
            }
            int n = std::stoi(name.substr(1));
            if (name[0] == 'K') return complete_graph(n);
            if (name[0] == 'C') return cycle_graph(n);
            return path_graph(n);
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

SimpleGraph delete_edge(const SimpleGraph& g, int edge_idx) {
    auto edges = g.edges();
    edges.erase(edges.begin() + edge_idx);
    return SimpleGraph(g.n(), std::move(edges), g.labels());
}

SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
    std::vector<int> verts;
    for (int u = 0; u < g.n(); ++u)
        if (u != v) verts.push_back(u);
    return induced_subgraph(g, verts);
}

SimpleGraph contract_edge(const SimpleGraph& g, int edge_idx) {
    auto [a, b] = g.edges()[edge_idx];  // a < b: b merges into a
    std::vector<std::pair<int, int>> edges;
    auto remap = [&](int v) {
        if (v == b) return a;
        return v > b ? v - 1 : v;
    };
    for (auto [u, v] : g.edges()) {
        int ru = remap(u), rv = remap(v);
        if (ru != rv) edges.emplace_back(ru, rv);
    }
    return SimpleGraph(g.n() - 1, std::move(edges));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (int v : verts) labels.push_back(g.labels()[v]);
    return SimpleGraph(static_cast<int>(verts.size()), std::move(edges), std::move(labels));
}

}  // namespace dpc
