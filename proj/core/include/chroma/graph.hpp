#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chroma/errors.hpp"

namespace chroma {

using Edge = std::pair<int, int>;  // normalized u < v

// Simple undirected graph on vertices 0..n-1 with one 64-bit adjacency row
// per vertex. Values are cheap to copy and safe to share across threads;
// treat instances as immutable once built.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order, const std::vector<Edge>& edges);

    int order() const noexcept { return order_; }  // ν
    int size() const noexcept { return edge_count_; }  // ε

    bool adjacent(int u, int v) const;
    // Inserts edge uv; returns false if already present. Self-loops are
    // rejected.
    bool add_edge(int u, int v);

    std::uint64_t neighbourhood(int v) const;         // N(v) as a bitmask
    std::uint64_t closed_neighbourhood(int v) const;  // N[v]
    std::uint64_t vertex_mask() const noexcept;       // all vertices

    int degree(int v) const;
    int min_degree() const;  // 0 for the edgeless/empty graph
    int max_degree() const;
    bool has_pendant_vertex() const;

    bool is_connected() const;  // true for order <= 1
    bool is_complete() const;
    bool is_edgeless() const noexcept { return edge_count_ == 0; }

    std::vector<Edge> edges() const;  // lexicographically sorted

    Graph complemented() const;

    // Part sizes (ascending) when the graph is complete multipartite,
    // i.e. when the complement is a disjoint union of cliques.
    std::optional<std::vector<int>> complete_multipartite_parts() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int order_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> adj_;
};

// H's vertices are relabelled to ν(G)..ν(G)+ν(H)-1; no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus all ν(G)·ν(H) cross edges.
Graph join(const Graph& g, const Graph& h);

// One copy of g plus ν(g) copies of h; vertex i of g is joined to every
// vertex of the i-th copy, which occupies labels ν(g)+i·ν(h) ... +ν(h)-1.
Graph corona(const Graph& g, const Graph& h);

// --- generators ------------------------------------------------------

Graph make_path(int n);      // P_n, n >= 1
Graph make_cycle(int n);     // C_n, n >= 3
Graph make_complete(int n);  // K_n, n >= 1
Graph make_star(int leaves); // K_{1,m}, centre 0, order m+1
Graph make_wheel(int rim);   // hub 0 joined to C_rim, order rim+1, rim >= 3
Graph make_complete_multipartite(const std::vector<int>& parts);
// Seed-reproducible G(n,p): identical inputs give identical graphs on any
// platform (mt19937_64 with a fixed pair ordering).
Graph make_random(int n, double edge_probability, std::uint64_t seed);

// --- exhaustive labelled enumeration ----------------------------------

inline constexpr int kDefaultCensusOrderCap = 7;

// Edge masks index pairs (i,j), i<j, in graph6 column order:
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
std::uint64_t pair_count(int order);  // C(order, 2)
std::uint64_t edge_mask_of(const Graph& g);
Graph graph_from_edge_mask(int order, std::uint64_t mask);

// Visits every labelled graph on `order` vertices exactly once, in
// increasing edge-mask order. The visitor returns false to stop early.
void for_each_graph(int order, bool connected_only,
                    const std::function<bool(const Graph&)>& visit,
                    int order_cap = kDefaultCensusOrderCap);

}  // namespace chroma
