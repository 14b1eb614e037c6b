#include "chroma/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace chroma {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(std::max(order, 0))) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in 0.." + std::to_string(kMaxOrder) +
                                    ", got " + std::to_string(order));
}

Graph Graph::from_edges(int order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(order_));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj_[u] & bit(v)) return false;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++edge_count_;
    return true;
}

std::uint64_t Graph::neighbourhood(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t Graph::closed_neighbourhood(int v) const {
    check_vertex(v);
    return adj_[v] | bit(v);
}

std::uint64_t Graph::vertex_mask() const noexcept {
    return order_ == 64 ? ~std::uint64_t{0} : (bit(order_) - 1);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) {
        int dv = std::popcount(adj_[v]);
        if (v == 0 || dv < d) d = dv;
    }
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

bool Graph::has_pendant_vertex() const {
    for (int v = 0; v < order_; ++v)
        if (std::popcount(adj_[v]) == 1) return true;
    return false;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

bool Graph::is_complete() const {
    return 2 * static_cast<std::int64_t>(edge_count_) ==
           static_cast<std::int64_t>(order_) * (order_ - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complemented() const {
    Graph g(order_);
    for (int v = 0; v < order_; ++v) g.adj_[v] = ~adj_[v] & ~bit(v) & vertex_mask();
    g.edge_count_ = static_cast<int>(pair_count(order_)) - edge_count_;
    return g;
}

std::optional<std::vector<int>> Graph::complete_multipartite_parts() const {
    // Parts are the connected components of the complement; each must be a
    // clique there (equivalently, an independent set here with no partial
    // adjacency to the rest).
    Graph comp = complemented();
    std::uint64_t unseen = vertex_mask();
    std::vector<int> parts;
    while (unseen) {
        int start = std::countr_zero(unseen);
        std::uint64_t component = bit(start), frontier = component;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= comp.adj_[v];
            }
            frontier = next & ~component;
            component |= next;
        }
        std::uint64_t members = component;
        while (members) {
            int v = std::countr_zero(members);
            members &= members - 1;
            if ((comp.adj_[v] | bit(v)) != component) return std::nullopt;  // not a clique
        }
        parts.push_back(std::popcount(component));
        unseen &= ~component;
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph corona(const Graph& g, const Graph& h) {
    Graph out(g.order() + g.order() * h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int i = 0; i < g.order(); ++i) {
        int base = g.order() + i * h.order();
        for (auto [u, v] : h.edges()) out.add_edge(base + u, base + v);
        for (int v = 0; v < h.order(); ++v) out.add_edge(i, base + v);
    }
    return out;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph order must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star must have >= 1 leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph make_wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel rim must be >= 3");
    Graph g(rim + 1);
    for (int v = 1; v <= rim; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v % rim + 1);
    }
    return g;
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be >= 1");
        n += p;
    }
    Graph g(n);
    int offset_u = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int offset_v = offset_u + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) g.add_edge(offset_u + u, offset_v + v);
            offset_v += parts[j];
        }
        offset_u += parts[i];
    }
    return g;
}

Graph make_random(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph order must be >= 1");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    // Threshold comparison keeps the draw bit-exact across platforms;
    // bernoulli_distribution would not be.
    const long double scale = 18446744073709551616.0L;  // 2^64
    const auto threshold = static_cast<unsigned __int128>(edge_probability * scale);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<unsigned __int128>(rng()) < threshold) g.add_edge(u, v);
    return g;
}

std::uint64_t pair_count(int order) {
    return static_cast<std::uint64_t>(order) * (order - 1) / 2;
}

std::uint64_t edge_mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    int p = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u, ++p)
            if (g.adjacent(u, v)) mask |= std::uint64_t{1} << p;
    return mask;
}

Graph graph_from_edge_mask(int order, std::uint64_t mask) {
    Graph g(order);
    int p = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++p)
            if (mask >> p & 1) g.add_edge(u, v);
    return g;
}

void for_each_graph(int order, bool connected_only,
                    const std::function<bool(const Graph&)>& visit, int order_cap) {
    if (order < 1) throw std::invalid_argument("enumeration order must be >= 1");
    if (order > order_cap)
        throw CapExceeded("exhaustive enumeration capped at order " + std::to_string(order_cap) +
                          " (2^C(n,2) graphs); asked for " + std::to_string(order));
    const std::uint64_t masks = std::uint64_t{1} << pair_count(order);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Graph g = graph_from_edge_mask(order, mask);
        if (connected_only && !g.is_connected()) continue;
        if (!visit(g)) return;
    }
}

}  // namespace chroma
