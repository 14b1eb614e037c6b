#pragma once

#include <optional>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// Everything needed to certify ζ(G): the value, every optimal partition,
// and the completion edge set each of them admits. Partitions are sorted
// lexicographically; witness_edge_sets is parallel to lucky_partitions.
struct CompletionResult {
    int zeta = 0;
    int chi = 0;
    int epsilon = 0;
    std::vector<VertexPartition> lucky_partitions;
    std::vector<std::vector<Edge>> witness_edge_sets;

    bool operator==(const CompletionResult&) const = default;
};

// complement_bound and lucky_bound always dominate ζ; near_lucky_bound is
// the greedy's count and can undershoot (see near_lucky_coloring).
struct BoundReport {
    int complement_bound = 0;   // non-edges of G
    int lucky_bound = 0;        // balanced sum-product ceiling minus ε
    int near_lucky_bound = 0;   // greedy colouring's completion count
    std::optional<int> zeta_exact;

    bool operator==(const BoundReport&) const = default;
};

// Σ_{i<j} θ_i θ_j — the edge count of the complete multipartite graph with
// these class sizes. Empty vector -> 0.
int pseudo_completion_size(const std::vector<int>& theta);

// Non-edges of g joining distinct colour classes of c; c must be proper.
std::vector<Edge> completion_edges(const Graph& g, const Coloring& c);

// Exact ζ(G): maximises the completion edge count over one canonical
// representative per chromatic colouring orbit.
CompletionResult zeta(const Graph& g, int order_cap = kDefaultExactOrderCap);

// Maximum of Σ_{i<j} a_i a_j over all partitions of n into `parts`
// positive parts. Closed form: the balanced partition attains it.
int lucky_sum_product(int n, int parts);
// Independent oracle for the same maximum, by exhaustive partition
// enumeration. Kept public so agreement can be asserted wholesale.
int lucky_sum_product_bruteforce(int n, int parts);
// The maximising parts: n mod p parts of ⌈n/p⌉, the rest ⌊n/p⌋ (descending).
std::vector<int> balanced_parts(int n, int parts);

struct NearLuckyResult {
    Coloring coloring;
    int completion_count = 0;  // pseudo completion size of θ minus ε

    bool operator==(const NearLuckyResult&) const = default;
};

// Greedy proper colouring in non-increasing degree order: position i tries
// colour i mod |palette| first, then any permissible palette colour with
// the smallest class (lowest index on ties), then a fresh colour. The
// palette starts with χ(G) colours. The count is exact on consecutively
// labelled cycles, but the position rotation can leave the classes
// unbalanced, so it may land below ζ(G); treat it as an estimate, not a
// certified bound.
NearLuckyResult near_lucky_coloring(const Graph& g);

// All three upper bounds; zeta_exact is left unset (fill it when ζ is
// computed elsewhere).
BoundReport zeta_upper_bounds(const Graph& g);

}  // namespace chroma
