#pragma once

#include <optional>

#include "chroma/completion.hpp"
#include "chroma/stability.hpp"

namespace chroma {

// Outcome of the rainbow-everywhere colouring search. When no such
// colouring exists, `exists` is false and the optionals stay empty.
struct JColoringResult {
    bool exists = false;
    std::optional<int> j_number;
    std::optional<Coloring> witness;   // a maximising colouring with j_number colours
    std::optional<int> zeta_j;         // its completion edge count, maximised
    std::optional<std::vector<Edge>> completion_edge_set;

    bool operator==(const JColoringResult&) const = default;
};

// Proper and every vertex's closed neighbourhood carries all colours.
// (Maximality of the colour count is j_number's business, not this
// predicate's.)
bool is_j_coloring(const Graph& g, const Coloring& c);

// The largest k admitting a proper colouring with every vertex rainbow.
// Searches k = min_degree+1 down to χ(G); no hit means no such colouring
// for any k.
std::optional<int> j_number(const Graph& g, int order_cap = kDefaultExactOrderCap);

// Everything one search pass yields: the colour count, the maximal
// completion count at that colour count, a maximising witness, and every
// optimal partition (sorted).
struct JOptimalSet {
    int j_number = 0;
    int zeta_j = 0;
    Coloring witness;
    std::vector<VertexPartition> partitions;

    bool operator==(const JOptimalSet&) const = default;
};

std::optional<JOptimalSet> j_optimal_set(const Graph& g, int order_cap = kDefaultExactOrderCap);

// All optimal partitions among rainbow colourings with exactly j_number
// colours (empty when none exist).
std::vector<VertexPartition> j_optimal_partitions(const Graph& g,
                                                  int order_cap = kDefaultExactOrderCap);

JColoringResult zeta_j(const Graph& g, int order_cap = kDefaultExactOrderCap);

// Completion-count comparison across the three colouring conventions.
struct CompletionChainReport {
    std::vector<int> per_coloring_counts;  // one per canonical chromatic colouring
    int zeta = 0;
    std::optional<int> zeta_j;
    bool left_chain_holds = false;              // every chromatic count <= ζ
    std::optional<bool> right_chain_holds;      // ζ <= ζ_J when defined
    bool all_chromatic_attain_zeta = false;
    std::optional<bool> zeta_equals_zeta_j;
    bool conventions_congruent = false;  // one shared optimal partition across all three

    bool operator==(const CompletionChainReport&) const = default;
};

CompletionChainReport completion_chain(const Graph& g, int order_cap = kDefaultExactOrderCap);

struct SccJColorabilityCheck {
    bool scc = false;
    bool j_colorable = false;
    bool holds = false;  // scc implies j_colorable

    bool operator==(const SccJColorabilityCheck&) const = default;
};

// Evaluates "stable implies rainbow-colourable" on one graph. Violations
// are data for the caller to surface, never swallowed.
SccJColorabilityCheck scc_implies_j_colorable(const Graph& g,
                                              int order_cap = kDefaultExactOrderCap);

}  // namespace chroma
