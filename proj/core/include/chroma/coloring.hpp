#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Exact (exponential) operations refuse to run above this order unless the
// caller raises the cap explicitly.
inline constexpr int kDefaultExactOrderCap = 12;

// Total colour assignment with colours 0..colour_count-1, every colour
// used at least once. theta[c] is the size of colour class c and is kept
// consistent with the assignment.
struct Coloring {
    std::vector<int> assignment;
    int colour_count = 0;
    std::vector<int> theta;

    // Validates totality and that colours form a gap-free 0..k-1 range.
    static Coloring from_assignment(std::vector<int> assignment);

    bool operator==(const Coloring&) const = default;
};

// A colouring up to interchange of colour classes: the set of colour
// classes only. Stored normalized (classes sorted internally and ordered
// by smallest member), so equality and ordering are structural.
struct VertexPartition {
    std::vector<std::vector<int>> classes;

    static VertexPartition of(const Coloring& c);
    // Canonical colouring: class rank becomes the colour index.
    Coloring to_coloring() const;
    std::vector<int> class_sizes() const;

    auto operator<=>(const VertexPartition&) const = default;
};

VertexPartition partition_of(const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);
// Exactly the edges whose endpoints share a colour; empty iff proper.
std::vector<Edge> bad_edges(const Graph& g, const Coloring& c);

// Exact chromatic number by branch and bound between a greedy clique
// lower bound and a DSATUR upper bound. Deterministic; edgeless -> 1,
// order 0 -> 0.
int chromatic_number(const Graph& g);

// Visits one canonical representative per colour-class-permutation orbit
// of the proper colourings using exactly `colours` colours: colour i
// first appears before colour i+1 in vertex order. Returns false if the
// visitor stopped early.
bool for_each_coloring_with(const Graph& g, int colours,
                            const std::function<bool(const Coloring&)>& visit);

// Same stream restricted to exactly chromatic_number(g) colours, capped.
void for_each_chromatic_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                                 int order_cap = kDefaultExactOrderCap);
std::vector<Coloring> chromatic_colorings(const Graph& g, int order_cap = kDefaultExactOrderCap);

// Chromatic polynomial evaluated at `colours`, via a partition-into-
// independent-sets subset DP. Throws std::overflow_error if the count
// leaves 64 bits.
std::uint64_t count_proper_colorings(const Graph& g, int colours,
                                     int order_cap = kDefaultExactOrderCap);

}  // namespace chroma
