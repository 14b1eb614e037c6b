#pragma once

#include <optional>

#include "chroma/completion.hpp"

namespace chroma {

// The four ways of deciding stability, kept separate so tests can compare
// them. The rainbow-based booleans hold only if every optimal partition
// satisfies the respective condition.
struct StabilityMethods {
    bool definitional = false;       // all optimal partitions coincide
    bool rainbow_condition = false;  // every vertex sees every other class
    bool rainbow_count = false;      // every closed neighbourhood is rainbow
    bool witness_unique = false;     // one completion edge set overall

    bool operator==(const StabilityMethods&) const = default;
};

struct StabilityVerdict {
    bool is_scc = false;
    bool inherent = false;  // ζ = 0: nothing to add, stable by convention
    std::optional<StabilityMethods> methods;  // absent when inherent
    int lucky_partition_count = 0;
    int r_lucky = 0;  // rainbow neighbourhood count for the first optimal partition

    bool operator==(const StabilityVerdict&) const = default;
};

// True iff every vertex of class X_i has, for every j != i, a neighbour in
// X_j. Requires a proper colouring.
bool rainbow_condition_holds(const Graph& g, const Coloring& c);

// Number of vertices whose closed neighbourhood carries all colours.
int rainbow_neighbourhood_number(const Graph& g, const Coloring& c);

bool is_scc_definitional(const Graph& g, int order_cap = kDefaultExactOrderCap);

StabilityVerdict is_scc(const Graph& g, int order_cap = kDefaultExactOrderCap);
// Same verdict from an already-computed completion result.
StabilityVerdict is_scc_from(const Graph& g, const CompletionResult& completion);

}  // namespace chroma
