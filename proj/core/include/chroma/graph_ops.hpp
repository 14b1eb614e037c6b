#pragma once

#include <optional>
#include <string>

#include "chroma/completion.hpp"
#include "chroma/stability.hpp"

namespace chroma {

struct OperationReport {
    std::string op;  // "union" or "join"
    int zeta_g = 0;
    int zeta_h = 0;
    int zeta_combined = 0;
    std::optional<int> bound_rhs;  // union only
    bool equality = false;         // zeta_combined == zeta_g + zeta_h
    bool scc_g = false;
    bool scc_h = false;
    bool scc_combined = false;

    bool operator==(const OperationReport&) const = default;
};

// ζ(G)+ζ(H) plus the number of cross pairs with distinct colours when the
// two colourings share one palette of size max(k_G, k_H) as indexed.
// Both colourings must attain their graph's ζ.
int union_lower_bound(const Graph& g, const Graph& h, const Coloring& lucky_g,
                      const Coloring& lucky_h, int order_cap = kDefaultExactOrderCap);

// The largest union_lower_bound over all optimal-partition pairs and all
// palette alignments (closed form via the rearrangement inequality).
int union_bound_best_rhs(const Graph& g, const Graph& h, const CompletionResult& zg,
                         const CompletionResult& zh);

// Computes ζ(G), ζ(H), ζ(G+H) independently and reports whether the sum
// identity and the stability equivalence hold for this pair.
OperationReport check_join_identity(const Graph& g, const Graph& h,
                                    int order_cap = kDefaultExactOrderCap);

// One experiment row: exact ζ of the disjoint union against the best
// additive lower bound.
struct UnionExperimentRow {
    std::string graph6_g;
    std::string graph6_h;
    int zeta_g = 0;
    int zeta_h = 0;
    int zeta_union = 0;
    int rhs = 0;
    int gap = 0;  // zeta_union - rhs, never negative
    bool precondition_met = false;  // both graphs admit a balanced optimal partition

    bool operator==(const UnionExperimentRow&) const = default;
};

struct UnionExperimentReport {
    std::vector<UnionExperimentRow> rows;
    int pairs_total = 0;
    int pairs_skipped = 0;   // precondition failures (rows still emitted)
    int equality_rows = 0;   // gap == 0 among precondition rows
    int gap_rows = 0;        // gap > 0 among precondition rows

    bool operator==(const UnionExperimentReport&) const = default;
};

// Does some optimal partition have all class sizes in {⌊n/χ⌋, ⌈n/χ⌉}?
bool has_balanced_lucky_partition(const CompletionResult& completion, int order);

// Runs the additivity experiment over the given pairs. Produces findings
// only: a strict gap is flagged in the report, never asserted against.
UnionExperimentReport union_additivity_experiment(
    const std::vector<std::pair<Graph, Graph>>& pairs, int order_cap = kDefaultExactOrderCap);

std::string union_experiment_csv(const UnionExperimentReport& report);

}  // namespace chroma
