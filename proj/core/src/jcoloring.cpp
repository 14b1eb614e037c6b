#include "chroma/jcoloring.hpp"

#include <algorithm>

namespace chroma {

bool is_j_coloring(const Graph& g, const Coloring& c) {
    return is_proper(g, c) && rainbow_neighbourhood_number(g, c) == g.order();
}

namespace {

// Visits canonical rainbow colourings with exactly k colours.
bool for_each_rainbow_coloring(const Graph& g, int k,
                               const std::function<bool(const Coloring&)>& visit) {
    return for_each_coloring_with(g, k, [&](const Coloring& c) {
        if (rainbow_neighbourhood_number(g, c) != g.order()) return true;
        return visit(c);
    });
}

}  // namespace

std::optional<JOptimalSet> j_optimal_set(const Graph& g, int order_cap) {
    if (g.order() > order_cap)
        throw CapExceeded("rainbow colouring search capped at order " + std::to_string(order_cap));
    if (g.order() == 0) return JOptimalSet{0, 0, Coloring{}, {VertexPartition{}}};

    const int chi = chromatic_number(g);
    // Every closed neighbourhood must carry all k colours, so k is at most
    // the smallest closed neighbourhood.
    for (int k = g.min_degree() + 1; k >= chi; --k) {
        JOptimalSet best;
        best.j_number = k;
        int best_count = -1;
        for_each_rainbow_coloring(g, k, [&](const Coloring& c) {
            int count = pseudo_completion_size(c.theta) - g.size();
            if (count > best_count) {
                best_count = count;
                best.partitions.clear();
                best.witness = c;
            }
            if (count == best_count) best.partitions.push_back(partition_of(c));
            return true;
        });
        if (best_count >= 0) {
            best.zeta_j = best_count;
            std::sort(best.partitions.begin(), best.partitions.end());
            return best;
        }
    }
    return std::nullopt;
}

std::optional<int> j_number(const Graph& g, int order_cap) {
    auto best = j_optimal_set(g, order_cap);
    if (!best) return std::nullopt;
    return best->j_number;
}

std::vector<VertexPartition> j_optimal_partitions(const Graph& g, int order_cap) {
    auto best = j_optimal_set(g, order_cap);
    if (!best) return {};
    return best->partitions;
}

JColoringResult zeta_j(const Graph& g, int order_cap) {
    JColoringResult result;
    auto best = j_optimal_set(g, order_cap);
    if (!best) return result;
    result.exists = true;
    result.j_number = best->j_number;
    result.witness = best->witness;
    result.zeta_j = best->zeta_j;
    result.completion_edge_set = completion_edges(g, best->witness);
    return result;
}

CompletionChainReport completion_chain(const Graph& g, int order_cap) {
    CompletionChainReport report;

    CompletionResult z = zeta(g, order_cap);
    report.zeta = z.zeta;

    std::vector<VertexPartition> chromatic_partitions;
    for_each_chromatic_coloring(
        g,
        [&](const Coloring& c) {
            report.per_coloring_counts.push_back(pseudo_completion_size(c.theta) - g.size());
            chromatic_partitions.push_back(partition_of(c));
            return true;
        },
        order_cap);
    std::sort(chromatic_partitions.begin(), chromatic_partitions.end());

    report.left_chain_holds = true;
    report.all_chromatic_attain_zeta = true;
    for (int count : report.per_coloring_counts) {
        report.left_chain_holds = report.left_chain_holds && count <= z.zeta;
        report.all_chromatic_attain_zeta = report.all_chromatic_attain_zeta && count == z.zeta;
    }

    auto j_partitions = j_optimal_partitions(g, order_cap);
    if (!j_partitions.empty() || g.order() == 0) {
        JColoringResult j = zeta_j(g, order_cap);
        report.zeta_j = j.zeta_j;
        report.right_chain_holds = z.zeta <= *j.zeta_j;
        report.zeta_equals_zeta_j = z.zeta == *j.zeta_j;
    }

    report.conventions_congruent = !j_partitions.empty() &&
                                   chromatic_partitions == z.lucky_partitions &&
                                   z.lucky_partitions == j_partitions;
    return report;
}

SccJColorabilityCheck scc_implies_j_colorable(const Graph& g, int order_cap) {
    SccJColorabilityCheck check;
    check.scc = is_scc(g, order_cap).is_scc;
    check.j_colorable = j_number(g, order_cap).has_value();
    check.holds = !check.scc || check.j_colorable;
    return check;
}

}  // namespace chroma
