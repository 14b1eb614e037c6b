#include "chroma/graph_ops.hpp"

#include <algorithm>
#include <sstream>

#include "chroma/graph_io.hpp"

namespace chroma {

namespace {

int cross_pairs_distinct(const std::vector<int>& theta_g, const std::vector<int>& theta_h, int ng,
                         int nh) {
    int same = 0;
    for (std::size_t c = 0; c < std::min(theta_g.size(), theta_h.size()); ++c)
        same += theta_g[c] * theta_h[c];
    return ng * nh - same;
}

}  // namespace

int union_lower_bound(const Graph& g, const Graph& h, const Coloring& lucky_g,
                      const Coloring& lucky_h, int order_cap) {
    CompletionResult zg = zeta(g, order_cap);
    CompletionResult zh = zeta(h, order_cap);
    if (!is_proper(g, lucky_g) ||
        pseudo_completion_size(lucky_g.theta) - g.size() != zg.zeta)
        throw std::invalid_argument("first colouring does not attain the graph's zeta");
    if (!is_proper(h, lucky_h) ||
        pseudo_completion_size(lucky_h.theta) - h.size() != zh.zeta)
        throw std::invalid_argument("second colouring does not attain the graph's zeta");
    return zg.zeta + zh.zeta +
           cross_pairs_distinct(lucky_g.theta, lucky_h.theta, g.order(), h.order());
}

int union_bound_best_rhs(const Graph& g, const Graph& h, const CompletionResult& zg,
                         const CompletionResult& zh) {
    // The cross term is ν(G)ν(H) minus the same-colour pairing over the
    // shared palette. Padding both size vectors with zeros to the palette
    // size and pairing them in opposite sorted order minimises that
    // pairing (rearrangement), which maximises the bound.
    int best_cross = -1;
    for (const auto& pg : zg.lucky_partitions) {
        for (const auto& ph : zh.lucky_partitions) {
            std::vector<int> a = pg.class_sizes();
            std::vector<int> b = ph.class_sizes();
            std::size_t palette = std::max(a.size(), b.size());
            a.resize(palette, 0);
            b.resize(palette, 0);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end(), std::greater<int>());
            int same = 0;
            for (std::size_t i = 0; i < palette; ++i) same += a[i] * b[i];
            best_cross = std::max(best_cross, g.order() * h.order() - same);
        }
    }
    return zg.zeta + zh.zeta + std::max(best_cross, 0);
}

OperationReport check_join_identity(const Graph& g, const Graph& h, int order_cap) {
    OperationReport report;
    report.op = "join";
    CompletionResult zg = zeta(g, order_cap);
    CompletionResult zh = zeta(h, order_cap);
    CompletionResult zc = zeta(join(g, h), order_cap);
    report.zeta_g = zg.zeta;
    report.zeta_h = zh.zeta;
    report.zeta_combined = zc.zeta;
    report.equality = zc.zeta == zg.zeta + zh.zeta;
    report.scc_g = is_scc_from(g, zg).is_scc;
    report.scc_h = is_scc_from(h, zh).is_scc;
    report.scc_combined = is_scc_from(join(g, h), zc).is_scc;
    return report;
}

bool has_balanced_lucky_partition(const CompletionResult& completion, int order) {
    if (completion.chi == 0) return true;
    int lo = order / completion.chi;
    int hi = lo + (order % completion.chi != 0 ? 1 : 0);
    for (const auto& partition : completion.lucky_partitions) {
        bool balanced = true;
        for (int size : partition.class_sizes()) balanced = balanced && (size == lo || size == hi);
        if (balanced) return true;
    }
    return false;
}

UnionExperimentReport union_additivity_experiment(const std::vector<std::pair<Graph, Graph>>& pairs,
                                                  int order_cap) {
    UnionExperimentReport report;
    for (const auto& [g, h] : pairs) {
        CompletionResult zg = zeta(g, order_cap);
        CompletionResult zh = zeta(h, order_cap);
        CompletionResult zu = zeta(disjoint_union(g, h), order_cap);

        UnionExperimentRow row;
        row.graph6_g = to_graph6(g);
        row.graph6_h = to_graph6(h);
        row.zeta_g = zg.zeta;
        row.zeta_h = zh.zeta;
        row.zeta_union = zu.zeta;
        row.rhs = union_bound_best_rhs(g, h, zg, zh);
        row.gap = zu.zeta - row.rhs;
        row.precondition_met = has_balanced_lucky_partition(zg, g.order()) &&
                               has_balanced_lucky_partition(zh, h.order());

        ++report.pairs_total;
        if (row.precondition_met)
            ++(row.gap == 0 ? report.equality_rows : report.gap_rows);
        else
            ++report.pairs_skipped;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string union_experiment_csv(const UnionExperimentReport& report) {
    std::ostringstream out;
    out << "graph6_g,graph6_h,zeta_g,zeta_h,zeta_union,rhs,gap,precondition_met\n";
    for (const auto& row : report.rows)
        out << row.graph6_g << ',' << row.graph6_h << ',' << row.zeta_g << ',' << row.zeta_h << ','
            << row.zeta_union << ',' << row.rhs << ',' << row.gap << ','
            << (row.precondition_met ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace chroma
