#include "chroma/stability.hpp"

#include <string>

namespace chroma {

namespace {

std::vector<std::uint64_t> class_masks_of(const Coloring& c) {
    std::vector<std::uint64_t> masks(c.colour_count, 0);
    for (int v = 0; v < static_cast<int>(c.assignment.size()); ++v)
        masks[c.assignment[v]] |= std::uint64_t{1} << v;
    return masks;
}

void require_proper(const Graph& g, const Coloring& c) {
    auto bad = bad_edges(g, c);
    if (!bad.empty())
        throw std::invalid_argument("colouring is not proper: bad edge (" +
                                    std::to_string(bad.front().first) + "," +
                                    std::to_string(bad.front().second) + ")");
}

}  // namespace

bool rainbow_condition_holds(const Graph& g, const Coloring& c) {
    require_proper(g, c);
    auto masks = class_masks_of(c);
    for (int v = 0; v < g.order(); ++v)
        for (int j = 0; j < c.colour_count; ++j) {
            if (j == c.assignment[v]) continue;
            if ((g.neighbourhood(v) & masks[j]) == 0) return false;
        }
    return true;
}

int rainbow_neighbourhood_number(const Graph& g, const Coloring& c) {
    require_proper(g, c);
    auto masks = class_masks_of(c);
    int count = 0;
    for (int v = 0; v < g.order(); ++v) {
        bool rainbow = true;
        for (int j = 0; j < c.colour_count && rainbow; ++j)
            rainbow = (g.closed_neighbourhood(v) & masks[j]) != 0;
        if (rainbow) ++count;
    }
    return count;
}

StabilityVerdict is_scc_from(const Graph& g, const CompletionResult& completion) {
    StabilityVerdict verdict;
    verdict.lucky_partition_count = static_cast<int>(completion.lucky_partitions.size());
    if (g.order() > 0)
        verdict.r_lucky =
            rainbow_neighbourhood_number(g, completion.lucky_partitions.front().to_coloring());

    if (completion.zeta == 0) {
        verdict.is_scc = true;
        verdict.inherent = true;
        return verdict;
    }

    StabilityMethods methods;
    methods.definitional = completion.lucky_partitions.size() == 1;
    methods.witness_unique = true;
    for (const auto& witness : completion.witness_edge_sets)
        methods.witness_unique =
            methods.witness_unique && witness == completion.witness_edge_sets.front();
    methods.rainbow_condition = true;
    methods.rainbow_count = true;
    for (const auto& partition : completion.lucky_partitions) {
        Coloring c = partition.to_coloring();
        methods.rainbow_condition = methods.rainbow_condition && rainbow_condition_holds(g, c);
        methods.rainbow_count =
            methods.rainbow_count && rainbow_neighbourhood_number(g, c) == g.order();
    }

    verdict.is_scc = methods.definitional;
    verdict.methods = methods;
    return verdict;
}

StabilityVerdict is_scc(const Graph& g, int order_cap) {
    return is_scc_from(g, zeta(g, order_cap));
}

bool is_scc_definitional(const Graph& g, int order_cap) {
    return zeta(g, order_cap).lucky_partitions.size() == 1;
}

}  // namespace chroma
