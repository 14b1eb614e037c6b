#pragma once

#include <map>
#include <optional>
#include <string>

#include "chroma/completion.hpp"
#include "chroma/jcoloring.hpp"
#include "chroma/stability.hpp"

namespace chroma {

struct AnalysisOptions {
    bool bounds_only = false;
    bool with_timing = false;  // timings make output run-dependent, so opt in
    int order_cap = kDefaultExactOrderCap;
};

struct AnalysisReport {
    std::string graph6;
    int order = 0;
    int size = 0;
    int chi = 0;
    std::optional<int> zeta;  // absent under bounds_only
    BoundReport bounds;
    std::optional<StabilityVerdict> stability;
    std::optional<JColoringResult> jcoloring;
    std::optional<std::map<std::string, double>> timing_ms;

    bool operator==(const AnalysisReport&) const = default;
};

// Full single-graph report. Exact stages refuse above the cap unless
// bounds_only is set.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

}  // namespace chroma
