#include "chroma/analyze.hpp"

#include <chrono>

#include "chroma/graph_io.hpp"

namespace chroma {

namespace {

class StageClock {
public:
    explicit StageClock(bool enabled) : enabled_(enabled) {}

    template <typename F>
    auto time(const std::string& stage, F&& f) {
        if (!enabled_) return f();
        auto start = std::chrono::steady_clock::now();
        auto result = f();
        std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        timings_[stage] = elapsed.count();
        return result;
    }

    std::optional<std::map<std::string, double>> take() {
        if (!enabled_) return std::nullopt;
        return std::move(timings_);
    }

private:
    bool enabled_;
    std::map<std::string, double> timings_;
};

}  // namespace

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
    AnalysisReport report;
    report.graph6 = to_graph6(g);
    report.order = g.order();
    report.size = g.size();

    StageClock clock(options.with_timing);
    report.chi = clock.time("chi", [&] { return chromatic_number(g); });
    report.bounds = clock.time("bounds", [&] { return zeta_upper_bounds(g); });

    if (!options.bounds_only) {
        CompletionResult completion =
            clock.time("zeta", [&] { return zeta(g, options.order_cap); });
        report.zeta = completion.zeta;
        report.bounds.zeta_exact = completion.zeta;
        report.stability =
            clock.time("stability", [&] { return is_scc_from(g, completion); });
        report.jcoloring = clock.time("jcoloring", [&] { return zeta_j(g, options.order_cap); });
    }
    report.timing_ms = clock.take();
    return report;
}

}  // namespace chroma
