#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// One boolean per structural statement the census checks on each graph.
// Statements whose hypotheses do not apply to a graph hold vacuously.
struct CensusFlags {
    bool complement_bound = true;            // ζ ≤ non-edges, tight iff complete
    bool completion_stays_incomplete = true; // adding a witness set never completes an incomplete graph
    bool stable_iff_witness_unique = true;
    bool stable_iff_rainbow_adjacent = true;
    bool stable_iff_rainbow_count_full = true;
    bool bipartite_stable = true;            // connected, 2-colourable, ζ>0 graphs are stable
    bool pendant_not_stable = true;          // χ≥3 plus a pendant vertex forbids stability
    bool completion_chain = true;            // ζ ≤ ζ_J when a rainbow colouring exists
    bool stable_implies_j_colorable = true;
    bool uniqueness_chain = true;            // witness uniqueness: proper ⇒ optimal ⇒ rainbow

    static constexpr int kCount = 10;
    std::array<std::pair<const char*, bool>, kCount> items() const;
    bool all_ok() const;

    bool operator==(const CensusFlags&) const = default;
};

struct CensusRecord {
    std::string graph6;
    int chi = 0;
    int zeta = 0;
    bool scc = false;
    bool j_exists = false;
    std::optional<int> j_number;
    std::optional<int> zeta_j;
    CensusFlags flags;

    bool operator==(const CensusRecord&) const = default;
};

// Full verification battery for one graph; order must be small enough for
// exact search (the census cap guarantees that). When given,
// rainbow_reading_divergent is set to whether the some/every readings of
// the rainbow adjacency condition disagree across optimal colourings.
CensusRecord census_record_of(const Graph& g, bool* rainbow_reading_divergent = nullptr);

struct CensusFlagTally {
    std::string name;
    std::uint64_t failures = 0;
    std::vector<std::string> witnesses;  // first few offending graph6 strings

    bool operator==(const CensusFlagTally&) const = default;
};

struct CensusSummary {
    int order = 0;
    bool connected_only = false;
    double sample_fraction = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t graphs = 0;
    std::uint64_t scc_count = 0;
    std::uint64_t j_colorable_count = 0;
    std::vector<CensusFlagTally> flag_tallies;  // fixed statement order
    std::uint64_t total_failures = 0;
    // Graphs where only some optimal colourings satisfy the rainbow
    // adjacency condition, i.e. the some/every readings of that condition
    // would disagree. Informational, not a checked statement.
    std::uint64_t rainbow_reading_divergences = 0;

    bool operator==(const CensusSummary&) const = default;
};

struct CensusOptions {
    int order = 0;
    bool connected_only = false;
    double sample_fraction = 1.0;  // keep each graph with this probability
    std::uint64_t seed = 0;        // drives sampling only
    int threads = 1;
    int order_cap = kDefaultCensusOrderCap;
    int witnesses_per_flag = 5;
};

// Streams records in edge-mask order (independent of thread count) and
// returns the tally. `emit` may be empty when only the summary matters.
CensusSummary run_census(const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& emit);

std::string census_csv_header();
std::string census_csv_row(const CensusRecord& record);

}  // namespace chroma
