#include <doctest.h>

#include "chroma/analyze.hpp"
#include "chroma/serialize.hpp"

using namespace chroma;
using nlohmann::json;

namespace {

template <typename T>
void check_roundtrip(const T& value) {
    json encoded = value;
    T decoded = encoded.get<T>();
    CHECK(decoded == value);
    CHECK(json(decoded) == encoded);
}

}  // namespace

TEST_CASE("coloring serializes as a bare colour array") {
    Coloring c = Coloring::from_assignment({0, 1, 0, 2});
    json j = c;
    CHECK(j == json::array({0, 1, 0, 2}));
    check_roundtrip(c);
    CHECK_THROWS(json::array({0, 2}).get<Coloring>());  // gap-free colours enforced on parse
}

TEST_CASE("report round-trips") {
    check_roundtrip(zeta(make_cycle(5)));
    check_roundtrip(zeta_upper_bounds(make_cycle(5)));
    check_roundtrip(is_scc(make_cycle(5)));
    check_roundtrip(is_scc(make_complete(4)));  // vacuous methods -> null
    check_roundtrip(zeta_j(make_cycle(6)));
    check_roundtrip(zeta_j(make_cycle(5)));  // non-existent: all optionals null
    check_roundtrip(completion_chain(make_cycle(6)));
    check_roundtrip(check_join_identity(make_path(4), make_path(4)));
    check_roundtrip(union_additivity_experiment({{make_path(4), make_path(4)}}));
    check_roundtrip(analyze(make_cycle(6)));
    check_roundtrip(analyze(make_cycle(6), {.bounds_only = true}));
    check_roundtrip(census_record_of(make_cycle(5)));

    CensusOptions options;
    options.order = 4;
    options.connected_only = true;
    check_roundtrip(run_census(options, {}));
}

TEST_CASE("stable field names") {
    json completion = zeta(make_cycle(5));
    for (const char* key : {"zeta", "chi", "epsilon", "lucky_partitions", "witness_edge_sets"})
        CHECK(completion.contains(key));

    json report = analyze(make_cycle(6));
    for (const char* key : {"graph6", "order", "size", "chi", "zeta", "bounds", "stability",
                            "jcoloring", "timing"})
        CHECK(report.contains(key));
    for (const char* key : {"complement", "lucky", "near_lucky", "zeta_exact"})
        CHECK(report["bounds"].contains(key));
    for (const char* key :
         {"is_scc", "inherent", "methods", "lucky_partition_count", "r_lucky"})
        CHECK(report["stability"].contains(key));
    for (const char* key : {"definitional", "rainbow_condition", "rainbow_count", "e_chi_unique"})
        CHECK(report["stability"]["methods"].contains(key));
    for (const char* key : {"exists", "j_number", "witness", "zeta_j", "e_j"})
        CHECK(report["jcoloring"].contains(key));
    CHECK(report["timing"].is_null());  // timings only on request

    json record = census_record_of(make_cycle(5));
    for (const char* key :
         {"graph6", "chi", "zeta", "scc", "j_exists", "j_number", "zeta_j", "theorem_flags"})
        CHECK(record.contains(key));
}

TEST_CASE("analysis report embeds consistent values") {
    AnalysisReport report = analyze(make_cycle(6));
    CHECK(report.zeta == 3);
    CHECK(report.bounds.zeta_exact == 3);
    CHECK(report.chi == 2);
    CHECK(report.stability->is_scc);
    CHECK(report.jcoloring->j_number == 3);
    CHECK(report.jcoloring->zeta_j == 6);
    CHECK_FALSE(report.timing_ms.has_value());

    AnalysisReport timed = analyze(make_cycle(6), {.with_timing = true});
    REQUIRE(timed.timing_ms.has_value());
    CHECK(timed.timing_ms->contains("zeta"));

    AnalysisReport bounds_only = analyze(make_cycle(6), {.bounds_only = true});
    CHECK_FALSE(bounds_only.zeta.has_value());
    CHECK_FALSE(bounds_only.stability.has_value());
    CHECK_FALSE(bounds_only.jcoloring.has_value());
    CHECK_FALSE(bounds_only.bounds.zeta_exact.has_value());
}
