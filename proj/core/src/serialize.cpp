#include "chroma/serialize.hpp"

namespace chroma {

namespace {

using nlohmann::json;

template <typename T>
json opt(const std::optional<T>& value) {
    return value ? json(*value) : json(nullptr);
}

template <typename T>
void opt_from(const json& j, const char* key, std::optional<T>& out) {
    out.reset();
    if (auto it = j.find(key); it != j.end() && !it->is_null()) out = it->get<T>();
}

}  // namespace

void to_json(json& j, const Coloring& c) { j = c.assignment; }

void from_json(const json& j, Coloring& c) {
    c = Coloring::from_assignment(j.get<std::vector<int>>());
}

void to_json(json& j, const VertexPartition& p) { j = p.classes; }

void from_json(const json& j, VertexPartition& p) {
    p.classes = j.get<std::vector<std::vector<int>>>();
}

void to_json(json& j, const CompletionResult& r) {
    j = json{{"zeta", r.zeta},
             {"chi", r.chi},
             {"epsilon", r.epsilon},
             {"lucky_partitions", r.lucky_partitions},
             {"witness_edge_sets", r.witness_edge_sets}};
}

void from_json(const json& j, CompletionResult& r) {
    j.at("zeta").get_to(r.zeta);
    j.at("chi").get_to(r.chi);
    j.at("epsilon").get_to(r.epsilon);
    j.at("lucky_partitions").get_to(r.lucky_partitions);
    j.at("witness_edge_sets").get_to(r.witness_edge_sets);
}

void to_json(json& j, const BoundReport& r) {
    j = json{{"complement", r.complement_bound},
             {"lucky", r.lucky_bound},
             {"near_lucky", r.near_lucky_bound},
             {"zeta_exact", opt(r.zeta_exact)}};
}

void from_json(const json& j, BoundReport& r) {
    j.at("complement").get_to(r.complement_bound);
    j.at("lucky").get_to(r.lucky_bound);
    j.at("near_lucky").get_to(r.near_lucky_bound);
    opt_from(j, "zeta_exact", r.zeta_exact);
}

void to_json(json& j, const StabilityMethods& m) {
    j = json{{"definitional", m.definitional},
             {"rainbow_condition", m.rainbow_condition},
             {"rainbow_count", m.rainbow_count},
             {"e_chi_unique", m.witness_unique}};
}

void from_json(const json& j, StabilityMethods& m) {
    j.at("definitional").get_to(m.definitional);
    j.at("rainbow_condition").get_to(m.rainbow_condition);
    j.at("rainbow_count").get_to(m.rainbow_count);
    j.at("e_chi_unique").get_to(m.witness_unique);
}

void to_json(json& j, const StabilityVerdict& v) {
    j = json{{"is_scc", v.is_scc},
             {"inherent", v.inherent},
             {"methods", opt(v.methods)},
             {"lucky_partition_count", v.lucky_partition_count},
             {"r_lucky", v.r_lucky}};
}

void from_json(const json& j, StabilityVerdict& v) {
    j.at("is_scc").get_to(v.is_scc);
    j.at("inherent").get_to(v.inherent);
    opt_from(j, "methods", v.methods);
    j.at("lucky_partition_count").get_to(v.lucky_partition_count);
    j.at("r_lucky").get_to(v.r_lucky);
}

void to_json(json& j, const JColoringResult& r) {
    j = json{{"exists", r.exists},
             {"j_number", opt(r.j_number)},
             {"witness", opt(r.witness)},
             {"zeta_j", opt(r.zeta_j)},
             {"e_j", opt(r.completion_edge_set)}};
}

void from_json(const json& j, JColoringResult& r) {
    j.at("exists").get_to(r.exists);
    opt_from(j, "j_number", r.j_number);
    opt_from(j, "witness", r.witness);
    opt_from(j, "zeta_j", r.zeta_j);
    opt_from(j, "e_j", r.completion_edge_set);
}

void to_json(json& j, const CompletionChainReport& r) {
    j = json{{"per_coloring_counts", r.per_coloring_counts},
             {"zeta", r.zeta},
             {"zeta_j", opt(r.zeta_j)},
             {"left_chain_holds", r.left_chain_holds},
             {"right_chain_holds", opt(r.right_chain_holds)},
             {"all_chromatic_attain_zeta", r.all_chromatic_attain_zeta},
             {"zeta_equals_zeta_j", opt(r.zeta_equals_zeta_j)},
             {"conventions_congruent", r.conventions_congruent}};
}

void from_json(const json& j, CompletionChainReport& r) {
    j.at("per_coloring_counts").get_to(r.per_coloring_counts);
    j.at("zeta").get_to(r.zeta);
    opt_from(j, "zeta_j", r.zeta_j);
    j.at("left_chain_holds").get_to(r.left_chain_holds);
    opt_from(j, "right_chain_holds", r.right_chain_holds);
    j.at("all_chromatic_attain_zeta").get_to(r.all_chromatic_attain_zeta);
    opt_from(j, "zeta_equals_zeta_j", r.zeta_equals_zeta_j);
    j.at("conventions_congruent").get_to(r.conventions_congruent);
}

void to_json(json& j, const OperationReport& r) {
    j = json{{"op", r.op},
             {"zeta_g", r.zeta_g},
             {"zeta_h", r.zeta_h},
             {"zeta_combined", r.zeta_combined},
             {"bound_rhs", opt(r.bound_rhs)},
             {"equality", r.equality},
             {"scc_g", r.scc_g},
             {"scc_h", r.scc_h},
             {"scc_combined", r.scc_combined}};
}

void from_json(const json& j, OperationReport& r) {
    j.at("op").get_to(r.op);
    j.at("zeta_g").get_to(r.zeta_g);
    j.at("zeta_h").get_to(r.zeta_h);
    j.at("zeta_combined").get_to(r.zeta_combined);
    opt_from(j, "bound_rhs", r.bound_rhs);
    j.at("equality").get_to(r.equality);
    j.at("scc_g").get_to(r.scc_g);
    j.at("scc_h").get_to(r.scc_h);
    j.at("scc_combined").get_to(r.scc_combined);
}

void to_json(json& j, const UnionExperimentRow& r) {
    j = json{{"graph6_g", r.graph6_g},
             {"graph6_h", r.graph6_h},
             {"zeta_g", r.zeta_g},
             {"zeta_h", r.zeta_h},
             {"zeta_union", r.zeta_union},
             {"rhs", r.rhs},
             {"gap", r.gap},
             {"precondition_met", r.precondition_met}};
}

void from_json(const json& j, UnionExperimentRow& r) {
    j.at("graph6_g").get_to(r.graph6_g);
    j.at("graph6_h").get_to(r.graph6_h);
    j.at("zeta_g").get_to(r.zeta_g);
    j.at("zeta_h").get_to(r.zeta_h);
    j.at("zeta_union").get_to(r.zeta_union);
    j.at("rhs").get_to(r.rhs);
    j.at("gap").get_to(r.gap);
    j.at("precondition_met").get_to(r.precondition_met);
}

void to_json(json& j, const UnionExperimentReport& r) {
    j = json{{"rows", r.rows},
             {"pairs_total", r.pairs_total},
             {"pairs_skipped", r.pairs_skipped},
             {"equality_rows", r.equality_rows},
             {"gap_rows", r.gap_rows}};
}

void from_json(const json& j, UnionExperimentReport& r) {
    j.at("rows").get_to(r.rows);
    j.at("pairs_total").get_to(r.pairs_total);
    j.at("pairs_skipped").get_to(r.pairs_skipped);
    j.at("equality_rows").get_to(r.equality_rows);
    j.at("gap_rows").get_to(r.gap_rows);
}

void to_json(json& j, const AnalysisReport& r) {
    j = json{{"graph6", r.graph6},
             {"order", r.order},
             {"size", r.size},
             {"chi", r.chi},
             {"zeta", opt(r.zeta)},
             {"bounds", r.bounds},
             {"stability", opt(r.stability)},
             {"jcoloring", opt(r.jcoloring)},
             {"timing", opt(r.timing_ms)}};
}

void from_json(const json& j, AnalysisReport& r) {
    j.at("graph6").get_to(r.graph6);
    j.at("order").get_to(r.order);
    j.at("size").get_to(r.size);
    j.at("chi").get_to(r.chi);
    opt_from(j, "zeta", r.zeta);
    j.at("bounds").get_to(r.bounds);
    opt_from(j, "stability", r.stability);
    opt_from(j, "jcoloring", r.jcoloring);
    opt_from(j, "timing", r.timing_ms);
}

void to_json(json& j, const CensusRecord& r) {
    json flags = json::object();
    for (auto [name, ok] : r.flags.items()) flags[name] = ok;
    j = json{{"graph6", r.graph6},   {"chi", r.chi},
             {"zeta", r.zeta},       {"scc", r.scc},
             {"j_exists", r.j_exists}, {"j_number", opt(r.j_number)},
             {"zeta_j", opt(r.zeta_j)}, {"theorem_flags", flags}};
}

void from_json(const json& j, CensusRecord& r) {
    j.at("graph6").get_to(r.graph6);
    j.at("chi").get_to(r.chi);
    j.at("zeta").get_to(r.zeta);
    j.at("scc").get_to(r.scc);
    j.at("j_exists").get_to(r.j_exists);
    opt_from(j, "j_number", r.j_number);
    opt_from(j, "zeta_j", r.zeta_j);
    const json& flags = j.at("theorem_flags");
    flags.at("complement_bound").get_to(r.flags.complement_bound);
    flags.at("completion_stays_incomplete").get_to(r.flags.completion_stays_incomplete);
    flags.at("stable_iff_witness_unique").get_to(r.flags.stable_iff_witness_unique);
    flags.at("stable_iff_rainbow_adjacent").get_to(r.flags.stable_iff_rainbow_adjacent);
    flags.at("stable_iff_rainbow_count_full").get_to(r.flags.stable_iff_rainbow_count_full);
    flags.at("bipartite_stable").get_to(r.flags.bipartite_stable);
    flags.at("pendant_not_stable").get_to(r.flags.pendant_not_stable);
    flags.at("completion_chain").get_to(r.flags.completion_chain);
    flags.at("stable_implies_j_colorable").get_to(r.flags.stable_implies_j_colorable);
    flags.at("uniqueness_chain").get_to(r.flags.uniqueness_chain);
}

namespace {

void to_json(json& j, const CensusFlagTally& t) {
    j = json{{"name", t.name}, {"failures", t.failures}, {"witnesses", t.witnesses}};
}

void from_json(const json& j, CensusFlagTally& t) {
    j.at("name").get_to(t.name);
    j.at("failures").get_to(t.failures);
    j.at("witnesses").get_to(t.witnesses);
}

}  // namespace

void to_json(json& j, const CensusSummary& s) {
    json tallies = json::array();
    for (const auto& t : s.flag_tallies) {
        json entry;
        to_json(entry, t);
        tallies.push_back(std::move(entry));
    }
    j = json{{"order", s.order},
             {"connected_only", s.connected_only},
             {"sample_fraction", s.sample_fraction},
             {"seed", s.seed},
             {"graphs", s.graphs},
             {"scc_count", s.scc_count},
             {"j_colorable_count", s.j_colorable_count},
             {"flag_tallies", std::move(tallies)},
             {"total_failures", s.total_failures},
             {"rainbow_reading_divergences", s.rainbow_reading_divergences}};
}

void from_json(const json& j, CensusSummary& s) {
    j.at("order").get_to(s.order);
    j.at("connected_only").get_to(s.connected_only);
    j.at("sample_fraction").get_to(s.sample_fraction);
    j.at("seed").get_to(s.seed);
    j.at("graphs").get_to(s.graphs);
    j.at("scc_count").get_to(s.scc_count);
    j.at("j_colorable_count").get_to(s.j_colorable_count);
    s.flag_tallies.clear();
    for (const auto& entry : j.at("flag_tallies")) {
        CensusFlagTally t;
        from_json(entry, t);
        s.flag_tallies.push_back(std::move(t));
    }
    j.at("total_failures").get_to(s.total_failures);
    j.at("rainbow_reading_divergences").get_to(s.rainbow_reading_divergences);
}

}  // namespace chroma
