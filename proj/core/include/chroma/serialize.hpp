#pragma once

#include <nlohmann/json.hpp>

#include "chroma/analyze.hpp"
#include "chroma/census.hpp"
#include "chroma/graph_ops.hpp"

// JSON wire formats. Field names are stable; parse(emit(x)) == x for every
// report type. A Coloring is a bare array of colour indices in vertex
// order.

namespace chroma {

void to_json(nlohmann::json& j, const Coloring& c);
void from_json(const nlohmann::json& j, Coloring& c);

void to_json(nlohmann::json& j, const VertexPartition& p);
void from_json(const nlohmann::json& j, VertexPartition& p);

void to_json(nlohmann::json& j, const CompletionResult& r);
void from_json(const nlohmann::json& j, CompletionResult& r);

void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

void to_json(nlohmann::json& j, const StabilityMethods& m);
void from_json(const nlohmann::json& j, StabilityMethods& m);

void to_json(nlohmann::json& j, const StabilityVerdict& v);
void from_json(const nlohmann::json& j, StabilityVerdict& v);

void to_json(nlohmann::json& j, const JColoringResult& r);
void from_json(const nlohmann::json& j, JColoringResult& r);

void to_json(nlohmann::json& j, const CompletionChainReport& r);
void from_json(const nlohmann::json& j, CompletionChainReport& r);

void to_json(nlohmann::json& j, const OperationReport& r);
void from_json(const nlohmann::json& j, OperationReport& r);

void to_json(nlohmann::json& j, const UnionExperimentRow& r);
void from_json(const nlohmann::json& j, UnionExperimentRow& r);

void to_json(nlohmann::json& j, const UnionExperimentReport& r);
void from_json(const nlohmann::json& j, UnionExperimentReport& r);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

void to_json(nlohmann::json& j, const CensusRecord& r);
void from_json(const nlohmann::json& j, CensusRecord& r);

void to_json(nlohmann::json& j, const CensusSummary& s);
void from_json(const nlohmann::json& j, CensusSummary& s);

}  // namespace chroma
