#pragma once

#include <map>
#include <string>
#include <vector>

#include "taxoflow/aggregation.hpp"
#include "taxoflow/config.hpp"
#include "taxoflow/evidence.hpp"
#include "taxoflow/flow.hpp"

namespace taxoflow {

// Everything a full run produces; intermediate artifacts are kept so the CLI
// can dump them per stage.
struct PipelineResult {
    EdgeModel model;
    std::vector<Subsequence> searched;
    std::vector<Subsequence> expanded;
    std::vector<Subsequence> filtered;
    HypernymGraph graph;  // after head attachment and cycle breaking
    FlowNetwork network;
    FlowAssignment assignment;
    Taxonomy taxonomy;
    std::vector<std::string> warnings;
    std::map<std::string, long long> counts;  // per-stage counters
};

// evidence -> subsequences -> aggregation -> flow. Pass weights/dists to
// reuse trained artifacts; otherwise defaults are used and distributions are
// fitted from the index. Stage failures rethrow with the stage name attached.
PipelineResult run_pipeline(const EvidenceIndex& index, const std::vector<Term>& vocabulary,
                            const std::vector<Term>& roots, const PipelineConfig& config,
                            const EdgeModelWeights* weights = nullptr,
                            const GeneralityDistributions* dists = nullptr);

// Reproduction record: inputs, full config echo, stage counters, warnings.
// Contains no timestamps so reruns are byte-identical.
std::string render_manifest(const PipelineConfig& config,
                            const std::map<std::string, std::string>& inputs,
                            const PipelineResult& result);

}  // namespace taxoflow
