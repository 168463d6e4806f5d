#pragma once

#include <cstdint>
#include <string>

#include "taxoflow/subsequence.hpp"

namespace taxoflow {

inline constexpr int kConfigSchemaVersion = 1;

// All pipeline knobs. Defaults follow the published tuning (k=10, b=4,
// lambda1=lambda2=0.95, beam 20, depth 4); the rest are artifact settings.
struct PipelineConfig {
    int k = 10;
    int b = 4;
    double lambda1 = 0.95;
    double lambda2 = 0.95;
    int beam_width = 20;
    int max_length = 4;
    double alpha = 1.0;
    double domain_threshold = 0.01;
    double domain_weight_cutoff = 0.5;
    double w_max = 1e9;
    uint64_t seed = 42;
    HeadRule head_rule = HeadRule::RightHead;
    long long cost_scale = 1000000;

    int generality_sample_terms = 500;
    int generality_sample_edges = 500;
    int idf_sample_terms = 200;

    int train_epochs = 2000;
    double train_lambda = 1e-3;
    double train_learning_rate = 0.5;

    void validate() const;  // throws std::invalid_argument on bad ranges
    SearchConfig search() const;
};

// Applies one `key = value` pair; unknown keys and unparsable values are
// errors (catches typos).
void apply_config_value(PipelineConfig& config, const std::string& key,
                        const std::string& value);

// Flat `key = value` file, '#' comments.
PipelineConfig load_config_file(const std::string& path);
void merge_config_file(PipelineConfig& config, const std::string& path);

// Echo of every key in file syntax, stable order.
std::string config_to_string(const PipelineConfig& config);

}  // namespace taxoflow
