#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "taxoflow/evidence.hpp"

namespace taxoflow {

// Per-edge hypernymy features. nd is antisymmetric by construction.
struct EdgeFeatures {
    double nd = 0.0;  // normalized frequency diff, in [-1, 1]
    double gd = 0.0;  // generality diff density score
};

struct Gaussian {
    double mean = 0.0;
    double stddev = 1.0;
    double pdf(double x) const;
};

// Gaussians over edge generality g_e, fitted from top edges vs random edges.
struct GeneralityDistributions {
    Gaussian top;
    Gaussian random;
};

struct EdgeModelWeights {
    double w_nd = 1.0;
    double w_gd = 1.0;
    double bias = 0.0;
};

// Weights plus fitted distributions; everything needed to score an edge.
struct EdgeModel {
    EdgeModelWeights weights;
    GeneralityDistributions dists;
};

// n_d(x, y) = n_f(x, y) - n_f(y, x), where n_f is the candidate frequency
// normalized by the term's maximum candidate frequency (0 when the term has
// no candidates).
double feature_nd(const EvidenceIndex& index, const std::string& x, const std::string& y);

// Samples `sample_terms` terms (top edge = the term's highest-nd candidate)
// and `sample_edges` tuples, then fits Gaussians over g_e for both samples.
// Sampling is with replacement; both counts must be >= 30. Throws when the
// index has no tuples to draw from.
GeneralityDistributions fit_generality_distributions(const EvidenceIndex& index,
                                                     int sample_terms,
                                                     int sample_edges,
                                                     uint64_t seed);

// g_d(x, y) = pdf_top(g_e) - pdf_random(g_e) with g_e = g(y) - g(x).
double feature_gd(const GeneralityDistributions& dists, const EvidenceIndex& index,
                  const std::string& x, const std::string& y);

EdgeFeatures edge_features(const EdgeModel& model, const EvidenceIndex& index,
                           const std::string& x, const std::string& y);

// Logistic link over the weighted features, clamped inside (0, 1).
double edge_probability(const EdgeModelWeights& weights, const EdgeFeatures& features);
double edge_probability(const EdgeModel& model, const EvidenceIndex& index,
                        const std::string& x, const std::string& y);

// sim(x, y) = max(Pr_e(x, y), Pr_e(y, x)); symmetric.
double similarity(const EdgeModel& model, const EvidenceIndex& index,
                  const std::string& x, const std::string& y);

struct TrainConfig {
    int epochs = 2000;
    double lambda = 1e-3;        // L2 strength on the weights (bias excluded)
    double learning_rate = 0.5;  // base step, decayed as 1/sqrt(t)
};

// Max-margin linear classifier (hinge loss + L2) fitted by full-batch
// subgradient descent; deterministic and order-independent. Requires at
// least two examples with both classes present.
EdgeModelWeights train_weights(const std::vector<std::pair<EdgeFeatures, bool>>& labeled,
                               const TrainConfig& config = {});

// Persistence: `feature<TAB>weight` rows plus a `bias` row for weights, and
// top_mean/top_std/rand_mean/rand_std rows for the distributions.
void save_weights(std::ostream& out, const EdgeModelWeights& weights);
EdgeModelWeights load_weights(std::istream& in);
void save_weights_file(const std::string& path, const EdgeModelWeights& weights);
EdgeModelWeights load_weights_file(const std::string& path);

void save_distributions(std::ostream& out, const GeneralityDistributions& dists);
GeneralityDistributions load_distributions(std::istream& in);
void save_distributions_file(const std::string& path, const GeneralityDistributions& dists);
GeneralityDistributions load_distributions_file(const std::string& path);

}  // namespace taxoflow
