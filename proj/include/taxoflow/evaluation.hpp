#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>

#include "taxoflow/flow.hpp"

namespace taxoflow {

// Gold reference for scoring. `terms` is derived from the edges; `resource`
// is the wider known-term set (defaults to `terms`) used to decide which
// predicted nodes exist at all in the reference.
struct GoldStandard {
    std::set<std::pair<std::string, std::string>> edges;
    std::set<std::string> terms;
    std::string root;
    std::set<std::string> resource;
};

struct EdgePRF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// P/R/F1 of predicted edges against gold edges. Empty predictions score 0;
// an empty gold set is an error.
EdgePRF edge_prf(const Taxonomy& predicted, const GoldStandard& gold);

// Fraction of covered terms (restricted to the gold resource) that lie in
// the gold sub-hierarchy. Throws when no covered term is in the resource.
double term_precision(const Taxonomy& predicted, const GoldStandard& gold);

// Precision over transitive (term, ancestor) pairs from covered terms,
// after dropping pairs with an endpoint outside the gold resource and the
// trivial pairs into `root`. Vacuously 1 when no pair remains.
double ancestor_precision(const Taxonomy& predicted, const GoldStandard& gold,
                          const std::string& root);

// Loads a gold edge TSV (same format as taxonomy output). The root must be
// given or inferable as the unique term without an outgoing edge; it must
// have no outgoing edge. An optional resource file (one term per line)
// widens the resource set.
GoldStandard load_gold_file(const std::string& path, const std::string& root = "",
                            const std::string& resource_path = "",
                            HeadRule rule = HeadRule::RightHead);

}  // namespace taxoflow
