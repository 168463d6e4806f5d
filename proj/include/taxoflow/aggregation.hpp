#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taxoflow/subsequence.hpp"

namespace taxoflow {

// Add-one smoothed unigram model over the tokens of extracted subsequences.
// Tokens from the lower part of each chain weigh more when fitting (they are
// the domain-specific ones).
class UnigramDomainModel {
public:
    static UnigramDomainModel fit(const std::vector<Subsequence>& subsequences,
                                  double height_cutoff, double upper_weight);

    double token_log_prob(const std::string& token) const;
    // Geometric mean of token probabilities over origin + chain.
    double generation_score(const Subsequence& subsequence) const;

private:
    std::map<std::string, double> log_prob_;
    double unknown_log_prob_ = 0.0;
};

// Weighted directed hypernym graph. Edges run hyponym -> hypernym.
struct HypernymGraph {
    std::map<std::string, std::map<std::string, double>> out;
    std::set<std::string> nodes;
    bool acyclic = false;

    void add_node(const std::string& term) { nodes.insert(term); }
    void add_edge(const std::string& x, const std::string& y, double weight);
    bool has_edge(const std::string& x, const std::string& y) const;
    double weight(const std::string& x, const std::string& y) const;
    size_t edge_count() const;
    bool has_outgoing(const std::string& x) const;
};

// Length-normalized positive weight for a subsequence, in (0, 1]:
// exp(logScore / (1 + n)) capped at 1.
double positive_score(const Subsequence& subsequence);

// Keeps subsequences whose unigram generation score reaches the threshold.
// The model is fitted over the input itself. Order-preserving.
std::vector<Subsequence> domain_filter(const std::vector<Subsequence>& subsequences,
                                       double threshold, double height_cutoff = 0.5,
                                       double upper_weight = 0.25);

// Every chain edge becomes a graph edge weighted by the sum of the positive
// scores of the subsequences containing it.
HypernymGraph build_hypernym_graph(const std::vector<Subsequence>& subsequences);

// Compound vocabulary terms with no hypernym yet get a fallback edge to
// their lexical head (weight w_max) when the head is already in the graph.
HypernymGraph attach_lexical_heads(HypernymGraph graph, const std::vector<Term>& vocabulary,
                                   double w_max);

struct CycleBreakStats {
    int cycles_removed = 0;
    double weight_removed = 0.0;
};

// Repeatedly finds a directed cycle and deletes its minimum-weight edge
// (ties: lexicographically smallest (x, y)) until none remain.
HypernymGraph break_cycles(HypernymGraph graph, CycleBreakStats* stats = nullptr);

// Kahn topological check.
bool is_acyclic(const HypernymGraph& graph);

// Serialization: `x<TAB>y<TAB>weight` with a header comment recording the
// acyclic flag.
void save_graph(std::ostream& out, const HypernymGraph& graph);
HypernymGraph load_graph(std::istream& in);
void save_graph_file(const std::string& path, const HypernymGraph& graph);
HypernymGraph load_graph_file(const std::string& path);

}  // namespace taxoflow
