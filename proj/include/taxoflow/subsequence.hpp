#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "taxoflow/edge_model.hpp"
#include "taxoflow/evidence.hpp"

namespace taxoflow {

enum class SubsequencePhase { Searched, Expanded };

// An ordered generalization chain t0 -> h1 -> ... -> hn with its log-score.
// Terms never repeat within origin + chain.
struct Subsequence {
    Term origin;
    std::vector<Term> chain;  // h1..hn, n >= 1
    double log_score = 0.0;
    SubsequencePhase phase = SubsequencePhase::Searched;
};

struct SearchConfig {
    int k = 10;           // evidence cutoff
    int b = 4;            // subsequences kept per term
    int beam_width = 20;
    int max_length = 4;   // depth limit on searched chains
    double lambda1 = 0.95;  // rank penalty
    double lambda2 = 0.95;  // length penalty

    void validate() const;  // throws std::invalid_argument on bad ranges
};

// log of sum_{m=1..k} lambda1^m * max_j sim(E_k(t0, m), h_j). A chain member
// identical to the candidate contributes similarity 1 exactly. Throws when
// t0 has no candidate hypernyms.
double evidence_score(const EvidenceIndex& index, const EdgeModel& model,
                      const Term& t0, const std::vector<Term>& chain,
                      const SearchConfig& config);

// log Pr_e(t0, h1) + n*log(lambda2) + sum_j log Pr_e(h_j, h_{j+1}).
double prior_score(const EvidenceIndex& index, const EdgeModel& model,
                   const Term& t0, const std::vector<Term>& chain,
                   const SearchConfig& config);

double total_score(const EvidenceIndex& index, const EdgeModel& model,
                   const Term& t0, const std::vector<Term>& chain,
                   const SearchConfig& config);

// Compound candidates in E_k(t0) whose lexical head is itself in E_k(t0);
// these are skipped by the search phase and revisited during expansion.
std::vector<Term> skipped_compounds(const EvidenceIndex& index, const Term& t0,
                                    const SearchConfig& config);

// Search phase: per non-skipped candidate h_c, depth-limited beam search over
// chains starting t0 -> h_c keeps the chain with the highest total score;
// returns the top-b candidates' chains ranked by that score. Ties break on
// lexicographic chain order. No candidates -> empty result.
std::vector<Subsequence> extract_subsequences(const EvidenceIndex& index,
                                              const EdgeModel& model, const Term& t0,
                                              const SearchConfig& config);

// Fixed random term sample used by the IDF side of pre-modifier scoring;
// drawn once per run.
struct IdfSample {
    std::vector<std::string> terms;
};
IdfSample draw_idf_sample(const EvidenceIndex& index, int count, uint64_t seed);

// TF/(1 + IDF): TF is the frequency-weighted occurrence rate of the
// pre-modifier across E_k(t0); IDF is the same rate averaged over the random
// term sample.
double premodifier_tfidf(const EvidenceIndex& index, const IdfSample& sample,
                         const std::string& premodifier, const Term& t0,
                         const SearchConfig& config);

// One candidate expansion of an edge x -> y: compounds listed outermost
// first, to be spliced as x -> c_p -> ... -> c_1 -> y.
struct EdgeExpansion {
    std::vector<Term> compounds;
    double score = 0.0;
};

// All valid expansions of an edge into y given the eligible compounds
// (strictly nested pre-modifier sets, innermost strictly above y's), ranked
// best-first. Always contains the empty expansion.
std::vector<EdgeExpansion> enumerate_edge_expansions(
    const EvidenceIndex& index, const IdfSample& sample, const Term& y,
    const std::vector<Term>& eligible, const Term& t0, const SearchConfig& config);

// Expansion phase: splices the top-ranked compound chain into each chain
// edge whose head node anchors skipped compounds; recomputes the log-score
// on the expanded chain.
Subsequence expand_subsequence(const EvidenceIndex& index, const EdgeModel& model,
                               const IdfSample& sample, const Subsequence& searched,
                               const std::vector<Term>& skipped,
                               const SearchConfig& config);

// Dump format: origin<TAB>chain("a -> b -> c")<TAB>logScore<TAB>phase.
void save_subsequences(std::ostream& out, const std::vector<Subsequence>& subsequences);
std::vector<Subsequence> load_subsequences(std::istream& in,
                                           HeadRule rule = HeadRule::RightHead);
void save_subsequences_file(const std::string& path,
                            const std::vector<Subsequence>& subsequences);
std::vector<Subsequence> load_subsequences_file(const std::string& path,
                                                HeadRule rule = HeadRule::RightHead);

}  // namespace taxoflow
