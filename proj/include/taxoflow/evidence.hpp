#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "taxoflow/term.hpp"

namespace taxoflow {

struct EvidenceTuple {
    Term hyponym;
    Term hypernym;
    long long frequency = 0;
};

struct Candidate {
    Term term;
    long long frequency = 0;
};

// Immutable indexed store of (hyponym, hypernym, frequency) tuples.
//
// Forward lists are ranked by decreasing frequency with lexicographic
// tie-break on the hypernym surface, so candidate ranks are total and stable
// across runs. Self-loops are dropped at construction and duplicate pairs are
// merged by summing frequencies. Safe to share across threads once built.
class EvidenceIndex {
public:
    EvidenceIndex() = default;

    static EvidenceIndex build(const std::vector<EvidenceTuple>& tuples);

    // Full ranked candidate list for a term; empty for unknown terms.
    const std::vector<Candidate>& candidates(const std::string& term) const;

    // Top-k slice of the ranked list. k must be >= 1.
    std::vector<Candidate> top_k(const std::string& term, int k) const;

    // Frequency of (hyponym -> hypernym), 0 when the pair is absent.
    long long frequency(const std::string& hyponym, const std::string& hypernym) const;

    // Highest candidate frequency for a term, 0 when it has no candidates.
    long long max_frequency(const std::string& hyponym) const;

    int distinct_hyponyms(const std::string& term) const;

    // g(t) = log(1 + number of distinct hyponyms of t).
    double generality(const std::string& term) const;

    bool has_candidates(const std::string& term) const;
    bool contains(const std::string& term) const { return terms_.count(term) > 0; }

    const std::map<std::string, Term>& terms() const { return terms_; }
    size_t vocabulary_size() const { return terms_.size(); }
    size_t tuple_count() const { return tuple_list_.size(); }

    // Deterministically ordered (hyponym, hypernym) pairs, for sampling.
    const std::vector<std::pair<std::string, std::string>>& tuple_list() const {
        return tuple_list_;
    }
    // Sorted surfaces of terms that have at least one candidate hypernym.
    const std::vector<std::string>& terms_with_candidates() const {
        return terms_with_candidates_;
    }

private:
    std::map<std::string, std::vector<Candidate>> forward_;
    std::map<std::string, int> reverse_;  // distinct hyponym counts
    std::map<std::string, Term> terms_;
    std::vector<std::pair<std::string, std::string>> tuple_list_;
    std::vector<std::string> terms_with_candidates_;
};

struct EvidenceLoadStats {
    size_t data_rows = 0;
    size_t malformed = 0;
    size_t self_loops = 0;
    std::vector<std::string> diagnostics;  // one entry per malformed row
};

// Reads tuple TSV (`hyponym<TAB>hypernym<TAB>frequency`, '#' comments and
// blank lines ignored). Malformed rows are skipped with a diagnostic; throws
// std::runtime_error when more than half of the data rows are malformed.
EvidenceIndex load_evidence(std::istream& in, HeadRule rule = HeadRule::RightHead,
                            EvidenceLoadStats* stats = nullptr);
EvidenceIndex load_evidence_file(const std::string& path,
                                 HeadRule rule = HeadRule::RightHead,
                                 EvidenceLoadStats* stats = nullptr);

// One term per line; '#' comments and blank lines ignored.
std::vector<Term> load_term_file(const std::string& path,
                                 HeadRule rule = HeadRule::RightHead);

}  // namespace taxoflow
