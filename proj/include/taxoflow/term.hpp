#pragma once

#include <string>
#include <vector>

namespace taxoflow {

// Head-finding rule for compound terms. Only the right-headed rule ships
// (correct for English noun compounds); new languages plug in here.
enum class HeadRule {
    RightHead,
};

HeadRule head_rule_from_name(const std::string& name);
std::string head_rule_name(HeadRule rule);

// A normalized term: lowercased whitespace-split tokens with surrounding
// punctuation stripped. The last token is the lexical head under the
// right-headed rule; everything before it is a pre-modifier.
struct Term {
    std::vector<std::string> tokens;
    std::string surface;  // tokens joined with single spaces

    const std::string& head() const { return tokens.back(); }
    std::vector<std::string> premodifiers() const {
        return {tokens.begin(), tokens.end() - 1};
    }
    bool compound() const { return tokens.size() > 1; }

    bool operator==(const Term& other) const { return surface == other.surface; }
    bool operator<(const Term& other) const { return surface < other.surface; }
};

// Normalizes a raw string into a Term. Throws std::invalid_argument when the
// input is empty or contains no tokens after punctuation trimming.
Term lexical_head(const std::string& raw, HeadRule rule = HeadRule::RightHead);

}  // namespace taxoflow
