// Independent reference computations the tests check the implementation
// against. These deliberately re-derive results from the raw file text with
// naive string handling, not through the library's data structures.
#ifndef UMCONV_TESTS_ORACLES_HPP
#define UMCONV_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

std::string fixture_path(const std::string& name);
std::string data_path(const std::string& name);

struct JoinRecall {
  std::size_t overlap = 0;
  std::size_t matches = 0;
};

/// Brute-force join of a *converted* CoNLL-U text against a raw UniMorph TSV:
/// scans both line by line, compares tag sets case-insensitively, counts a
/// token only when its leading POS atom belongs to a family the table
/// annotates. Mirrors the definition, not the implementation.
JoinRecall join_recall(const std::string& converted_conllu_text, const std::string& tsv_text);

/// Naive majority-tag count: form -> (upos, feats) with highest frequency,
/// ties to the lexicographically smaller "upos\tfeats" string. FEATS strings
/// are compared verbatim here, so feed it canonical input.
std::map<std::string, std::pair<std::string, std::string>> count_lexicon(
    const std::string& conllu_text);

struct PairCounts {
  std::size_t gold = 0, tp = 0, fp = 0, fn = 0;
};

/// Independent pair-level recount for F1: token annotations arrive as
/// already-decomposed label sets.
std::map<std::string, PairCounts> recount_pairs(
    const std::vector<std::set<std::string>>& gold_labels,
    const std::vector<std::set<std::string>>& predicted_labels);

double macro_f1(const std::map<std::string, PairCounts>& counts);

}  // namespace oracles

#endif
