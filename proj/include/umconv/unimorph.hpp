#ifndef UMCONV_UNIMORPH_HPP
#define UMCONV_UNIMORPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "umconv/schema.hpp"

namespace umconv {

/// Type-level UniMorph lookup: (lemma, form) -> attested MSDs for one
/// language. Keys are NFC-normalized at load and lookup; case is preserved.
class ParadigmTable {
 public:
  struct LoadIssue {
    std::size_t line;
    std::string detail;
  };

  /// Loads `lemma<TAB>form<TAB>tag` rows (UTF-8, no header). Duplicate
  /// (lemma, form, tag) rows are deduplicated. Rows with an empty tag, a
  /// POS outside the noun/verb/adjective families, or no POS at all are
  /// skipped with an audit record. Throws MalformedRow on a wrong field
  /// count; an empty file yields an empty table.
  static ParadigmTable load(const std::string& path, const std::string& language,
                            const DimensionRegistry& registry);
  static ParadigmTable from_text(std::string_view text, const std::string& language,
                                 const DimensionRegistry& registry);

  /// Exact match after NFC normalization; empty when absent.
  const std::vector<UmMsd>& lookup(const std::string& lemma, const std::string& form) const;
  /// True when (fold_lemma_case(lemma), form) is attested though the exact
  /// pair is not: the casing near-miss the evaluator reports separately.
  bool case_only_miss(const std::string& lemma, const std::string& form) const;

  /// POS families ("N", "V", "ADJ") attested anywhere in the table.
  const std::set<std::string>& pos_families() const { return families_; }

  std::size_t size() const { return size_; }
  std::size_t pair_count() const { return entries_.size(); }
  const std::string& language() const { return language_; }
  const std::string& content_hash() const { return hash_; }
  const std::vector<LoadIssue>& issues() const { return issues_; }
  const std::set<std::string>& unknown_atoms() const { return unknown_atoms_; }

 private:
  std::map<std::pair<std::string, std::string>, std::vector<UmMsd>> entries_;
  std::set<std::pair<std::string, std::string>> folded_keys_;
  std::set<std::string> families_;
  std::set<std::string> unknown_atoms_;
  std::vector<LoadIssue> issues_;
  std::string language_;
  std::string hash_;
  std::size_t size_ = 0;  // stored (lemma, form, tag) triples after dedup
};

/// Family of a POS atom: the part before the first '.', so V.PTCP -> V.
std::string pos_family(const std::string& pos_atom);

}  // namespace umconv

#endif
