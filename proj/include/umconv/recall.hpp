#ifndef UMCONV_RECALL_HPP
#define UMCONV_RECALL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umconv/conllu.hpp"
#include "umconv/schema.hpp"
#include "umconv/unimorph.hpp"

namespace umconv {

struct PosRecall {
  std::size_t overlap = 0;
  std::size_t matches = 0;
};

/// Token-level recall of converted MSDs against the paradigm table, plus the
/// type-level variant (deduplicated by lemma, form, and converted MSD) for
/// comparison. Recall is undefined, not zero, when nothing overlaps.
struct RecallReport {
  std::string language;
  std::size_t overlapping_tokens = 0;
  std::size_t matches = 0;
  std::size_t distinct_pairs = 0;  // overlapping (form, lemma) types
  std::size_t near_misses = 0;     // overlap blocked only by lemma casing
  std::size_t type_overlap = 0;
  std::size_t type_matches = 0;
  std::map<std::string, PosRecall> per_pos;  // keyed by POS family
  std::string table_hash;

  std::optional<double> recall() const {
    if (overlapping_tokens == 0) return std::nullopt;
    return 100.0 * static_cast<double>(matches) / static_cast<double>(overlapping_tokens);
  }
  std::optional<double> type_recall() const {
    if (type_overlap == 0) return std::nullopt;
    return 100.0 * static_cast<double>(type_matches) / static_cast<double>(type_overlap);
  }
  /// The sparse-overlap warning threshold used in reporting.
  static constexpr std::size_t kLowOverlapThreshold = 250;
  bool low_overlap() const { return distinct_pairs < kLowOverlapThreshold; }
};

struct DimensionDiff {
  std::string dimension;
  std::vector<std::string> missing;  // attested but not converted
  std::vector<std::string> extra;    // converted but not attested
  std::vector<std::pair<std::string, std::string>> substituted;  // attested -> converted

  bool empty() const { return missing.empty() && extra.empty() && substituted.empty(); }
};

struct DiscrepancyRecord {
  std::string lemma;
  std::string form;
  std::string converted;              // canonical
  std::vector<std::string> attested;  // canonical, sorted
  std::vector<DimensionDiff> diff;    // against the closest attested MSD
  std::size_t count = 0;
};

/// Internal per-token aggregation shared by the serial and parallel paths.
/// Merging accumulators is associative and order-insensitive.
class RecallAccumulator {
 public:
  void add_token(const Token& token, const ParadigmTable& table,
                 const DimensionRegistry& registry);
  void merge(const RecallAccumulator& other);

  RecallReport report(const ParadigmTable& table) const;
  std::vector<DiscrepancyRecord> discrepancies(const DimensionRegistry& registry) const;

 private:
  struct MissInfo {
    std::size_t count = 0;
    std::vector<std::string> attested;
  };

  std::size_t overlapping_tokens_ = 0;
  std::size_t matches_ = 0;
  std::size_t near_misses_ = 0;
  std::map<std::string, PosRecall> per_pos_;
  std::set<std::pair<std::string, std::string>> pairs_;
  std::set<std::tuple<std::string, std::string, std::string>> type_seen_;
  std::set<std::tuple<std::string, std::string, std::string>> type_matched_;
  std::map<std::tuple<std::string, std::string, std::string>, MissInfo> misses_;
};

/// Serial reference implementation. `converted` must hold unstripped
/// UniMorph FEATS; tokens whose FEATS do not parse to an MSD with a POS in
/// one of the table's families stay out of the denominator.
RecallReport evaluate_recall(const Document& converted, const ParadigmTable& table,
                             const DimensionRegistry& registry);

/// One record per distinct (lemma, form, converted MSD) miss, diffed per
/// dimension against the closest attested MSD, sorted by descending count.
std::vector<DiscrepancyRecord> audit_discrepancies(const Document& converted,
                                                   const ParadigmTable& table,
                                                   const DimensionRegistry& registry);

/// Diff of a converted MSD against one attested MSD, grouped by dimension,
/// dimensions in registry precedence order.
std::vector<DimensionDiff> diff_msds(const UmMsd& converted, const UmMsd& attested,
                                     const DimensionRegistry& registry);

}  // namespace umconv

#endif
