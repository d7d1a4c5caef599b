#include "umconv/recall.hpp"

#include <algorithm>

#include "umconv/util.hpp"

namespace umconv {

std::vector<DimensionDiff> diff_msds(const UmMsd& converted, const UmMsd& attested,
                                     const DimensionRegistry& registry) {
  std::vector<std::string> dims;
  for (const auto& v : converted.values()) dims.push_back(v.dimension);
  for (const auto& v : attested.values()) dims.push_back(v.dimension);
  std::sort(dims.begin(), dims.end(), [&](const std::string& a, const std::string& b) {
    int pa = registry.precedence(a), pb = registry.precedence(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  std::vector<DimensionDiff> out;
  for (const std::string& dim : dims) {
    std::vector<std::string> conv = converted.atoms_in(dim);
    std::vector<std::string> att = attested.atoms_in(dim);
    std::vector<std::string> conv_only, att_only;
    std::set_difference(conv.begin(), conv.end(), att.begin(), att.end(),
                        std::back_inserter(conv_only));
    std::set_difference(att.begin(), att.end(), conv.begin(), conv.end(),
                        std::back_inserter(att_only));
    if (conv_only.empty() && att_only.empty()) continue;

    DimensionDiff diff;
    diff.dimension = dim;
    std::size_t paired = std::min(conv_only.size(), att_only.size());
    for (std::size_t i = 0; i < paired; ++i)
      diff.substituted.emplace_back(att_only[i], conv_only[i]);
    for (std::size_t i = paired; i < att_only.size(); ++i) diff.missing.push_back(att_only[i]);
    for (std::size_t i = paired; i < conv_only.size(); ++i) diff.extra.push_back(conv_only[i]);
    out.push_back(std::move(diff));
  }
  return out;
}

void RecallAccumulator::add_token(const Token& token, const ParadigmTable& table,
                                  const DimensionRegistry& registry) {
  if (token.is_range()) return;
  UmParseResult parsed = parse_um_tag(token.feats_field(), registry);
  auto pos = parsed.msd.pos(registry);
  if (!pos) return;  // skipped or never converted
  std::string family = pos_family(*pos);
  if (!table.pos_families().count(family)) return;

  const std::string& lemma = token.lemma();
  const std::string& form = token.form();
  const auto& attested = table.lookup(lemma, form);
  if (attested.empty()) {
    if (table.case_only_miss(lemma, form)) ++near_misses_;
    return;
  }

  ++overlapping_tokens_;
  pairs_.insert({form, lemma});
  auto& pos_bucket = per_pos_[family];
  ++pos_bucket.overlap;

  bool matched = std::any_of(attested.begin(), attested.end(),
                             [&](const UmMsd& m) { return msd_equal(m, parsed.msd); });
  std::string canonical = canonical_um(parsed.msd, registry);
  std::tuple<std::string, std::string, std::string> type_key{lemma, form, canonical};
  type_seen_.insert(type_key);
  if (matched) {
    ++matches_;
    ++pos_bucket.matches;
    type_matched_.insert(type_key);
  } else {
    MissInfo& miss = misses_[type_key];
    ++miss.count;
    if (miss.attested.empty()) {
      for (const UmMsd& m : attested) miss.attested.push_back(canonical_um(m, registry));
      std::sort(miss.attested.begin(), miss.attested.end());
    }
  }
}

void RecallAccumulator::merge(const RecallAccumulator& other) {
  overlapping_tokens_ += other.overlapping_tokens_;
  matches_ += other.matches_;
  near_misses_ += other.near_misses_;
  for (const auto& [family, counts] : other.per_pos_) {
    per_pos_[family].overlap += counts.overlap;
    per_pos_[family].matches += counts.matches;
  }
  pairs_.insert(other.pairs_.begin(), other.pairs_.end());
  type_seen_.insert(other.type_seen_.begin(), other.type_seen_.end());
  type_matched_.insert(other.type_matched_.begin(), other.type_matched_.end());
  for (const auto& [key, miss] : other.misses_) {
    MissInfo& mine = misses_[key];
    mine.count += miss.count;
    if (mine.attested.empty()) mine.attested = miss.attested;
  }
}

RecallReport RecallAccumulator::report(const ParadigmTable& table) const {
  RecallReport report;
  report.language = table.language();
  report.table_hash = table.content_hash();
  report.overlapping_tokens = overlapping_tokens_;
  report.matches = matches_;
  report.near_misses = near_misses_;
  report.distinct_pairs = pairs_.size();
  report.per_pos = per_pos_;
  report.type_overlap = type_seen_.size();
  report.type_matches = type_matched_.size();
  return report;
}

std::vector<DiscrepancyRecord> RecallAccumulator::discrepancies(
    const DimensionRegistry& registry) const {
  std::vector<DiscrepancyRecord> records;
  for (const auto& [key, miss] : misses_) {
    DiscrepancyRecord rec;
    rec.lemma = std::get<0>(key);
    rec.form = std::get<1>(key);
    rec.converted = std::get<2>(key);
    rec.attested = miss.attested;
    rec.count = miss.count;

    // Diff against the closest attested MSD; ties go to the first in the
    // sorted canonical order so the record is deterministic.
    UmMsd conv = parse_um_tag(rec.converted, registry).msd;
    std::size_t best_score = SIZE_MAX;
    for (const std::string& tag : rec.attested) {
      UmMsd att = parse_um_tag(tag, registry).msd;
      std::vector<DimensionDiff> diff = diff_msds(conv, att, registry);
      std::size_t score = 0;
      for (const auto& d : diff)
        score += d.missing.size() + d.extra.size() + 2 * d.substituted.size();
      if (score < best_score) {
        best_score = score;
        rec.diff = std::move(diff);
      }
    }
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const DiscrepancyRecord& a,
                                               const DiscrepancyRecord& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.lemma != b.lemma) return a.lemma < b.lemma;
    if (a.form != b.form) return a.form < b.form;
    return a.converted < b.converted;
  });
  return records;
}

RecallReport evaluate_recall(const Document& converted, const ParadigmTable& table,
                             const DimensionRegistry& registry) {
  RecallAccumulator acc;
  for (const Sentence& sentence : converted.sentences)
    for (const Token& token : sentence.tokens) acc.add_token(token, table, registry);
  return acc.report(table);
}

std::vector<DiscrepancyRecord> audit_discrepancies(const Document& converted,
                                                   const ParadigmTable& table,
                                                   const DimensionRegistry& registry) {
  RecallAccumulator acc;
  for (const Sentence& sentence : converted.sentences)
    for (const Token& token : sentence.tokens) acc.add_token(token, table, registry);
  return acc.discrepancies(registry);
}

}  // namespace umconv
