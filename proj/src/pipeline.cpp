#include "umconv/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace umconv {

void ConversionStats::merge(const ConversionStats& other) {
  converted += other.converted;
  skipped_pos += other.skipped_pos;
  skipped_range += other.skipped_range;
  for (const auto& [key, count] : other.dropped) dropped[key] += count;
  audit.insert(audit.end(), other.audit.begin(), other.audit.end());
}

std::string converted_feats(const ConvertOutcome& outcome, bool strip_pos,
                            const DimensionRegistry& registry) {
  if (!outcome.converted()) return "";
  if (!strip_pos) return canonical_um(outcome.msd, registry);
  UmMsd stripped = outcome.msd;
  if (auto pos = stripped.pos(registry)) stripped.remove_atom(*pos);
  return canonical_um(stripped, registry);
}

namespace {

ConversionStats convert_sentence(Sentence& sentence, const ConvertOptions& options,
                                 const MappingTable& table, const RuleSet& rules,
                                 const DimensionRegistry& registry) {
  ConversionStats stats;
  for (Token& token : sentence.tokens) {
    ConvertOutcome outcome =
        convert_token(token, options.language, table, rules, registry, &stats.audit);
    switch (outcome.kind) {
      case ConvertOutcome::Kind::SkippedRange:
        ++stats.skipped_range;
        break;
      case ConvertOutcome::Kind::SkippedPos:
        ++stats.skipped_pos;
        break;
      case ConvertOutcome::Kind::Converted:
        ++stats.converted;
        for (const UdPair& pair : outcome.dropped) ++stats.dropped[{pair.attr, pair.value}];
        token.set_feats(converted_feats(outcome, options.strip_pos, registry));
        break;
    }
  }
  return stats;
}

}  // namespace

ConversionStats convert_document_serial(Document& doc, const ConvertOptions& options,
                                        const MappingTable& table, const RuleSet& rules,
                                        const DimensionRegistry& registry) {
  ConversionStats stats;
  for (Sentence& sentence : doc.sentences)
    stats.merge(convert_sentence(sentence, options, table, rules, registry));
  return stats;
}

ConversionStats convert_document_parallel(Document& doc, const ConvertOptions& options,
                                          const MappingTable& table, const RuleSet& rules,
                                          const DimensionRegistry& registry) {
#ifdef _OPENMP
  const int n = static_cast<int>(doc.sentences.size());
  std::vector<ConversionStats> per_sentence(doc.sentences.size());
  int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
  for (int i = 0; i < n; ++i)
    per_sentence[i] =
        convert_sentence(doc.sentences[static_cast<std::size_t>(i)], options, table, rules,
                         registry);
  // deterministic merge in sentence order
  ConversionStats stats;
  for (const ConversionStats& s : per_sentence) stats.merge(s);
  return stats;
#else
  return convert_document_serial(doc, options, table, rules, registry);
#endif
}

ConversionStats convert_document(Document& doc, const ConvertOptions& options,
                                 const MappingTable& table, const RuleSet& rules,
                                 const DimensionRegistry& registry) {
  if (options.jobs <= 1) return convert_document_serial(doc, options, table, rules, registry);
  return convert_document_parallel(doc, options, table, rules, registry);
}

namespace {

RecallAccumulator accumulate_parallel(const Document& converted, const ParadigmTable& table,
                                      const DimensionRegistry& registry, int jobs) {
  RecallAccumulator total;
#ifdef _OPENMP
  const int n = static_cast<int>(converted.sentences.size());
  if (jobs <= 0) jobs = omp_get_max_threads();
  std::vector<RecallAccumulator> per_sentence(converted.sentences.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
  for (int i = 0; i < n; ++i) {
    const Sentence& sentence = converted.sentences[static_cast<std::size_t>(i)];
    for (const Token& token : sentence.tokens)
      per_sentence[static_cast<std::size_t>(i)].add_token(token, table, registry);
  }
  for (const RecallAccumulator& acc : per_sentence) total.merge(acc);
#else
  (void)jobs;
  for (const Sentence& sentence : converted.sentences)
    for (const Token& token : sentence.tokens) total.add_token(token, table, registry);
#endif
  return total;
}

}  // namespace

RecallReport evaluate_recall_parallel(const Document& converted, const ParadigmTable& table,
                                      const DimensionRegistry& registry, int jobs) {
  return accumulate_parallel(converted, table, registry, jobs).report(table);
}

std::vector<DiscrepancyRecord> audit_discrepancies_parallel(const Document& converted,
                                                            const ParadigmTable& table,
                                                            const DimensionRegistry& registry,
                                                            int jobs) {
  return accumulate_parallel(converted, table, registry, jobs).discrepancies(registry);
}

}  // namespace umconv
