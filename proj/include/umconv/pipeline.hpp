#ifndef UMCONV_PIPELINE_HPP
#define UMCONV_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "umconv/conllu.hpp"
#include "umconv/mapping.hpp"
#include "umconv/recall.hpp"
#include "umconv/rules.hpp"
#include "umconv/unimorph.hpp"

namespace umconv {

struct ConvertOptions {
  std::string language;
  bool strip_pos = false;
  int jobs = 1;  // <= 1 runs the serial reference path
};

struct ConversionStats {
  std::size_t converted = 0;
  std::size_t skipped_pos = 0;
  std::size_t skipped_range = 0;
  std::map<std::pair<std::string, std::string>, std::size_t> dropped;  // (attr, value) -> count
  AuditLog audit;  // sentence order, token order within a sentence

  void merge(const ConversionStats& other);
};

/// Serial reference conversion: rewrites the FEATS column of every
/// convertible token with the canonical UniMorph MSD. Kept as the oracle the
/// parallel kernel is tested against.
ConversionStats convert_document_serial(Document& doc, const ConvertOptions& options,
                                        const MappingTable& table, const RuleSet& rules,
                                        const DimensionRegistry& registry);

/// OpenMP kernel: sentences are independent, so they convert in parallel.
/// Produces byte-identical documents and stats to the serial path.
ConversionStats convert_document_parallel(Document& doc, const ConvertOptions& options,
                                          const MappingTable& table, const RuleSet& rules,
                                          const DimensionRegistry& registry);

/// Dispatches on options.jobs.
ConversionStats convert_document(Document& doc, const ConvertOptions& options,
                                 const MappingTable& table, const RuleSet& rules,
                                 const DimensionRegistry& registry);

/// OpenMP recall evaluation; merges per-thread accumulators. Matches the
/// serial evaluate_recall exactly.
RecallReport evaluate_recall_parallel(const Document& converted, const ParadigmTable& table,
                                      const DimensionRegistry& registry, int jobs);

std::vector<DiscrepancyRecord> audit_discrepancies_parallel(const Document& converted,
                                                            const ParadigmTable& table,
                                                            const DimensionRegistry& registry,
                                                            int jobs);

/// Canonical FEATS replacement for one outcome (strip-POS aware); "" means
/// leave the token untouched.
std::string converted_feats(const ConvertOutcome& outcome, bool strip_pos,
                            const DimensionRegistry& registry);

}  // namespace umconv

#endif
