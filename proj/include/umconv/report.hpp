#ifndef UMCONV_REPORT_HPP
#define UMCONV_REPORT_HPP

#include <string>
#include <vector>

#include "umconv/pipeline.hpp"
#include "umconv/recall.hpp"
#include "umconv/tagger.hpp"

namespace umconv {

enum class ReportFormat { Text, Tsv };

/// Hashes of the inputs a run depended on; embedded in every report.
struct RunProvenance {
  std::string mapping_hash;
  std::string rules_hash;
  std::string table_hash;
};

std::string render_recall_report(const RecallReport& report, const RunProvenance& prov,
                                 ReportFormat format);
std::string render_discrepancies(const std::vector<DiscrepancyRecord>& records,
                                 const RunProvenance& prov, ReportFormat format);
std::string render_f1_report(const F1Report& report, const std::string& schema_name,
                             const RunProvenance& prov, ReportFormat format);
std::string render_dropped_pairs(const ConversionStats& stats);
std::string render_diff(const std::vector<DimensionDiff>& diff);

}  // namespace umconv

#endif
