#include "umconv/report.hpp"

#include <sstream>

#include "umconv/util.hpp"

namespace umconv {

namespace {

std::string provenance_lines(const RunProvenance& prov, const std::string& prefix) {
  std::string out;
  if (!prov.mapping_hash.empty()) out += prefix + "mapping-hash\t" + prov.mapping_hash + "\n";
  if (!prov.rules_hash.empty()) out += prefix + "rules-hash\t" + prov.rules_hash + "\n";
  if (!prov.table_hash.empty()) out += prefix + "table-hash\t" + prov.table_hash + "\n";
  return out;
}

std::string maybe_percent(const std::optional<double>& value) {
  return value ? format_percent(*value) : std::string("-");
}

}  // namespace

std::string render_diff(const std::vector<DimensionDiff>& diff) {
  std::string out;
  for (const auto& d : diff) {
    for (const auto& [att, conv] : d.substituted) {
      if (!out.empty()) out += ' ';
      out += d.dimension + ":" + att + ">" + conv;
    }
    for (const auto& atom : d.missing) {
      if (!out.empty()) out += ' ';
      out += d.dimension + ":missing=" + atom;
    }
    for (const auto& atom : d.extra) {
      if (!out.empty()) out += ' ';
      out += d.dimension + ":extra=" + atom;
    }
  }
  return out;
}

std::string render_recall_report(const RecallReport& report, const RunProvenance& prov,
                                 ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Tsv) {
    out << provenance_lines(prov, "# ");
    out << "language\toverlap\tmatches\trecall\tlow_overlap\tdistinct_pairs\tnear_misses"
        << "\ttype_overlap\ttype_matches\ttype_recall\n";
    out << report.language << '\t' << report.overlapping_tokens << '\t' << report.matches << '\t'
        << maybe_percent(report.recall()) << '\t' << (report.low_overlap() ? "yes" : "no") << '\t'
        << report.distinct_pairs << '\t' << report.near_misses << '\t' << report.type_overlap
        << '\t' << report.type_matches << '\t' << maybe_percent(report.type_recall()) << '\n';
    for (const auto& [family, counts] : report.per_pos) {
      std::optional<double> r;
      if (counts.overlap)
        r = 100.0 * static_cast<double>(counts.matches) / static_cast<double>(counts.overlap);
      out << "pos:" << family << '\t' << counts.overlap << '\t' << counts.matches << '\t'
          << maybe_percent(r) << "\t\t\t\t\t\t\n";
    }
    return out.str();
  }

  out << "Recall report (" << report.language << ")\n";
  out << "  overlapping tokens : " << report.overlapping_tokens << "\n";
  out << "  matching MSDs      : " << report.matches << "\n";
  out << "  token-level recall : " << maybe_percent(report.recall()) << "\n";
  out << "  overlapping types  : " << report.distinct_pairs;
  if (report.low_overlap())
    out << "  [low overlap: fewer than " << RecallReport::kLowOverlapThreshold
        << " form-lemma pairs]";
  out << "\n";
  out << "  type-level recall  : " << maybe_percent(report.type_recall()) << " ("
      << report.type_matches << "/" << report.type_overlap << ")\n";
  if (report.near_misses)
    out << "  near misses        : " << report.near_misses << " (lemma casing only)\n";
  for (const auto& [family, counts] : report.per_pos) {
    std::optional<double> r;
    if (counts.overlap)
      r = 100.0 * static_cast<double>(counts.matches) / static_cast<double>(counts.overlap);
    out << "    " << family << ": " << counts.matches << "/" << counts.overlap << " ("
        << maybe_percent(r) << ")\n";
  }
  if (!prov.mapping_hash.empty()) out << "  mapping hash       : " << prov.mapping_hash << "\n";
  if (!prov.rules_hash.empty()) out << "  rules hash         : " << prov.rules_hash << "\n";
  if (!prov.table_hash.empty()) out << "  table hash         : " << prov.table_hash << "\n";
  return out.str();
}

std::string render_discrepancies(const std::vector<DiscrepancyRecord>& records,
                                 const RunProvenance& prov, ReportFormat format) {
  std::ostringstream out;
  out << provenance_lines(prov, "# ");
  if (format == ReportFormat::Tsv || format == ReportFormat::Text) {
    out << "count\tlemma\tform\tconverted\tattested\tdiff\n";
    for (const auto& rec : records) {
      out << rec.count << '\t' << rec.lemma << '\t' << rec.form << '\t' << rec.converted << '\t'
          << join(rec.attested, ",") << '\t' << render_diff(rec.diff) << '\n';
    }
  }
  return out.str();
}

std::string render_f1_report(const F1Report& report, const std::string& schema_name,
                             const RunProvenance& prov, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Tsv) {
    out << provenance_lines(prov, "# ");
    out << "pair\tgold\ttp\tfp\tfn\tprecision\trecall\tf1\n";
    for (const auto& [label, score] : report.per_pair) {
      out << label << '\t' << score.gold << '\t' << score.tp << '\t' << score.fp << '\t'
          << score.fn << '\t' << format_percent(100.0 * score.precision()) << '\t'
          << format_percent(100.0 * score.recall()) << '\t'
          << format_percent(100.0 * score.f1()) << '\n';
    }
    out << "macro_f1_with_pos\t\t\t\t\t\t\t" << format_percent(100.0 * report.macro_f1_with_pos)
        << '\n';
    out << "macro_f1_without_pos\t\t\t\t\t\t\t"
        << format_percent(100.0 * report.macro_f1_without_pos) << '\n';
    return out.str();
  }

  out << "Attribute-value F1 (" << schema_name << " schema)\n";
  for (const auto& [label, score] : report.per_pair) {
    out << "  " << label << ": P=" << format_percent(100.0 * score.precision())
        << " R=" << format_percent(100.0 * score.recall())
        << " F1=" << format_percent(100.0 * score.f1()) << " (gold " << score.gold << ")\n";
  }
  out << "  macro F1 (with POS)    : " << format_percent(100.0 * report.macro_f1_with_pos)
      << "\n";
  out << "  macro F1 (without POS) : " << format_percent(100.0 * report.macro_f1_without_pos)
      << "\n";
  if (!prov.mapping_hash.empty()) out << "  mapping hash: " << prov.mapping_hash << "\n";
  if (!prov.rules_hash.empty()) out << "  rules hash: " << prov.rules_hash << "\n";
  return out.str();
}

std::string render_dropped_pairs(const ConversionStats& stats) {
  // sorted by count desc, then attribute/value, for a stable audit file
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> rows(
      stats.dropped.begin(), stats.dropped.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::string out = "attribute\tvalue\tcount\n";
  for (const auto& [key, count] : rows)
    out += key.first + "\t" + key.second + "\t" + std::to_string(count) + "\n";
  return out;
}

}  // namespace umconv
