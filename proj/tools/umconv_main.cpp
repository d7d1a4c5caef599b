// Command-line front end: convert | evaluate | audit | tag.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "umconv/conllu.hpp"
#include "umconv/error.hpp"
#include "umconv/mapping.hpp"
#include "umconv/pipeline.hpp"
#include "umconv/recall.hpp"
#include "umconv/report.hpp"
#include "umconv/rules.hpp"
#include "umconv/tagger.hpp"
#include "umconv/unimorph.hpp"
#include "umconv/util.hpp"

namespace fs = std::filesystem;
using namespace umconv;

namespace {

struct CommonOptions {
  std::string language;
  std::string input;
  std::string output;
  std::string mapping_path = "data/ud-unimorph.map";
  std::string rules_path = "data/rules";
  std::string dimensions_path = "data/dimensions.tsv";
  std::string langcodes_path = "data/langcodes.tsv";
  std::string unimorph_path;
  std::string report_format = "text";
  bool strip_pos = false;
  bool csv_only = false;
  int jobs = 1;
  int suffix_k = 4;
  std::string schema = "ud";
  std::string train_path;
  std::string test_path;
};

void add_data_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--mapping", opt.mapping_path, "UD->UniMorph mapping file");
  cmd->add_option("--rules", opt.rules_path, "rules directory (<lang>.rules) or a rule file");
  cmd->add_option("--dimensions", opt.dimensions_path, "dimension registry file");
  cmd->add_option("--langcodes", opt.langcodes_path, "treebank-name to language-code table");
}

std::string resolve_language(const CommonOptions& opt) {
  if (opt.language.empty()) return opt.language;
  if (!fs::exists(opt.langcodes_path)) return opt.language;
  for (const std::string& raw : split(read_file(opt.langcodes_path), '\n')) {
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) continue;
    if (trim(line.substr(0, tab)) == opt.language) return std::string(trim(line.substr(tab + 1)));
  }
  return opt.language;
}

RuleSet load_rules(const CommonOptions& opt, const std::string& lang,
                   const DimensionRegistry& registry) {
  if (opt.csv_only) return RuleSet{};
  std::string path = opt.rules_path;
  if (fs::is_directory(path)) path = (fs::path(path) / (lang + ".rules")).string();
  if (!fs::exists(path)) {
    std::cerr << "warning: no rules file for language '" << lang
              << "'; using the empty rule set\n";
    return RuleSet{};
  }
  RuleSet rules = RuleSet::load(path, registry);
  for (const std::string& finding : lint_rules(rules))
    std::cerr << "warning: rules lint: " << finding << "\n";
  return rules;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty())
    std::cout << text;
  else
    write_file(output_path, text);
}

int run_convert(CommonOptions& opt) {
  DimensionRegistry registry = DimensionRegistry::load(opt.dimensions_path);
  MappingTable mapping = MappingTable::load(opt.mapping_path, registry);
  std::string lang = resolve_language(opt);
  RuleSet rules = load_rules(opt, lang, registry);

  Document doc = load_conllu(opt.input);
  ConvertOptions options{lang, opt.strip_pos, opt.jobs};
  ConversionStats stats = convert_document(doc, options, mapping, rules, registry);
  for (const AuditFinding& f : stats.audit)
    std::cerr << "warning: " << f.kind << ": " << f.detail << "\n";

  if (opt.output.empty()) {
    std::cout << serialize_document(doc);
  } else {
    write_file(opt.output, serialize_document(doc));
    write_file(opt.output + ".dropped.tsv", render_dropped_pairs(stats));
  }
  std::cerr << "converted " << stats.converted << " tokens (skipped " << stats.skipped_pos
            << " excluded-POS, " << stats.skipped_range << " ranges)\n";
  return 0;
}

int run_evaluate(CommonOptions& opt, bool audit_mode) {
  DimensionRegistry registry = DimensionRegistry::load(opt.dimensions_path);
  MappingTable mapping = MappingTable::load(opt.mapping_path, registry);
  std::string lang = resolve_language(opt);
  RuleSet rules = load_rules(opt, lang, registry);

  if (!fs::exists(opt.unimorph_path)) {
    std::cerr << "error: UniMorph table not found at '" << opt.unimorph_path << "'\n";
    return 1;
  }
  ParadigmTable table = ParadigmTable::load(opt.unimorph_path, lang, registry);
  for (const std::string& atom : table.unknown_atoms())
    std::cerr << "warning: unknown atom '" << atom << "' in table\n";

  Document doc = load_conllu(opt.input);
  ConvertOptions options{lang, false, opt.jobs};
  convert_document(doc, options, mapping, rules, registry);

  RunProvenance prov{mapping.content_hash(), rules.content_hash(), table.content_hash()};
  ReportFormat format = opt.report_format == "tsv" ? ReportFormat::Tsv : ReportFormat::Text;

  if (audit_mode) {
    auto records = opt.jobs > 1 ? audit_discrepancies_parallel(doc, table, registry, opt.jobs)
                                : audit_discrepancies(doc, table, registry);
    emit(render_discrepancies(records, prov, format), opt.output);
  } else {
    RecallReport report = opt.jobs > 1 ? evaluate_recall_parallel(doc, table, registry, opt.jobs)
                                       : evaluate_recall(doc, table, registry);
    emit(render_recall_report(report, prov, format), opt.output);
  }
  return 0;
}

int run_tag(CommonOptions& opt) {
  DimensionRegistry registry = DimensionRegistry::load(opt.dimensions_path);
  Schema schema = opt.schema == "unimorph" ? Schema::Unimorph : Schema::Ud;

  Document train_doc = load_conllu(opt.train_path);
  Document test_doc = load_conllu(opt.test_path);

  RunProvenance prov;
  if (schema == Schema::Unimorph) {
    MappingTable mapping = MappingTable::load(opt.mapping_path, registry);
    std::string lang = resolve_language(opt);
    RuleSet rules = load_rules(opt, lang, registry);
    ConvertOptions options{lang, false, opt.jobs};
    convert_document(train_doc, options, mapping, rules, registry);
    convert_document(test_doc, options, mapping, rules, registry);
    prov.mapping_hash = mapping.content_hash();
    prov.rules_hash = rules.content_hash();
  }

  TaggerModel model = train_tagger(train_doc, opt.suffix_k, schema, registry);
  Document predicted = tag_document(test_doc, model);
  F1Report report = evaluate_f1(test_doc, predicted, schema, registry);

  ReportFormat format = opt.report_format == "tsv" ? ReportFormat::Tsv : ReportFormat::Text;
  emit(render_f1_report(report, opt.schema, prov, format), opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UD-to-UniMorph treebank converter and evaluator"};
  app.require_subcommand(1);
  CommonOptions opt;

  CLI::App* convert = app.add_subcommand("convert", "rewrite FEATS with UniMorph MSDs");
  convert->add_option("--lang", opt.language, "language code or UD treebank name")->required();
  convert->add_option("--input", opt.input, "input CoNLL-U file")->required();
  convert->add_option("--output", opt.output, "output CoNLL-U file (stdout when omitted)");
  convert->add_flag("--strip-pos", opt.strip_pos, "drop the POS atom from FEATS");
  convert->add_flag("--csv-only", opt.csv_only, "lookup only, no post-edit rules");
  convert->add_option("--jobs", opt.jobs, "worker threads (sentences are independent)");
  add_data_flags(convert, opt);

  CLI::App* evaluate = app.add_subcommand("evaluate", "token-level recall against a table");
  evaluate->add_option("--lang", opt.language, "language code or UD treebank name")->required();
  evaluate->add_option("--input", opt.input, "UD CoNLL-U file")->required();
  evaluate->add_option("--unimorph", opt.unimorph_path, "UniMorph TSV table")->required();
  evaluate->add_option("--output", opt.output, "report file (stdout when omitted)");
  evaluate->add_flag("--csv-only", opt.csv_only, "lookup only, no post-edit rules");
  evaluate->add_option("--jobs", opt.jobs, "worker threads");
  evaluate->add_option("--report-format", opt.report_format, "text | tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  add_data_flags(evaluate, opt);

  CLI::App* audit = app.add_subcommand("audit", "discrepancy records for table misses");
  audit->add_option("--lang", opt.language, "language code or UD treebank name")->required();
  audit->add_option("--input", opt.input, "UD CoNLL-U file")->required();
  audit->add_option("--unimorph", opt.unimorph_path, "UniMorph TSV table")->required();
  audit->add_option("--output", opt.output, "audit file (stdout when omitted)");
  audit->add_flag("--csv-only", opt.csv_only, "lookup only, no post-edit rules");
  audit->add_option("--jobs", opt.jobs, "worker threads");
  audit->add_option("--report-format", opt.report_format, "text | tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  add_data_flags(audit, opt);

  CLI::App* tag = app.add_subcommand("tag", "lexicon + suffix-backoff tagging protocol");
  tag->add_option("--train", opt.train_path, "training split (CoNLL-U)")->required();
  tag->add_option("--test", opt.test_path, "test split (CoNLL-U)")->required();
  tag->add_option("--schema", opt.schema, "ud | unimorph")
      ->check(CLI::IsMember({"ud", "unimorph"}));
  tag->add_option("--suffix-k", opt.suffix_k, "maximum suffix length");
  tag->add_option("--lang", opt.language, "language (for unimorph-schema conversion)");
  tag->add_option("--output", opt.output, "report file (stdout when omitted)");
  tag->add_flag("--csv-only", opt.csv_only, "convert without rules (unimorph schema)");
  tag->add_option("--jobs", opt.jobs, "worker threads");
  tag->add_option("--report-format", opt.report_format, "text | tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  add_data_flags(tag, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) return run_convert(opt);
    if (evaluate->parsed()) return run_evaluate(opt, false);
    if (audit->parsed()) return run_evaluate(opt, true);
    if (tag->parsed()) return run_tag(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
