#ifndef UMCONV_RULES_HPP
#define UMCONV_RULES_HPP

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "umconv/conllu.hpp"
#include "umconv/mapping.hpp"
#include "umconv/schema.hpp"

namespace umconv {

/// Everything a rule may consult besides the evolving MSD. Read-only for
/// rule matching; `consumed` only records which dropped pairs a template
/// collection fused, so they stop counting as lost in the audit.
struct RuleContext {
  std::string language;
  std::string upos;
  std::string form;
  std::string lemma;
  std::vector<UdPair> ud_pairs;  // the token's original FEATS
  std::vector<UdPair> dropped;   // pairs the base lookup did not consume
  mutable std::vector<UdPair> consumed;
};

enum class Stage { Templatize, Delete, Add, Fix };
const char* stage_name(Stage stage);

enum class CondKind { PosIs, HasValue, LacksDimension, UdPair, FormSuffix, FormPattern, LemmaIs };

struct Condition {
  CondKind kind;
  std::string a;  // atom / dimension / attr / suffix / pattern / lemma
  std::string b;  // UD value for UdPair
  std::optional<std::regex> pattern;
};

enum class ActionKind { AddValue, RemoveValue, RemoveDimension, ReplaceValue, CollectTemplate };

struct Action {
  ActionKind kind;
  std::string a;  // atom / dimension / old atom
  std::string b;  // new atom for ReplaceValue
};

struct Rule {
  std::string language;  // code or "*"
  Stage stage = Stage::Fix;
  std::vector<Condition> conditions;
  std::vector<Action> actions;
  std::size_t line = 0;

  bool applies_to(const std::string& language_code) const;
};

/// Ordered, language-conditioned post-edit rules. Stages run in the fixed
/// order TEMPLATIZE -> DELETE -> ADD -> FIX; within a stage, file order.
class RuleSet {
 public:
  RuleSet() = default;

  static RuleSet parse(std::string_view text, const DimensionRegistry& registry);
  static RuleSet load(const std::string& path, const DimensionRegistry& registry);

  const std::vector<Rule>& stage_rules(Stage stage) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::string& content_hash() const { return hash_; }

 private:
  std::vector<Rule> stages_[4];
  std::string hash_;
};

/// Conversion-time findings that are recorded, not thrown.
struct AuditFinding {
  std::string kind;  // e.g. "IncompleteTemplate"
  std::string detail;
};

using AuditLog = std::vector<AuditFinding>;

/// Fuses layered UD pairs into composite templatic values: possessor
/// person/number (PSS1S, ...) into `Possession`, ergative/absolutive/dative
/// argument agreement (ARGER3S, ...) into `ArgumentMarking`. Missing slots
/// raise an IncompleteTemplate audit finding and the composite is omitted.
UmMsd collect_template(const std::string& dimension, const RuleContext& ctx, UmMsd proposal,
                       const DimensionRegistry& registry, AuditLog* audit);

/// Runs every matching rule's actions in order over the proposal. An
/// add/replace that would put two values into a single-valued dimension
/// throws DimensionConflict: that is a defect in the rule file, not data.
UmMsd apply_rules(UmMsd proposal, const RuleContext& ctx, const RuleSet& rules,
                  const DimensionRegistry& registry, AuditLog* audit = nullptr);

/// Like apply_rules, restricted to one stage. Exposed for the monotonicity
/// checks: DELETE never grows the value set, ADD never shrinks it.
UmMsd apply_stage(Stage stage, UmMsd proposal, const RuleContext& ctx, const RuleSet& rules,
                  const DimensionRegistry& registry, AuditLog* audit = nullptr);

struct ConvertOutcome {
  enum class Kind { Converted, SkippedPos, SkippedRange } kind = Kind::Converted;
  UmMsd msd;
  std::vector<UdPair> dropped;  // UD pairs no lookup, rule, or template consumed

  bool converted() const { return kind == Kind::Converted; }
};

/// base_convert + apply_rules for one token. Multiword ranges and tokens
/// whose UPOS has no UniMorph counterpart come back as Skipped.
ConvertOutcome convert_token(const Token& token, const std::string& language,
                             const MappingTable& table, const RuleSet& rules,
                             const DimensionRegistry& registry, AuditLog* audit = nullptr);

/// Static checks on a loaded rule file. Returns human-readable findings:
///  - an add-action rule whose only evidence is the language and POS
///  - same-stage rule pairs whose actions push the same atom in
///    opposite directions
std::vector<std::string> lint_rules(const RuleSet& rules);

}  // namespace umconv

#endif
