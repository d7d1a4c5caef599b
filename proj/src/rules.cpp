#include "umconv/rules.hpp"

#include <algorithm>
#include <map>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

namespace {

constexpr std::size_t stage_index(Stage stage) { return static_cast<std::size_t>(stage); }

std::optional<Stage> stage_from_name(std::string_view name) {
  if (name == "TEMPLATIZE") return Stage::Templatize;
  if (name == "DELETE") return Stage::Delete;
  if (name == "ADD") return Stage::Add;
  if (name == "FIX") return Stage::Fix;
  return std::nullopt;
}

Condition parse_condition(std::string_view text, const DimensionRegistry& registry,
                          std::size_t line) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorKind::SyntaxError, "condition lacks '=': '" + std::string(text) + "'", line);
  std::string key(text.substr(0, eq));
  std::string value(text.substr(eq + 1));
  if (value.empty())
    throw Error(ErrorKind::SyntaxError, "empty condition value in '" + std::string(text) + "'",
                line);

  Condition cond;
  if (key == "pos") {
    cond.kind = CondKind::PosIs;
    cond.a = to_upper(value);
    if (!registry.known(cond.a))
      throw Error(ErrorKind::UnknownAtom, "'" + cond.a + "'", line);
  } else if (key == "has") {
    cond.kind = CondKind::HasValue;
    cond.a = to_upper(value);
    if (!registry.known(cond.a))
      throw Error(ErrorKind::UnknownAtom, "'" + cond.a + "'", line);
  } else if (key == "lacksdim") {
    cond.kind = CondKind::LacksDimension;
    cond.a = value;
    if (!registry.is_dimension(cond.a))
      throw Error(ErrorKind::UnknownKeyword, "unknown dimension '" + cond.a + "'", line);
  } else if (key == "ud") {
    std::size_t inner = value.find('=');
    if (inner == std::string::npos || inner == 0 || inner + 1 == value.size())
      throw Error(ErrorKind::SyntaxError, "ud condition must be ud=Attr=Val", line);
    cond.kind = CondKind::UdPair;
    cond.a = value.substr(0, inner);
    cond.b = value.substr(inner + 1);
  } else if (key == "suffix") {
    cond.kind = CondKind::FormSuffix;
    cond.a = value;
  } else if (key == "regex") {
    cond.kind = CondKind::FormPattern;
    cond.a = value;
    try {
      cond.pattern.emplace(value, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw Error(ErrorKind::SyntaxError, "bad pattern '" + value + "': " + e.what(), line);
    }
  } else if (key == "lemma") {
    cond.kind = CondKind::LemmaIs;
    cond.a = value;
  } else {
    throw Error(ErrorKind::UnknownKeyword, "unknown condition '" + key + "'", line);
  }
  return cond;
}

Action parse_action(std::string_view text, const DimensionRegistry& registry, std::size_t line) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorKind::SyntaxError, "action lacks '=': '" + std::string(text) + "'", line);
  std::string key(text.substr(0, eq));
  std::string value(text.substr(eq + 1));
  if (value.empty())
    throw Error(ErrorKind::SyntaxError, "empty action value in '" + std::string(text) + "'", line);

  Action action;
  if (key == "add" || key == "del") {
    action.kind = key == "add" ? ActionKind::AddValue : ActionKind::RemoveValue;
    action.a = to_upper(value);
    if (!registry.known(action.a))
      throw Error(ErrorKind::UnknownAtom, "'" + action.a + "'", line);
  } else if (key == "deldim") {
    action.kind = ActionKind::RemoveDimension;
    action.a = value;
    if (!registry.is_dimension(action.a))
      throw Error(ErrorKind::UnknownKeyword, "unknown dimension '" + action.a + "'", line);
  } else if (key == "sub") {
    std::size_t gt = value.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 == value.size())
      throw Error(ErrorKind::SyntaxError, "sub action must be sub=OLD>NEW", line);
    action.kind = ActionKind::ReplaceValue;
    action.a = to_upper(value.substr(0, gt));
    action.b = to_upper(value.substr(gt + 1));
    if (!registry.known(action.a)) throw Error(ErrorKind::UnknownAtom, "'" + action.a + "'", line);
    if (!registry.known(action.b)) throw Error(ErrorKind::UnknownAtom, "'" + action.b + "'", line);
    if (action.a == action.b)
      throw Error(ErrorKind::SyntaxError, "sub replaces an atom with itself", line);
  } else if (key == "template") {
    action.kind = ActionKind::CollectTemplate;
    action.a = value;
    if (!registry.is_dimension(action.a))
      throw Error(ErrorKind::UnknownKeyword, "unknown dimension '" + action.a + "'", line);
  } else {
    throw Error(ErrorKind::UnknownKeyword, "unknown action '" + key + "'", line);
  }
  return action;
}

void check_stage_shape(const Rule& rule, std::size_t line) {
  for (const Action& a : rule.actions) {
    bool adds = a.kind == ActionKind::AddValue || a.kind == ActionKind::ReplaceValue ||
                a.kind == ActionKind::CollectTemplate;
    bool removes = a.kind == ActionKind::RemoveValue || a.kind == ActionKind::RemoveDimension ||
                   a.kind == ActionKind::ReplaceValue;
    if (rule.stage == Stage::Delete && adds)
      throw Error(ErrorKind::SyntaxError, "DELETE-stage rule may not add values", line);
    if (rule.stage == Stage::Add && removes)
      throw Error(ErrorKind::SyntaxError, "ADD-stage rule may not remove values", line);
    if (a.kind == ActionKind::CollectTemplate && rule.stage != Stage::Templatize)
      throw Error(ErrorKind::SyntaxError, "template action only valid in TEMPLATIZE stage", line);
  }
  // a rule never both removes and adds the same atom
  for (const Action& a : rule.actions)
    if (a.kind == ActionKind::AddValue)
      for (const Action& b : rule.actions)
        if ((b.kind == ActionKind::RemoveValue && b.a == a.a) ||
            (b.kind == ActionKind::ReplaceValue && b.a == a.a))
          throw Error(ErrorKind::SyntaxError, "rule both adds and removes '" + a.a + "'", line);
}

}  // namespace

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::Templatize: return "TEMPLATIZE";
    case Stage::Delete: return "DELETE";
    case Stage::Add: return "ADD";
    case Stage::Fix: return "FIX";
  }
  return "?";
}

bool Rule::applies_to(const std::string& language_code) const {
  return language == "*" || language == language_code;
}

RuleSet RuleSet::parse(std::string_view text, const DimensionRegistry& registry) {
  RuleSet set;
  set.hash_ = fnv1a_hex(text);
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    for (const std::string& f : split(std::string(line), ' '))
      if (!trim(f).empty()) fields.emplace_back(trim(f));
    if (fields.size() != 6 || fields[2] != "IF" || fields[4] != "THEN")
      throw Error(ErrorKind::SyntaxError,
                  "expected '<lang> <STAGE> IF <conds> THEN <actions>'", line_no);

    Rule rule;
    rule.line = line_no;
    rule.language = fields[0];
    auto stage = stage_from_name(fields[1]);
    if (!stage)
      throw Error(ErrorKind::UnknownKeyword, "unknown stage '" + fields[1] + "'", line_no);
    rule.stage = *stage;

    for (const std::string& c : split(fields[3], ','))
      rule.conditions.push_back(parse_condition(c, registry, line_no));
    for (const std::string& a : split(fields[5], ','))
      rule.actions.push_back(parse_action(a, registry, line_no));
    if (rule.conditions.empty())
      throw Error(ErrorKind::SyntaxError, "rule needs at least one condition", line_no);
    if (rule.actions.empty())
      throw Error(ErrorKind::SyntaxError, "rule needs at least one action", line_no);
    check_stage_shape(rule, line_no);

    set.stages_[stage_index(rule.stage)].push_back(std::move(rule));
  }
  return set;
}

RuleSet RuleSet::load(const std::string& path, const DimensionRegistry& registry) {
  return parse(read_file(path), registry);
}

const std::vector<Rule>& RuleSet::stage_rules(Stage stage) const {
  return stages_[stage_index(stage)];
}

std::size_t RuleSet::size() const {
  return stages_[0].size() + stages_[1].size() + stages_[2].size() + stages_[3].size();
}

namespace {

bool condition_holds(const Condition& cond, const UmMsd& msd, const RuleContext& ctx,
                     const DimensionRegistry& registry) {
  switch (cond.kind) {
    case CondKind::PosIs: {
      auto pos = msd.pos(registry);
      return pos && *pos == cond.a;
    }
    case CondKind::HasValue:
      return msd.has_atom(cond.a);
    case CondKind::LacksDimension:
      return !msd.has_dimension(cond.a);
    case CondKind::UdPair:
      for (const UdPair& p : ctx.ud_pairs)
        if (p.attr == cond.a && p.value == cond.b) return true;
      return false;
    case CondKind::FormSuffix:
      return ends_with(ctx.form, cond.a);
    case CondKind::FormPattern:
      return std::regex_search(ctx.form, *cond.pattern);
    case CondKind::LemmaIs:
      return ctx.lemma == cond.a;
  }
  return false;
}

struct TemplateSlots {
  std::string person;  // digit
  std::string number;  // S / P / D
  std::string gender;  // M / F (optional)
  bool person_seen = false;
  bool number_seen = false;
  bool usable() const { return person_seen && number_seen; }
};

std::optional<std::string> number_code(const std::string& ud_value) {
  if (ud_value == "Sing") return "S";
  if (ud_value == "Plur") return "P";
  if (ud_value == "Dual") return "D";
  return std::nullopt;
}

std::optional<std::string> gender_code(const std::string& ud_value) {
  if (ud_value == "Masc") return "M";
  if (ud_value == "Fem") return "F";
  return std::nullopt;
}

// Layer name -> composite head for argument agreement.
const std::map<std::string, std::string> kArgumentHeads = {
    {"erg", "ARGER"}, {"abs", "ARGAB"}, {"dat", "ARGDA"},
    {"nom", "ARGNO"}, {"acc", "ARGAC"},
};

std::optional<std::string> layer_of(const std::string& attr, std::string* base) {
  std::size_t open = attr.find('[');
  if (open == std::string::npos || attr.back() != ']') return std::nullopt;
  *base = attr.substr(0, open);
  return attr.substr(open + 1, attr.size() - open - 2);
}

void fill_slot(TemplateSlots& slots, const std::string& base, const std::string& value) {
  if (base == "Person") {
    slots.person_seen = true;
    if (value.size() == 1 && value[0] >= '0' && value[0] <= '9') slots.person = value;
  } else if (base == "Number") {
    slots.number_seen = true;
    if (auto code = number_code(value)) slots.number = *code;
  } else if (base == "Gender") {
    if (auto code = gender_code(value)) slots.gender = *code;
  }
}

}  // namespace

UmMsd collect_template(const std::string& dimension, const RuleContext& ctx, UmMsd proposal,
                       const DimensionRegistry& registry, AuditLog* audit) {
  std::map<std::string, TemplateSlots> per_layer;
  for (const UdPair& pair : ctx.ud_pairs) {
    std::string base;
    auto layer = layer_of(pair.attr, &base);
    if (!layer) continue;
    bool possessive = dimension == "Possession" && *layer == "psor";
    bool argument = dimension == "ArgumentMarking" && kArgumentHeads.count(*layer) > 0;
    if (!possessive && !argument) continue;
    fill_slot(per_layer[*layer], base, pair.value);
  }

  for (const auto& [layer, slots] : per_layer) {
    if (!slots.usable() || slots.person.empty() || slots.number.empty()) {
      if (audit)
        audit->push_back({"IncompleteTemplate",
                          "layer [" + layer + "] of '" + ctx.form + "' lacks a person or number"});
      continue;
    }
    std::string head = layer == "psor" ? "PSS" : kArgumentHeads.at(layer);
    std::string atom = head + slots.person + slots.number + slots.gender;
    proposal.add_forced(make_um_value(atom, registry));
    for (const UdPair& pair : ctx.ud_pairs) {
      std::string base;
      auto l = layer_of(pair.attr, &base);
      if (l && *l == layer) ctx.consumed.push_back(pair);
    }
  }
  return proposal;
}

namespace {

void apply_action(const Action& action, UmMsd& msd, const RuleContext& ctx,
                  const DimensionRegistry& registry, AuditLog* audit, std::size_t line) {
  switch (action.kind) {
    case ActionKind::AddValue: {
      if (!msd.add(make_um_value(action.a, registry), registry))
        throw Error(ErrorKind::DimensionConflict,
                    "adding '" + action.a + "' to an occupied " +
                        registry.dimension_of(action.a) + " dimension",
                    line);
      break;
    }
    case ActionKind::RemoveValue:
      msd.remove_atom(action.a);
      break;
    case ActionKind::RemoveDimension:
      msd.remove_dimension(action.a);
      break;
    case ActionKind::ReplaceValue: {
      if (!msd.has_atom(action.a)) break;
      msd.remove_atom(action.a);
      if (!msd.add(make_um_value(action.b, registry), registry))
        throw Error(ErrorKind::DimensionConflict,
                    "substituting '" + action.a + "' with '" + action.b +
                        "' collides inside " + registry.dimension_of(action.b),
                    line);
      break;
    }
    case ActionKind::CollectTemplate:
      msd = collect_template(action.a, ctx, std::move(msd), registry, audit);
      break;
  }
}

}  // namespace

UmMsd apply_stage(Stage stage, UmMsd proposal, const RuleContext& ctx, const RuleSet& rules,
                  const DimensionRegistry& registry, AuditLog* audit) {
  for (const Rule& rule : rules.stage_rules(stage)) {
    if (!rule.applies_to(ctx.language)) continue;
    bool all = true;
    for (const Condition& cond : rule.conditions)
      if (!condition_holds(cond, proposal, ctx, registry)) {
        all = false;
        break;
      }
    if (!all) continue;
    for (const Action& action : rule.actions)
      apply_action(action, proposal, ctx, registry, audit, rule.line);
  }
  return proposal;
}

UmMsd apply_rules(UmMsd proposal, const RuleContext& ctx, const RuleSet& rules,
                  const DimensionRegistry& registry, AuditLog* audit) {
  for (Stage stage : {Stage::Templatize, Stage::Delete, Stage::Add, Stage::Fix})
    proposal = apply_stage(stage, std::move(proposal), ctx, rules, registry, audit);
  return proposal;
}

ConvertOutcome convert_token(const Token& token, const std::string& language,
                             const MappingTable& table, const RuleSet& rules,
                             const DimensionRegistry& registry, AuditLog* audit) {
  ConvertOutcome outcome;
  if (token.is_range()) {
    outcome.kind = ConvertOutcome::Kind::SkippedRange;
    return outcome;
  }
  auto pos = table.pos_target(token.upos());
  if (!pos || pos->excluded) {
    outcome.kind = ConvertOutcome::Kind::SkippedPos;
    return outcome;
  }

  BaseConversion base = base_convert(token.upos(), token.feats, table, registry);
  RuleContext ctx;
  ctx.language = language;
  ctx.upos = token.upos();
  ctx.form = token.form();
  ctx.lemma = token.lemma();
  ctx.ud_pairs = token.feats;
  ctx.dropped = std::move(base.dropped);
  outcome.msd = apply_rules(std::move(base.proposal), ctx, rules, registry, audit);
  for (const UdPair& pair : ctx.dropped) {
    bool used = std::find(ctx.consumed.begin(), ctx.consumed.end(), pair) != ctx.consumed.end();
    if (!used) outcome.dropped.push_back(pair);
  }
  return outcome;
}

std::vector<std::string> lint_rules(const RuleSet& rules) {
  std::vector<std::string> findings;

  auto evidence_free = [](const Rule& rule) {
    for (const Condition& c : rule.conditions)
      if (c.kind != CondKind::PosIs && c.kind != CondKind::LacksDimension) return false;
    return true;
  };

  std::vector<const Rule*> all;
  for (Stage stage : {Stage::Templatize, Stage::Delete, Stage::Add, Stage::Fix})
    for (const Rule& r : rules.stage_rules(stage)) all.push_back(&r);

  for (const Rule* rule : all)
    for (const Action& a : rule->actions)
      if (a.kind == ActionKind::AddValue && evidence_free(*rule))
        findings.push_back("line " + std::to_string(rule->line) + ": adds '" + a.a +
                           "' on language and POS alone");

  // same-stage pairs pulling one atom in opposite directions
  for (const Rule* x : all)
    for (const Rule* y : all) {
      if (x == y || x->stage != y->stage) continue;
      if (!(x->language == y->language || x->language == "*" || y->language == "*")) continue;
      for (const Action& ax : x->actions) {
        std::string added;
        if (ax.kind == ActionKind::AddValue) added = ax.a;
        if (ax.kind == ActionKind::ReplaceValue) added = ax.b;
        if (added.empty()) continue;
        for (const Action& ay : y->actions) {
          bool removes = (ay.kind == ActionKind::RemoveValue && ay.a == added) ||
                         (ay.kind == ActionKind::ReplaceValue && ay.a == added);
          if (removes)
            findings.push_back("lines " + std::to_string(x->line) + " and " +
                               std::to_string(y->line) + ": conflicting actions on '" + added +
                               "' in stage " + stage_name(x->stage));
        }
      }
    }
  return findings;
}

}  // namespace umconv
