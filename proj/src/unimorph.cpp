#include "umconv/unimorph.hpp"

#include <algorithm>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

std::string pos_family(const std::string& pos_atom) {
  std::size_t dot = pos_atom.find('.');
  return dot == std::string::npos ? pos_atom : pos_atom.substr(0, dot);
}

ParadigmTable ParadigmTable::load(const std::string& path, const std::string& language,
                                  const DimensionRegistry& registry) {
  return from_text(read_file(path), language, registry);
}

ParadigmTable ParadigmTable::from_text(std::string_view text, const std::string& language,
                                       const DimensionRegistry& registry) {
  static const std::set<std::string> kAnnotated = {"N", "V", "ADJ"};

  ParadigmTable table;
  table.language_ = language;
  table.hash_ = fnv1a_hex(text);

  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    if (raw.empty() || trim(raw).empty()) continue;
    std::vector<std::string> fields = split(raw, '\t');
    if (fields.size() != 3)
      throw Error(ErrorKind::MalformedRow,
                  "expected lemma<TAB>form<TAB>tag, got " + std::to_string(fields.size()) +
                      " fields",
                  line_no);

    std::string lemma = nfc(std::string(trim(fields[0])));
    std::string form = nfc(std::string(trim(fields[1])));
    std::string tag(trim(fields[2]));
    if (tag.empty()) {
      table.issues_.push_back({line_no, "empty tag; row skipped"});
      continue;
    }

    UmParseResult parsed = parse_um_tag(tag, registry);
    for (const std::string& atom : parsed.unknown_atoms) table.unknown_atoms_.insert(atom);
    if (parsed.nonconforming_separator)
      table.issues_.push_back({line_no, "nonconforming ':' separator"});

    auto pos = parsed.msd.pos(registry);
    if (!pos) {
      table.issues_.push_back({line_no, "tag '" + tag + "' has no POS value; row skipped"});
      continue;
    }
    std::string family = pos_family(*pos);
    if (!kAnnotated.count(family)) {
      table.issues_.push_back(
          {line_no, "POS '" + *pos + "' outside the N/V/ADJ families; row skipped"});
      continue;
    }

    auto& msds = table.entries_[{lemma, form}];
    bool duplicate = std::any_of(msds.begin(), msds.end(),
                                 [&](const UmMsd& m) { return msd_equal(m, parsed.msd); });
    if (duplicate) continue;
    msds.push_back(parsed.msd);
    table.families_.insert(family);
    table.folded_keys_.insert({fold_lemma_case(lemma), form});
    ++table.size_;
  }
  return table;
}

const std::vector<UmMsd>& ParadigmTable::lookup(const std::string& lemma,
                                                const std::string& form) const {
  static const std::vector<UmMsd> kEmpty;
  auto it = entries_.find({nfc(lemma), nfc(form)});
  return it == entries_.end() ? kEmpty : it->second;
}

bool ParadigmTable::case_only_miss(const std::string& lemma, const std::string& form) const {
  std::string l = nfc(lemma);
  std::string f = nfc(form);
  if (entries_.count({l, f})) return false;
  return folded_keys_.count({fold_lemma_case(l), f}) > 0;
}

}  // namespace umconv
