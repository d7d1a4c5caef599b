#include "umconv/mapping.hpp"

#include <algorithm>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

MappingTable MappingTable::load(const std::string& path, const DimensionRegistry& registry) {
  return from_text(read_file(path), registry);
}

MappingTable MappingTable::from_text(std::string_view text, const DimensionRegistry& registry) {
  MappingTable table;
  table.hash_ = fnv1a_hex(text);
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error(ErrorKind::MalformedRow, "expected SOURCE<TAB>TARGET", line_no);
    std::string source(trim(line.substr(0, tab)));
    std::string target(trim(line.substr(tab + 1)));
    if (source.empty() || target.empty())
      throw Error(ErrorKind::MalformedRow, "empty source or target", line_no);

    if (starts_with(source, "UPOS:")) {
      std::string tag = source.substr(5);
      PosTarget pos;
      if (target == "EXCLUDE") {
        pos.excluded = true;
      } else {
        pos.atom = to_upper(target);
        if (!registry.known(pos.atom))
          throw Error(ErrorKind::UnknownTargetAtom, "'" + pos.atom + "' for " + source, line_no);
        if (registry.dimension_of(pos.atom) != registry.pos_dimension())
          throw Error(ErrorKind::UnknownTargetAtom,
                      "UPOS entry must target the POS dimension: " + source, line_no);
      }
      auto [it, inserted] = table.pos_entries_.emplace(tag, pos);
      (void)it;
      if (!inserted) throw Error(ErrorKind::DuplicateKey, "duplicate entry for " + source, line_no);
      continue;
    }

    std::size_t eq = source.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == source.size())
      throw Error(ErrorKind::MalformedRow, "source must be UD_ATTR=UD_VAL or UPOS:<TAG>", line_no);
    std::pair<std::string, std::string> key{source.substr(0, eq), source.substr(eq + 1)};

    std::vector<std::string> atoms;
    for (const std::string& piece : split(target, ';')) {
      std::string atom = to_upper(trim(piece));
      if (atom.empty()) continue;
      if (!registry.known(atom))
        throw Error(ErrorKind::UnknownTargetAtom, "'" + atom + "' for " + source, line_no);
      if (registry.dimension_of(atom) == registry.pos_dimension())
        throw Error(ErrorKind::UnknownTargetAtom,
                    "feature entry may not target the POS dimension: " + source, line_no);
      atoms.push_back(atom);
    }
    if (atoms.empty()) throw Error(ErrorKind::MalformedRow, "no target atoms for " + source, line_no);

    auto [it, inserted] = table.entries_.emplace(key, std::move(atoms));
    (void)it;
    if (!inserted) throw Error(ErrorKind::DuplicateKey, "duplicate entry for " + source, line_no);
  }
  return table;
}

std::optional<MappingTable::PosTarget> MappingTable::pos_target(const std::string& upos) const {
  auto it = pos_entries_.find(upos);
  if (it == pos_entries_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& MappingTable::feature_targets(const UdPair& pair) const {
  static const std::vector<std::string> kEmpty;
  auto it = entries_.find({pair.attr, pair.value});
  return it == entries_.end() ? kEmpty : it->second;
}

BaseConversion base_convert(const std::string& upos, const std::vector<UdPair>& feats,
                            const MappingTable& table, const DimensionRegistry& registry) {
  auto pos = table.pos_target(upos);
  if (!pos || pos->excluded)
    throw Error(ErrorKind::ExcludedPos, "UPOS '" + upos + "' has no UniMorph counterpart");

  BaseConversion result;
  result.proposal.add(make_um_value(pos->atom, registry), registry);

  for (const UdPair& pair : feats) {
    if (pair.attr.find('[') != std::string::npos) {
      result.dropped.push_back(pair);  // layered features belong to the templatize stage
      continue;
    }
    const auto& targets = table.feature_targets(pair);
    if (targets.empty()) {
      result.dropped.push_back(pair);
      continue;
    }
    // All-or-nothing per pair: if any target collides with an occupied
    // single-valued dimension, the pair is dropped for the audit instead.
    UmMsd trial = result.proposal;
    bool ok = true;
    for (const std::string& atom : targets)
      if (!trial.add(make_um_value(atom, registry), registry)) {
        ok = false;
        break;
      }
    if (ok)
      result.proposal = std::move(trial);
    else
      result.dropped.push_back(pair);
  }
  std::sort(result.dropped.begin(), result.dropped.end());
  return result;
}

}  // namespace umconv
