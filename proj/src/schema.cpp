#include "umconv/schema.hpp"

#include <algorithm>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

namespace {

bool ci_less(std::string_view a, std::string_view b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    char x = a[i] >= 'A' && a[i] <= 'Z' ? static_cast<char>(a[i] - 'A' + 'a') : a[i];
    char y = b[i] >= 'A' && b[i] <= 'Z' ? static_cast<char>(b[i] - 'A' + 'a') : b[i];
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

void sort_pairs(std::vector<UdPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const UdPair& a, const UdPair& b) {
    if (a.attr != b.attr) return ci_less(a.attr, b.attr);
    return a.value < b.value;
  });
}

}  // namespace

bool UdMsd::has(std::string_view attr, std::string_view value) const {
  for (const auto& p : pairs)
    if (p.attr == attr && p.value == value) return true;
  return false;
}

std::optional<std::string> UdMsd::value_of(std::string_view attr) const {
  for (const auto& p : pairs)
    if (p.attr == attr) return p.value;
  return std::nullopt;
}

std::vector<UdPair> parse_ud_feats(std::string_view feats_field, std::size_t line) {
  std::vector<UdPair> pairs;
  if (feats_field == "_" || feats_field.empty()) return pairs;
  for (const std::string& item : split(feats_field, '|')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw Error(ErrorKind::MalformedFeats, "bad attribute=value pair '" + item + "'", line);
    pairs.push_back({item.substr(0, eq), item.substr(eq + 1)});
  }
  sort_pairs(pairs);
  return pairs;
}

std::string render_ud_feats(const std::vector<UdPair>& pairs) {
  if (pairs.empty()) return "_";
  std::vector<UdPair> sorted = pairs;
  sort_pairs(sorted);
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += '|';
    out += sorted[i].attr;
    out += '=';
    out += sorted[i].value;
  }
  return out;
}

DimensionRegistry DimensionRegistry::load(const std::string& path) {
  return from_text(read_file(path));
}

DimensionRegistry DimensionRegistry::from_text(std::string_view text) {
  DimensionRegistry reg;
  int next_rank = 0;
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error(ErrorKind::MalformedRow, "expected DIMENSION<TAB>ATOM", line_no);
    std::string dim(trim(line.substr(0, tab)));
    std::string atom = to_upper(trim(line.substr(tab + 1)));
    if (dim.empty() || atom.empty())
      throw Error(ErrorKind::MalformedRow, "empty dimension or atom", line_no);
    if (!reg.precedence_.count(dim)) {
      reg.precedence_[dim] = next_rank++;
      reg.multi_[dim] = false;
    }
    if (ends_with(atom, "*")) {
      std::string prefix = atom.substr(0, atom.size() - 1);
      reg.prefixes_.emplace_back(prefix, dim);
      reg.multi_[dim] = true;  // prefix families are the open-ended dimensions
      continue;
    }
    auto [it, inserted] = reg.atoms_.emplace(atom, dim);
    if (!inserted && it->second != dim)
      throw Error(ErrorKind::DuplicateKey,
                  "atom '" + atom + "' registered in both " + it->second + " and " + dim, line_no);
  }
  if (!reg.precedence_.count(reg.pos_dimension_) || reg.precedence_[reg.pos_dimension_] != 0)
    throw Error(ErrorKind::MalformedRow, "registry must list the POS dimension first");
  // longest prefix wins when families nest
  std::sort(reg.prefixes_.begin(), reg.prefixes_.end(),
            [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  return reg;
}

const std::string& DimensionRegistry::dimension_of(std::string_view atom) const {
  std::string key = to_upper(atom);
  auto it = atoms_.find(key);
  if (it != atoms_.end()) return it->second;
  for (const auto& [prefix, dim] : prefixes_)
    if (starts_with(key, prefix) && key.size() > prefix.size()) return dim;
  return unknown_;
}

bool DimensionRegistry::known(std::string_view atom) const {
  return dimension_of(atom) != unknown_;
}

int DimensionRegistry::precedence(const std::string& dimension) const {
  auto it = precedence_.find(dimension);
  if (it == precedence_.end()) return static_cast<int>(precedence_.size()) + 1;
  return it->second;
}

bool DimensionRegistry::is_dimension(std::string_view name) const {
  return precedence_.count(std::string(name)) > 0;
}

bool DimensionRegistry::multi_valued(const std::string& dimension) const {
  auto it = multi_.find(dimension);
  return it != multi_.end() && it->second;
}

UmValue make_um_value(std::string_view atom, const DimensionRegistry& registry) {
  std::string upper = to_upper(trim(atom));
  return UmValue{upper, registry.dimension_of(upper)};
}

bool UmMsd::add(const UmValue& value, const DimensionRegistry& registry) {
  if (has_atom(value.atom)) return true;
  if (!registry.multi_valued(value.dimension)) {
    for (const auto& v : values_)
      if (v.dimension == value.dimension) return false;
  }
  values_.push_back(value);
  return true;
}

void UmMsd::add_forced(const UmValue& value) {
  if (!has_atom(value.atom)) values_.push_back(value);
}

bool UmMsd::remove_atom(std::string_view atom) {
  std::string upper = to_upper(atom);
  auto it = std::find_if(values_.begin(), values_.end(),
                         [&](const UmValue& v) { return v.atom == upper; });
  if (it == values_.end()) return false;
  values_.erase(it);
  return true;
}

std::size_t UmMsd::remove_dimension(std::string_view dimension) {
  std::size_t before = values_.size();
  values_.erase(std::remove_if(values_.begin(), values_.end(),
                               [&](const UmValue& v) { return v.dimension == dimension; }),
                values_.end());
  return before - values_.size();
}

bool UmMsd::has_atom(std::string_view atom) const {
  std::string upper = to_upper(atom);
  for (const auto& v : values_)
    if (v.atom == upper) return true;
  return false;
}

bool UmMsd::has_dimension(std::string_view dimension) const {
  for (const auto& v : values_)
    if (v.dimension == dimension) return true;
  return false;
}

std::vector<std::string> UmMsd::atoms_in(std::string_view dimension) const {
  std::vector<std::string> out;
  for (const auto& v : values_)
    if (v.dimension == dimension) out.push_back(v.atom);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> UmMsd::pos(const DimensionRegistry& registry) const {
  for (const auto& v : values_)
    if (v.dimension == registry.pos_dimension()) return v.atom;
  return std::nullopt;
}

std::string canonical_um(const UmMsd& msd, const DimensionRegistry& registry) {
  std::vector<UmValue> sorted = msd.values();
  std::sort(sorted.begin(), sorted.end(), [&](const UmValue& a, const UmValue& b) {
    int pa = registry.precedence(a.dimension);
    int pb = registry.precedence(b.dimension);
    if (pa != pb) return pa < pb;
    return a.atom < b.atom;
  });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ';';
    out += sorted[i].atom;
  }
  return out;
}

bool msd_equal(const UmMsd& a, const UmMsd& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.values())
    if (!b.has_atom(v.atom)) return false;
  return true;
}

UmParseResult parse_um_tag(std::string_view tag, const DimensionRegistry& registry) {
  UmParseResult result;
  std::string text(trim(tag));
  if (text.empty() || text == "_") return result;
  if (text.find(':') != std::string::npos) {
    // Some tables use idiopathic colons as separators; tolerate, flag, never emit.
    result.nonconforming_separator = true;
    std::replace(text.begin(), text.end(), ':', ';');
  }
  for (const std::string& piece : split(text, ';')) {
    std::string_view atom = trim(piece);
    if (atom.empty()) continue;
    UmValue value = make_um_value(atom, registry);
    if (value.dimension == "Unknown") result.unknown_atoms.push_back(value.atom);
    result.msd.add_forced(value);
  }
  return result;
}

}  // namespace umconv
