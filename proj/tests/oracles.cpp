#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "umconv/util.hpp"

namespace oracles {

std::string fixture_path(const std::string& name) {
  return std::string(UMCONV_FIXTURES_DIR) + "/" + name;
}

std::string data_path(const std::string& name) {
  return std::string(UMCONV_DATA_DIR) + "/" + name;
}

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::set<std::string> tag_atoms(const std::string& tag) {
  std::set<std::string> atoms;
  std::string normalized = tag;
  std::replace(normalized.begin(), normalized.end(), ':', ';');
  for (const std::string& a : split_on(normalized, ';'))
    if (!a.empty()) atoms.insert(upper(a));
  return atoms;
}

// The one fact the oracle is allowed to know: tables annotate nouns, verbs,
// and adjectives; POS subtypes look like "V.PTCP".
std::string family_of(const std::string& pos_atom) {
  auto dot = pos_atom.find('.');
  return dot == std::string::npos ? pos_atom : pos_atom.substr(0, dot);
}

bool is_pos_atom(const std::string& atom) {
  std::string fam = family_of(atom);
  return fam == "N" || fam == "V" || fam == "ADJ";
}

}  // namespace

JoinRecall join_recall(const std::string& converted_conllu_text, const std::string& tsv_text) {
  std::map<std::pair<std::string, std::string>, std::vector<std::set<std::string>>> table;
  std::set<std::string> families;
  for (const std::string& line : split_on(tsv_text, '\n')) {
    if (line.empty()) continue;
    std::vector<std::string> f = split_on(line, '\t');
    if (f.size() != 3 || f[2].empty()) continue;
    std::set<std::string> atoms = tag_atoms(f[2]);
    std::string pos;
    for (const std::string& a : atoms)
      if (is_pos_atom(a)) pos = a;
    if (pos.empty()) continue;
    families.insert(family_of(pos));
    table[{umconv::nfc(f[0]), umconv::nfc(f[1])}].push_back(atoms);
  }

  JoinRecall result;
  for (const std::string& line : split_on(converted_conllu_text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() != 10) continue;
    if (cols[0].find('-') != std::string::npos) continue;  // multiword range
    const std::string& feats = cols[5];
    if (feats == "_") continue;
    std::vector<std::string> atoms = split_on(feats, ';');
    if (atoms.empty()) continue;
    std::string pos = upper(atoms[0]);  // canonical output puts POS first
    if (!is_pos_atom(pos) || !families.count(family_of(pos))) continue;
    auto it = table.find({umconv::nfc(cols[2]), umconv::nfc(cols[1])});
    if (it == table.end()) continue;
    ++result.overlap;
    std::set<std::string> mine = tag_atoms(feats);
    for (const auto& attested : it->second)
      if (attested == mine) {
        ++result.matches;
        break;
      }
  }
  return result;
}

std::map<std::string, std::pair<std::string, std::string>> count_lexicon(
    const std::string& conllu_text) {
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  for (const std::string& line : split_on(conllu_text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() != 10) continue;
    if (cols[0].find('-') != std::string::npos) continue;
    ++counts[cols[1]][cols[3] + "\t" + cols[5]];
  }
  std::map<std::string, std::pair<std::string, std::string>> lexicon;
  for (const auto& [form, tag_counts] : counts) {
    std::string best;
    std::size_t best_count = 0;
    for (const auto& [tag, count] : tag_counts) {
      if (count > best_count) {  // map order breaks ties toward smaller keys
        best = tag;
        best_count = count;
      }
    }
    auto tab = best.find('\t');
    lexicon[form] = {best.substr(0, tab), best.substr(tab + 1)};
  }
  return lexicon;
}

std::map<std::string, PairCounts> recount_pairs(
    const std::vector<std::set<std::string>>& gold_labels,
    const std::vector<std::set<std::string>>& predicted_labels) {
  std::map<std::string, PairCounts> counts;
  for (std::size_t i = 0; i < gold_labels.size(); ++i) {
    for (const std::string& label : gold_labels[i]) {
      PairCounts& c = counts[label];
      ++c.gold;
      if (predicted_labels[i].count(label))
        ++c.tp;
      else
        ++c.fn;
    }
    for (const std::string& label : predicted_labels[i])
      if (!gold_labels[i].count(label)) ++counts[label].fp;
  }
  return counts;
}

double macro_f1(const std::map<std::string, PairCounts>& counts) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [label, c] : counts) {
    if (c.gold == 0) continue;
    double p = c.tp + c.fp ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
    double r = c.tp + c.fn ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
    sum += (p + r) > 0 ? 2 * p * r / (p + r) : 0.0;
    ++n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

}  // namespace oracles
