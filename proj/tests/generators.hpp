// Seeded random generators for the property tests.
#ifndef UMCONV_TESTS_GENERATORS_HPP
#define UMCONV_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "umconv/schema.hpp"

namespace generators {

/// Builds the text of a random well-formed CoNLL-U document (exact bytes).
/// Covers comments, multiword ranges, empty nodes, layered features, and the
/// trailing-newline variants.
inline std::string random_conllu(std::mt19937& rng) {
  static const std::vector<std::string> kForms = {
      "casa",  "mandaba", "país",   "árbol",  "niño", "fütür", "x",
      "létra", "grande",  "soleil", "garçon", "haus", "sïgn",
  };
  static const std::vector<std::string> kUpos = {"NOUN", "VERB", "ADJ",  "DET",
                                                 "ADP",  "PUNCT", "PRON", "AUX"};
  static const std::vector<std::string> kFeatPool = {
      "Gender=Masc",       "Gender=Fem",          "Number=Sing",  "Number=Plur",
      "Mood=Ind",          "Tense=Imp",           "Tense=Past",   "Person=3",
      "VerbForm=Fin",      "Case=Nom",            "Definite=Def", "Number[psor]=Sing",
      "Person[psor]=1",    "PronType=Art",        "Aspect=Perf",  "Polarity=Neg",
  };
  static const std::vector<std::string> kDeprel = {"nsubj", "obj", "det", "root", "amod"};

  auto pick = [&](const std::vector<std::string>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  };
  auto chance = [&](int percent) {
    return std::uniform_int_distribution<int>(0, 99)(rng) < percent;
  };

  std::string text;
  int sentences = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int s = 0; s < sentences; ++s) {
    if (s) text += "\n";
    if (chance(70)) text += "# sent_id = gen-" + std::to_string(s + 1) + "\n";
    if (chance(40)) text += "# text = generated sentence\n";

    int words = std::uniform_int_distribution<int>(1, 7)(rng);
    int next_range_start = chance(30) ? std::uniform_int_distribution<int>(1, words)(rng) : -1;
    for (int w = 1; w <= words; ++w) {
      if (w == next_range_start && w < words) {
        int end = w + 1;
        text += std::to_string(w) + "-" + std::to_string(end) + "\t" + pick(kForms) +
                "\t_\t_\t_\t_\t_\t_\t_\t_\n";
      }
      std::string feats = "_";
      if (chance(70)) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<umconv::UdPair> pairs;
        for (int i = 0; i < n; ++i) {
          std::string item = pick(kFeatPool);
          auto eq = item.find('=');
          umconv::UdPair pair{item.substr(0, eq), item.substr(eq + 1)};
          bool dup = false;
          for (const auto& p : pairs)
            if (p.attr == pair.attr) dup = true;
          if (!dup) pairs.push_back(pair);
        }
        feats = umconv::render_ud_feats(pairs);
      }
      text += std::to_string(w) + "\t" + pick(kForms) + "\t" + pick(kForms) + "\t" +
              pick(kUpos) + "\t_\t" + feats + "\t" +
              std::to_string(std::uniform_int_distribution<int>(0, words)(rng)) + "\t" +
              pick(kDeprel) + "\t_\t" + (chance(20) ? "SpaceAfter=No" : "_") + "\n";
      if (chance(10)) {
        text += std::to_string(w) + ".1\t" + pick(kForms) + "\t" + pick(kForms) +
                "\tVERB\t_\tVerbForm=Inf\t_\t_\t" + std::to_string(w) + ":conj\t_\n";
      }
    }
  }
  if (chance(85))
    text += "\n";  // the usual trailing blank line; otherwise end after the last token
  return text;
}

/// A random (upos, feats) pair drawn from realistic UD inventory, shaped so
/// that base_convert always yields a coherent proposal.
struct RandomUdToken {
  std::string upos;
  std::string form;
  std::string lemma;
  std::vector<umconv::UdPair> feats;
};

inline RandomUdToken random_ud_token(std::mt19937& rng) {
  static const std::vector<std::string> kVerbForms = {
      "mandaba", "mandara", "mandase", "mandar", "comiera", "viviese", "canta", "temió",
  };
  static const std::vector<std::string> kNounForms = {"casa", "házam", "tropas", "país"};
  static const std::vector<std::pair<std::string, std::string>> kVerbFeats = {
      {"Mood", "Ind"},     {"Mood", "Sub"},      {"Number", "Sing"}, {"Number", "Plur"},
      {"Person", "1"},     {"Person", "3"},      {"Tense", "Imp"},   {"Tense", "Past"},
      {"Tense", "Pres"},   {"Tense", "Fut"},     {"VerbForm", "Fin"}, {"Aspect", "Perf"},
      {"Voice", "Pass"},   {"Polarity", "Neg"},
  };
  static const std::vector<std::pair<std::string, std::string>> kNounFeats = {
      {"Gender", "Masc"},        {"Gender", "Fem"},    {"Number", "Sing"},
      {"Number", "Plur"},        {"Case", "Nom"},      {"Case", "Acc"},
      {"Case", "Ine"},           {"Definite", "Def"},  {"Number[psor]", "Sing"},
      {"Person[psor]", "1"},     {"Person[psor]", "2"},
  };

  auto chance = [&](int percent) {
    return std::uniform_int_distribution<int>(0, 99)(rng) < percent;
  };

  RandomUdToken token;
  bool verb = chance(55);
  token.upos = verb ? "VERB" : "NOUN";
  const auto& forms = verb ? kVerbForms : kNounForms;
  token.form = forms[std::uniform_int_distribution<std::size_t>(0, forms.size() - 1)(rng)];
  token.lemma = token.form;
  const auto& pool = verb ? kVerbFeats : kNounFeats;
  int n = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int i = 0; i < n; ++i) {
    const auto& cand = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    bool dup = false;
    for (const auto& p : token.feats)
      if (p.attr == cand.first) dup = true;
    if (!dup) token.feats.push_back({cand.first, cand.second});
  }
  std::sort(token.feats.begin(), token.feats.end());
  return token;
}

}  // namespace generators

#endif
