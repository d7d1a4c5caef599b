#include "umconv/tagger.hpp"

#include <algorithm>
#include <set>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

namespace {

std::string canonical_feats(const std::string& field, Schema schema,
                            const DimensionRegistry& registry) {
  if (schema == Schema::Ud) return render_ud_feats(parse_ud_feats(field));
  UmParseResult parsed = parse_um_tag(field, registry);
  if (parsed.msd.empty()) return "_";
  return canonical_um(parsed.msd, registry);
}

TagSig token_sig(const Token& token, Schema schema, const DimensionRegistry& registry) {
  return TagSig{token.upos(), canonical_feats(token.feats_field(), schema, registry)};
}

std::string sig_key(const TagSig& sig) { return sig.upos + "\t" + sig.feats; }

const TagSig* majority(const std::map<TagSig, std::size_t>& counts) {
  const TagSig* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [sig, count] : counts) {
    // std::map iterates keys in ascending order, so on a tie the earlier
    // (lexicographically smaller) tag wins by staying put.
    if (count > best_count) {
      best = &sig;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

TaggerModel train_tagger(const Document& corpus, int max_suffix_k, Schema schema,
                         const DimensionRegistry& registry) {
  if (max_suffix_k < 1) max_suffix_k = 1;
  std::map<std::string, std::map<TagSig, std::size_t>> form_counts;
  std::vector<std::map<std::string, std::map<TagSig, std::size_t>>> suffix_counts(
      static_cast<std::size_t>(max_suffix_k));
  std::map<TagSig, std::size_t> global_counts;

  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& token : sentence.tokens) {
      if (token.is_range()) continue;
      TagSig sig = token_sig(token, schema, registry);
      ++form_counts[token.form()][sig];
      ++global_counts[sig];
      std::size_t length = utf8_length(token.form());
      for (int k = 1; k <= max_suffix_k; ++k) {
        if (static_cast<std::size_t>(k) > length) break;
        std::string suffix(utf8_suffix(token.form(), static_cast<std::size_t>(k)));
        ++suffix_counts[static_cast<std::size_t>(k - 1)][suffix][sig];
      }
    }
  }
  if (global_counts.empty()) throw Error(ErrorKind::EmptyCorpus, "no tokens to train on");

  TaggerModel model;
  model.schema = schema;
  model.max_suffix = max_suffix_k;
  for (const auto& [form, counts] : form_counts) model.lexicon[form] = *majority(counts);
  model.suffixes.resize(static_cast<std::size_t>(max_suffix_k));
  for (int k = 1; k <= max_suffix_k; ++k)
    for (const auto& [suffix, counts] : suffix_counts[static_cast<std::size_t>(k - 1)])
      model.suffixes[static_cast<std::size_t>(k - 1)][suffix] = *majority(counts);
  model.fallback = *majority(global_counts);
  return model;
}

Document tag_document(const Document& doc, const TaggerModel& model) {
  Document out = doc;
  for (Sentence& sentence : out.sentences) {
    for (Token& token : sentence.tokens) {
      if (token.is_range()) continue;
      const TagSig* sig = nullptr;
      auto hit = model.lexicon.find(token.form());
      if (hit != model.lexicon.end()) {
        sig = &hit->second;
      } else {
        std::size_t length = utf8_length(token.form());
        int start = std::min<int>(model.max_suffix, static_cast<int>(length));
        for (int k = start; k >= 1 && !sig; --k) {
          std::string suffix(utf8_suffix(token.form(), static_cast<std::size_t>(k)));
          auto it = model.suffixes[static_cast<std::size_t>(k - 1)].find(suffix);
          if (it != model.suffixes[static_cast<std::size_t>(k - 1)].end()) sig = &it->second;
        }
      }
      if (!sig) sig = &model.fallback;
      token.cols[3] = sig->upos;
      token.set_feats(sig->feats);
    }
  }
  return out;
}

namespace {

/// Decomposes one annotation into attribute-value pair labels.
std::vector<std::pair<std::string, bool>> pair_labels(const Token& token, Schema schema,
                                                      const DimensionRegistry& registry) {
  std::vector<std::pair<std::string, bool>> labels;  // label, is_pos
  if (schema == Schema::Ud) {
    labels.emplace_back("UPOS=" + token.upos(), true);
    for (const UdPair& p : parse_ud_feats(token.feats_field()))
      labels.emplace_back(p.attr + "=" + p.value, false);
  } else {
    UmParseResult parsed = parse_um_tag(token.feats_field(), registry);
    for (const UmValue& v : parsed.msd.values())
      labels.emplace_back(v.dimension + "=" + v.atom,
                          v.dimension == registry.pos_dimension());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

F1Report evaluate_f1(const Document& gold, const Document& predicted, Schema schema,
                     const DimensionRegistry& registry) {
  std::vector<const Token*> gold_tokens, pred_tokens;
  for (const Sentence& s : gold.sentences)
    for (const Token& t : s.tokens)
      if (!t.is_range()) gold_tokens.push_back(&t);
  for (const Sentence& s : predicted.sentences)
    for (const Token& t : s.tokens)
      if (!t.is_range()) pred_tokens.push_back(&t);

  if (gold_tokens.size() != pred_tokens.size())
    throw Error(ErrorKind::AlignmentError,
                "gold has " + std::to_string(gold_tokens.size()) + " tokens, predicted " +
                    std::to_string(pred_tokens.size()));
  for (std::size_t i = 0; i < gold_tokens.size(); ++i)
    if (gold_tokens[i]->form() != pred_tokens[i]->form())
      throw Error(ErrorKind::AlignmentError,
                  "token " + std::to_string(i + 1) + ": '" + gold_tokens[i]->form() +
                      "' vs '" + pred_tokens[i]->form() + "'");

  F1Report report;
  for (std::size_t i = 0; i < gold_tokens.size(); ++i) {
    auto g = pair_labels(*gold_tokens[i], schema, registry);
    auto p = pair_labels(*pred_tokens[i], schema, registry);
    std::set<std::pair<std::string, bool>> gset(g.begin(), g.end());
    std::set<std::pair<std::string, bool>> pset(p.begin(), p.end());
    for (const auto& [label, is_pos] : gset) {
      PairScore& score = report.per_pair[label];
      score.is_pos = is_pos;
      ++score.gold;
      if (pset.count({label, is_pos}))
        ++score.tp;
      else
        ++score.fn;
    }
    for (const auto& [label, is_pos] : pset) {
      if (gset.count({label, is_pos})) continue;
      PairScore& score = report.per_pair[label];
      score.is_pos = is_pos;
      ++score.fp;
    }
  }

  double sum_all = 0.0, sum_nopos = 0.0;
  std::size_t n_all = 0, n_nopos = 0;
  for (const auto& [label, score] : report.per_pair) {
    if (score.gold == 0) continue;  // never macro-average a pair gold lacks
    sum_all += score.f1();
    ++n_all;
    if (!score.is_pos) {
      sum_nopos += score.f1();
      ++n_nopos;
    }
  }
  report.macro_f1_with_pos = n_all ? sum_all / static_cast<double>(n_all) : 0.0;
  report.macro_f1_without_pos = n_nopos ? sum_nopos / static_cast<double>(n_nopos) : 0.0;
  return report;
}

}  // namespace umconv
