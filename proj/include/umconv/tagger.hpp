#ifndef UMCONV_TAGGER_HPP
#define UMCONV_TAGGER_HPP

#include <map>
#include <string>
#include <vector>

#include "umconv/conllu.hpp"
#include "umconv/schema.hpp"

namespace umconv {

enum class Schema { Ud, Unimorph };

/// A (POS, MSD) prediction target in canonical string form.
struct TagSig {
  std::string upos;
  std::string feats;

  friend bool operator==(const TagSig&, const TagSig&) = default;
  friend auto operator<=>(const TagSig&, const TagSig&) = default;
};

/// Deterministic lexicon + suffix-backoff tagger: known forms take their
/// majority tag, unknown forms fall through the longest matching suffix
/// (code-point suffixes, lengths 1..K) to the corpus majority. Frequency
/// ties break toward the lexicographically smaller canonical tag.
struct TaggerModel {
  Schema schema = Schema::Ud;
  int max_suffix = 4;
  std::map<std::string, TagSig> lexicon;
  std::vector<std::map<std::string, TagSig>> suffixes;  // index k-1
  TagSig fallback;
};

/// Trains on every non-range token of the corpus. Throws EmptyCorpus.
TaggerModel train_tagger(const Document& corpus, int max_suffix_k, Schema schema,
                         const DimensionRegistry& registry);

/// Returns a copy of `doc` with UPOS and FEATS replaced by predictions on
/// every non-range token. Gold annotations live in the caller's original.
Document tag_document(const Document& doc, const TaggerModel& model);

struct PairScore {
  std::size_t gold = 0;  // gold occurrences of the pair
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  bool is_pos = false;

  double precision() const { return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp); }
  double recall() const { return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn); }
  double f1() const {
    double p = precision(), r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
};

/// Attribute-value F1. Pairs are "Attr=Val" for UD FEATS and
/// "Dimension=ATOM" for UniMorph atoms; the POS is carried as "UPOS=..." /
/// "POS=..." pairs and reported both ways, since either convention is
/// defensible. Macro averages run over pairs attested in gold.
struct F1Report {
  std::map<std::string, PairScore> per_pair;
  double macro_f1_with_pos = 0.0;
  double macro_f1_without_pos = 0.0;
};

/// Token-level pair scoring over aligned documents. Throws AlignmentError
/// when the token skeletons (forms, in order) differ.
F1Report evaluate_f1(const Document& gold, const Document& predicted, Schema schema,
                     const DimensionRegistry& registry);

}  // namespace umconv

#endif
