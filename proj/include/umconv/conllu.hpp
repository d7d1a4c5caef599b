#ifndef UMCONV_CONLLU_HPP
#define UMCONV_CONLLU_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "umconv/schema.hpp"

namespace umconv {

enum class TokenIdKind { Word, Range, EmptyNode };

struct TokenId {
  TokenIdKind kind = TokenIdKind::Word;
  int index = 0;  // word id, range start, or empty-node major
  int end = 0;    // range end (Range only)
  int sub = 0;    // empty-node minor (EmptyNode only)
  std::string text;
};

/// One CoNLL-U token line. The ten source columns are kept verbatim; only
/// FEATS may be replaced, so an untouched token serializes byte-for-byte.
struct Token {
  std::array<std::string, 10> cols;
  TokenId id;
  std::vector<UdPair> feats;  // parsed FEATS; empty for "_"
  bool feats_modified = false;
  std::string new_feats;

  const std::string& form() const { return cols[1]; }
  const std::string& lemma() const { return cols[2]; }
  const std::string& upos() const { return cols[3]; }
  const std::string& feats_field() const { return feats_modified ? new_feats : cols[5]; }
  const std::string& misc() const { return cols[9]; }

  bool is_range() const { return id.kind == TokenIdKind::Range; }
  bool is_empty_node() const { return id.kind == TokenIdKind::EmptyNode; }
  bool is_word() const { return id.kind == TokenIdKind::Word; }

  /// Replaces the FEATS column; empty string serializes as "_".
  void set_feats(std::string feats_text);

  std::string render() const;
};

struct Sentence {
  std::vector<std::string> comments;  // verbatim, without trailing newline
  std::vector<Token> tokens;

  /// Syntactic words plus empty nodes; skips multiword ranges.
  std::size_t word_count() const;
};

struct Document {
  std::vector<Sentence> sentences;
  bool trailing_blank = true;  // blank line after the last sentence
  bool final_newline = true;   // last line ends with '\n'

  std::size_t token_count() const;
};

/// Parses CoNLL-U text. Ill-formed lines raise Error with the 1-based line
/// number: WrongColumnCount, MalformedId (including out-of-order word ids),
/// MalformedFeats, StrayComment, EmptySentence.
Document parse_document(std::string_view text);

/// Inverse of parse_document for well-formed input: serialize(parse(x)) == x.
std::string serialize_document(const Document& doc);

Document load_conllu(const std::string& path);

}  // namespace umconv

#endif
