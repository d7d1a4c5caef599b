#include "umconv/conllu.hpp"

#include <charconv>

#include "umconv/error.hpp"
#include "umconv/util.hpp"

namespace umconv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

int to_int(std::string_view s) {
  int value = 0;
  std::from_chars(s.data(), s.data() + s.size(), value);
  return value;
}

TokenId parse_token_id(std::string_view text, std::size_t line) {
  TokenId id;
  id.text = std::string(text);
  std::size_t dash = text.find('-');
  std::size_t dot = text.find('.');
  if (dash != std::string_view::npos) {
    std::string_view lo = text.substr(0, dash);
    std::string_view hi = text.substr(dash + 1);
    if (!all_digits(lo) || !all_digits(hi))
      throw Error(ErrorKind::MalformedId, "bad range id '" + id.text + "'", line);
    id.kind = TokenIdKind::Range;
    id.index = to_int(lo);
    id.end = to_int(hi);
    if (id.end < id.index)
      throw Error(ErrorKind::MalformedId, "range end before start in '" + id.text + "'", line);
  } else if (dot != std::string_view::npos) {
    std::string_view major = text.substr(0, dot);
    std::string_view minor = text.substr(dot + 1);
    if (!all_digits(major) || !all_digits(minor))
      throw Error(ErrorKind::MalformedId, "bad empty-node id '" + id.text + "'", line);
    id.kind = TokenIdKind::EmptyNode;
    id.index = to_int(major);
    id.sub = to_int(minor);
  } else {
    if (!all_digits(text))
      throw Error(ErrorKind::MalformedId, "bad token id '" + id.text + "'", line);
    id.kind = TokenIdKind::Word;
    id.index = to_int(text);
  }
  return id;
}

}  // namespace

void Token::set_feats(std::string feats_text) {
  new_feats = feats_text.empty() ? "_" : std::move(feats_text);
  feats_modified = true;
}

std::string Token::render() const {
  if (!feats_modified) {
    std::string out = cols[0];
    for (std::size_t i = 1; i < cols.size(); ++i) {
      out += '\t';
      out += cols[i];
    }
    return out;
  }
  std::string out = cols[0];
  for (std::size_t i = 1; i < cols.size(); ++i) {
    out += '\t';
    out += (i == 5) ? new_feats : cols[i];
  }
  return out;
}

std::size_t Sentence::word_count() const {
  std::size_t n = 0;
  for (const auto& t : tokens)
    if (!t.is_range()) ++n;
  return n;
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

Document parse_document(std::string_view text) {
  Document doc;
  if (text.empty()) {
    doc.trailing_blank = false;
    doc.final_newline = false;
    return doc;
  }

  doc.final_newline = text.back() == '\n';
  std::vector<std::string> lines = split(text, '\n');
  if (doc.final_newline) lines.pop_back();  // artifact of the trailing '\n'

  Sentence current;
  bool in_sentence = false;
  int next_word = 1;
  int range_end = 0;
  int last_empty_major = -1;
  int last_empty_sub = 0;
  bool last_was_blank = false;

  auto flush = [&](std::size_t line_no) {
    if (!in_sentence) return;
    if (current.tokens.empty())
      throw Error(ErrorKind::EmptySentence, "comments without token lines", line_no);
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
    in_sentence = false;
    next_word = 1;
    range_end = 0;
    last_empty_major = -1;
    last_empty_sub = 0;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t line_no = i + 1;
    if (line.empty()) {
      flush(line_no);
      last_was_blank = true;
      continue;
    }
    last_was_blank = false;
    if (line[0] == '#') {
      if (in_sentence && !current.tokens.empty())
        throw Error(ErrorKind::StrayComment, "comment after token lines", line_no);
      in_sentence = true;
      current.comments.push_back(line);
      continue;
    }

    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw Error(ErrorKind::WrongColumnCount,
                  "expected 10 tab-separated fields, got " + std::to_string(cols.size()), line_no);

    Token token;
    for (std::size_t c = 0; c < 10; ++c) token.cols[c] = cols[c];
    token.id = parse_token_id(cols[0], line_no);

    switch (token.id.kind) {
      case TokenIdKind::Word:
        if (token.id.index != next_word)
          throw Error(ErrorKind::MalformedId,
                      "word id " + token.id.text + " out of sequence (expected " +
                          std::to_string(next_word) + ")",
                      line_no);
        ++next_word;
        last_empty_major = -1;
        break;
      case TokenIdKind::Range:
        if (token.id.index != next_word)
          throw Error(ErrorKind::MalformedId,
                      "range " + token.id.text + " does not start at the next word id", line_no);
        if (token.id.index <= range_end)
          throw Error(ErrorKind::MalformedId, "overlapping range " + token.id.text, line_no);
        range_end = token.id.end;
        if (cols[5] != "_")
          throw Error(ErrorKind::MalformedFeats,
                      "multiword range must carry the placeholder FEATS", line_no);
        break;
      case TokenIdKind::EmptyNode:
        if (token.id.index != next_word - 1)
          throw Error(ErrorKind::MalformedId,
                      "empty node " + token.id.text + " not anchored to the preceding word",
                      line_no);
        if (token.id.index == last_empty_major && token.id.sub != last_empty_sub + 1)
          throw Error(ErrorKind::MalformedId, "empty node " + token.id.text + " out of sequence",
                      line_no);
        if (token.id.index != last_empty_major && token.id.sub != 1)
          throw Error(ErrorKind::MalformedId,
                      "empty node " + token.id.text + " must start at .1", line_no);
        last_empty_major = token.id.index;
        last_empty_sub = token.id.sub;
        break;
    }

    token.feats = parse_ud_feats(cols[5], line_no);
    in_sentence = true;
    current.tokens.push_back(std::move(token));
  }

  flush(lines.size());
  doc.trailing_blank = !doc.sentences.empty() && last_was_blank;
  return doc;
}

std::string serialize_document(const Document& doc) {
  std::vector<std::string> lines;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    if (s) lines.emplace_back();  // one blank line between sentences
    const Sentence& sent = doc.sentences[s];
    for (const auto& c : sent.comments) lines.push_back(c);
    for (const auto& t : sent.tokens) lines.push_back(t.render());
  }
  if (doc.trailing_blank) lines.emplace_back();

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out += lines[i];
    if (i + 1 < lines.size() || doc.final_newline) out += '\n';
  }
  return out;
}

Document load_conllu(const std::string& path) {
  return parse_document(read_file(path));
}

}  // namespace umconv
