#include "umconv/util.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "umconv/error.hpp"

namespace umconv {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && (text[b] == ' ' || text[b] == '\t' || text[b] == '\r')) ++b;
  while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' || text[e - 1] == '\r')) --e;
  return text.substr(b, e - b);
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return text.size() >= prefix.size() && text.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

std::string to_upper(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string fold_lemma_case(std::string_view lemma) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(lemma.data(), static_cast<int32_t>(lemma.size())));
  s.toLower();
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string_view utf8_suffix(std::string_view text, std::size_t count) {
  if (count == 0) return text.substr(text.size());
  std::size_t seen = 0;
  std::size_t i = text.size();
  while (i > 0) {
    --i;
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++seen;
      if (seen == count) return text.substr(i);
    }
  }
  return text;
}

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr)
    throw Error(ErrorKind::IoError, "ICU NFC normalizer unavailable");
  return *norm;
}

}  // namespace

std::string nfc(std::string_view text) {
  // Fast path: pure ASCII is always NFC.
  bool ascii = true;
  for (unsigned char c : text)
    if (c >= 0x80) {
      ascii = false;
      break;
    }
  if (ascii) return std::string(text);

  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString out = nfc_instance().normalize(in, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string result;
  out.toUTF8String(result);
  return result;
}

bool is_nfc(std::string_view text) { return nfc(text) == text; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::IoError, "short write to " + path);
}

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return std::string(buf);
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::WrongColumnCount: return "WrongColumnCount";
    case ErrorKind::MalformedId: return "MalformedId";
    case ErrorKind::MalformedFeats: return "MalformedFeats";
    case ErrorKind::StrayComment: return "StrayComment";
    case ErrorKind::EmptySentence: return "EmptySentence";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::UnknownTargetAtom: return "UnknownTargetAtom";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::UnknownKeyword: return "UnknownKeyword";
    case ErrorKind::ExcludedPos: return "ExcludedPos";
    case ErrorKind::DimensionConflict: return "DimensionConflict";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::AlignmentError: return "AlignmentError";
  }
  return "Error";
}

std::string Error::format(ErrorKind kind, const std::string& message, std::size_t line) {
  std::string out = error_kind_name(kind);
  if (line > 0) out += " at line " + std::to_string(line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace umconv
