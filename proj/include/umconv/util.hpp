#ifndef UMCONV_UTIL_HPP
#define UMCONV_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace umconv {

std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string_view trim(std::string_view text);

bool starts_with(std::string_view text, std::string_view prefix);
bool ends_with(std::string_view text, std::string_view suffix);

/// ASCII-only upper/lower; feature atoms and tags stay inside ASCII.
std::string to_upper(std::string_view text);
std::string to_lower(std::string_view text);

/// Lowercases the first Unicode scalar only when it is ASCII; used for the
/// lemma-casing near-miss check, where treebanks disagree on citation casing.
std::string fold_lemma_case(std::string_view lemma);

/// Number of Unicode code points (assumes well-formed UTF-8).
std::size_t utf8_length(std::string_view text);
/// Suffix of the last `count` code points, or the whole string if shorter.
std::string_view utf8_suffix(std::string_view text, std::size_t count);

/// Unicode NFC normalization (ICU-backed).
std::string nfc(std::string_view text);
bool is_nfc(std::string_view text);

/// FNV-1a 64-bit content hash, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::string format_percent(double value);  // two decimals, e.g. "97.86"

}  // namespace umconv

#endif
