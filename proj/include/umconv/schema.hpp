#ifndef UMCONV_SCHEMA_HPP
#define UMCONV_SCHEMA_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umconv {

/// One UD attribute=value pair. Attributes may carry a layer suffix, e.g.
/// "Number[psor]"; values may be comma-joined when UD multi-values a feature.
struct UdPair {
  std::string attr;
  std::string value;

  friend bool operator==(const UdPair&, const UdPair&) = default;
  friend auto operator<=>(const UdPair&, const UdPair&) = default;
};

/// A UD morphosyntactic description: UPOS plus the FEATS pair set.
struct UdMsd {
  std::string upos;
  std::vector<UdPair> pairs;  // sorted case-insensitively by attr, then value

  bool has(std::string_view attr, std::string_view value) const;
  std::optional<std::string> value_of(std::string_view attr) const;
};

/// Parses a FEATS field ("_" or Attr=Val pairs joined by "|") into a sorted
/// pair set. Throws MalformedFeats (with `line` in the message) on a pair
/// lacking "=" or with an empty attribute or value.
std::vector<UdPair> parse_ud_feats(std::string_view feats_field, std::size_t line = 0);

/// Canonical FEATS rendering: pairs sorted case-insensitively by attribute,
/// joined with "|"; empty set renders as "_".
std::string render_ud_feats(const std::vector<UdPair>& pairs);

/// The UniMorph dimension inventory. Loaded from a line-oriented data file:
/// `DIMENSION<TAB>ATOM` per line, `#` comments. Dimension precedence for
/// canonical rendering is the order of first appearance in the file; POS
/// must come first. An atom ending in `*` declares a prefix family (e.g.
/// `PSS*`); dimensions with a prefix family accept several values at once.
class DimensionRegistry {
 public:
  static DimensionRegistry load(const std::string& path);
  static DimensionRegistry from_text(std::string_view text);

  /// Dimension of an atom (case-insensitive), or "Unknown" if unregistered.
  const std::string& dimension_of(std::string_view atom) const;
  bool known(std::string_view atom) const;

  /// Rank used for canonical ordering; unknown dimensions sort last.
  int precedence(const std::string& dimension) const;
  bool is_dimension(std::string_view name) const;
  /// True when the dimension admits several simultaneous values
  /// (LanguageSpecific and the templatic argument dimensions).
  bool multi_valued(const std::string& dimension) const;

  const std::string& pos_dimension() const { return pos_dimension_; }
  std::size_t atom_count() const { return atoms_.size(); }

 private:
  std::map<std::string, std::string> atoms_;           // ATOM -> dimension
  std::vector<std::pair<std::string, std::string>> prefixes_;  // PREFIX -> dimension
  std::map<std::string, int> precedence_;
  std::map<std::string, bool> multi_;
  std::string pos_dimension_ = "POS";
  std::string unknown_ = "Unknown";
};

/// One atomic UniMorph value with its registry dimension.
struct UmValue {
  std::string atom;       // uppercase convention, e.g. "IND", "PSS1S", "IN+ESS"
  std::string dimension;  // e.g. "Mood", "Possession", "Unknown"

  friend bool operator==(const UmValue& a, const UmValue& b) { return a.atom == b.atom; }
};

/// A UniMorph MSD: a value set with exactly one POS-dimension member once
/// well-formed. Equality is set equality over atoms; rendering is canonical.
class UmMsd {
 public:
  UmMsd() = default;

  /// Inserts an atom. Returns false (and leaves the set unchanged) when a
  /// different atom already occupies a single-valued dimension. Inserting an
  /// atom that is already present is a no-op returning true.
  bool add(const UmValue& value, const DimensionRegistry& registry);
  /// Inserts without the single-valued-dimension check (dedupes atoms only).
  /// Used when parsing external table tags, which we take as attested.
  void add_forced(const UmValue& value);
  bool remove_atom(std::string_view atom);
  std::size_t remove_dimension(std::string_view dimension);

  bool has_atom(std::string_view atom) const;
  bool has_dimension(std::string_view dimension) const;
  std::vector<std::string> atoms_in(std::string_view dimension) const;
  std::optional<std::string> pos(const DimensionRegistry& registry) const;

  const std::vector<UmValue>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<UmValue> values_;  // unordered; canonicalized on render
};

/// Builds a UmValue from raw text: uppercases the atom and resolves its
/// dimension (exact atoms first, then prefix families, else Unknown).
UmValue make_um_value(std::string_view atom, const DimensionRegistry& registry);

/// Deterministic rendering: POS first, then registry dimension precedence,
/// ties broken alphabetically, joined with ";". Set-equal MSDs render
/// identically regardless of insertion order.
std::string canonical_um(const UmMsd& msd, const DimensionRegistry& registry);

/// Set equality over atoms, case-insensitive.
bool msd_equal(const UmMsd& a, const UmMsd& b);

struct UmParseResult {
  UmMsd msd;
  std::vector<std::string> unknown_atoms;  // flagged, never dropped
  bool nonconforming_separator = false;    // ":" accepted but flagged
};

/// Parses a UniMorph tag string (";"-separated; ":" tolerated but flagged).
UmParseResult parse_um_tag(std::string_view tag, const DimensionRegistry& registry);

}  // namespace umconv

#endif
