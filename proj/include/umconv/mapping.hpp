#ifndef UMCONV_MAPPING_HPP
#define UMCONV_MAPPING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umconv/schema.hpp"

namespace umconv {

/// The language-agnostic UD -> UniMorph lookup. File format, one entry per
/// line, `#` comments:
///   UD_ATTR=UD_VAL<TAB>UM_ATOM[;UM_ATOM...]
///   UPOS:<TAG><TAB>UM_ATOM|EXCLUDE
class MappingTable {
 public:
  static MappingTable load(const std::string& path, const DimensionRegistry& registry);
  static MappingTable from_text(std::string_view text, const DimensionRegistry& registry);

  struct PosTarget {
    bool excluded = false;
    std::string atom;  // empty when excluded
  };

  /// Target for a UPOS tag; nullopt when the tag is not in the table.
  std::optional<PosTarget> pos_target(const std::string& upos) const;
  /// Target atoms for a UD pair; empty when unmapped.
  const std::vector<std::string>& feature_targets(const UdPair& pair) const;

  std::size_t feature_entry_count() const { return entries_.size(); }
  std::size_t pos_entry_count() const { return pos_entries_.size(); }
  std::size_t entry_count() const { return entries_.size() + pos_entries_.size(); }
  const std::string& content_hash() const { return hash_; }

  const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> entries_;
  std::map<std::string, PosTarget> pos_entries_;
  std::string hash_;
};

struct BaseConversion {
  UmMsd proposal;
  std::vector<UdPair> dropped;  // pairs not consumed by the lookup, sorted
};

/// The attribute-value lookup that seeds the conversion. The POS atom is
/// added first, then each pair's targets. Layered pairs (attr with "[...]")
/// and unmapped pairs go to `dropped`; a pair whose target would collide
/// inside a single-valued dimension is also dropped rather than guessed.
/// Throws ExcludedPos when the UPOS has no UniMorph counterpart.
BaseConversion base_convert(const std::string& upos, const std::vector<UdPair>& feats,
                            const MappingTable& table, const DimensionRegistry& registry);

}  // namespace umconv

#endif
