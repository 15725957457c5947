#ifndef WARING_CATALOG_HPP
#define WARING_CATALOG_HPP

#include "waring/symbolic.hpp"
#include "waring/umbral.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

namespace waring {

/// One named concomitant of the ternary quartic in symbolic notation.
struct CatalogEntry {
  std::string_view name;   // P_<d>_<m>_<n>, with _I/_II suffixes for the two (5,0,4) forms
  std::string_view text;   // parse_symbolic input
  Signature signature;
};

/// The fifteen concomitants, in a fixed order.
std::span<const CatalogEntry> catalog();

/// Throws std::invalid_argument for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);
const SymbolicExpression& catalog_expression(std::string_view name);

/// Digest of the catalog texts; changes whenever an entry changes.
std::string catalog_version();

/// Generic expansions of the catalog entries, computed on first use and then
/// read-only. Safe to use from several threads.
class GenericExpansionCache {
public:
  const ConcomitantForm& get(std::string_view name);
  bool contains(std::string_view name) const;
  /// Expands every entry not yet present.
  void fill();

  /// Text format: a version header followed by one block per entry. load()
  /// returns false (and keeps the cache unchanged) when the file is missing
  /// or was written for a different catalog version; malformed content
  /// throws std::runtime_error.
  void save(const std::filesystem::path& path) const;
  bool load(const std::filesystem::path& path);

  static GenericExpansionCache& shared();

private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const ConcomitantForm>, std::less<>> forms_;
};

} // namespace waring

#endif
