#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "psisum/canonical.hpp"
#include "psisum/enumerate.hpp"
#include "psisum/group.hpp"

namespace psisum {

/// One isomorphism class of groups of order n.
struct CatalogEntry {
  CayleyTable table;  // canonical form
  Group group;
  std::uint64_t psi = 0;
  OrderProfile profile;
  bool cyclic = false;
  bool abelian = false;
  /// Family spec that realizes the class, when one of the construction
  /// families reaches it.
  std::optional<GroupSpec> spec;
  /// Spec text when known, otherwise "#<n>.<position>".
  std::string name;
};

struct SpectrumEntry {
  std::uint64_t psi;
  std::size_t count;
  std::vector<std::string> witnesses;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoized catalog of all groups of each order up to the enumeration bound.
///
/// With a cache directory, each order is persisted to
/// <cache_dir>/catalog/n=<n>.json and reloaded on later runs; a file written
/// by another generator version, or one that fails validation, is rebuilt.
class Catalog {
 public:
  explicit Catalog(EnumerationOptions options = {}, std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const EnumerationOptions& options() const { return options_; }
  std::uint64_t bound() const { return options_.bound; }

  /// Classes of order n, sorted by descending psi (cyclic first).
  const std::vector<CatalogEntry>& groups(std::uint64_t n);

  /// Position of the class isomorphic to g.
  std::size_t find_class(const Group& g);

  std::vector<SpectrumEntry> psi_spectrum(std::uint64_t n);

  std::filesystem::path cache_file(std::uint64_t n) const;

 private:
  std::vector<CatalogEntry> build(std::uint64_t n);
  std::optional<std::vector<CatalogEntry>> load(std::uint64_t n) const;
  void store(std::uint64_t n, const std::vector<CatalogEntry>& entries) const;

  EnumerationOptions options_;
  std::optional<std::filesystem::path> cache_dir_;
  std::mutex mutex_;
  std::map<std::uint64_t, std::unique_ptr<const std::vector<CatalogEntry>>> memo_;
};

/// Builds entries (psi, profile, names) for canonical tables of order n.
std::vector<CatalogEntry> describe_classes(std::uint64_t n, std::vector<CayleyTable> tables);

/// Distinct psi values in descending order with class counts and names.
std::vector<SpectrumEntry> psi_spectrum(const std::vector<CatalogEntry>& entries);
std::vector<SpectrumEntry> psi_spectrum(std::uint64_t n, const EnumerationOptions& options = {});

nlohmann::json catalog_to_json(std::uint64_t n, const std::vector<CatalogEntry>& entries);
nlohmann::json profile_to_json(const OrderProfile& profile);

}  // namespace psisum
