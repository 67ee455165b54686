#pragma once

#include <fjsa/free_jordan.hpp>
#include <fjsa/homology.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace fjsa {

/// Bumped whenever a stored layout or its meaning changes.
inline constexpr int kFormatVersion = 1;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Canonical JSON for a built algebra; rationals as "p/q" strings.
std::string jordan_to_json(const GradedJordanAlgebra& alg, bool budget_hit = false);
/// Inverse of jordan_to_json; throws FormatError on schema or version mismatch.
FrontierBuild jordan_from_json(std::string_view text);

std::string homology_report_to_json(const HomologyReport& rep);
HomologyReport homology_report_from_json(std::string_view text);

/**
 * Content-addressed file cache. Entries are keyed by the hash of their
 * inputs plus kFormatVersion and written via temp file and rename.
 */
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  /// FJSA_CACHE_DIR, else $XDG_CACHE_HOME/fjsa, else $HOME/.cache/fjsa, else ./.fjsa-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, std::string_view content) const;

 private:
  std::filesystem::path dir_;
};

/// Key for J(d1|d2) through degree n under a relation-entry budget.
std::string jordan_cache_key(long d1, long d2, int n, std::size_t entry_budget);

struct CachedBuild {
  FrontierBuild build;
  bool cache_hit = false;
  std::string store_error;  ///< non-empty when the result could not be written back
};
/// build_free_jordan_frontier, reading and writing through the cache.
CachedBuild cached_free_jordan(const Cache& cache, long d1, long d2, int n, std::size_t entry_budget);

}  // namespace fjsa
