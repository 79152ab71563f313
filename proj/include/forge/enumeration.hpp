// Orderly generation of all finite semigroups up to a given order, one
// canonical representative per isomorphism class (optionally folding
// anti-isomorphic pairs), plus the on-disk catalog used by the
// factor-search operations.

#ifndef FORGE_ENUMERATION_HPP_
#define FORGE_ENUMERATION_HPP_

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "forge/kernel.hpp"

namespace forge {

inline constexpr int kDefaultEnumerationCap = 6;  // order 7 behind an explicit flag

enum class CatalogMode { up_to_iso, up_to_iso_and_anti };

const char* to_string(CatalogMode m);

struct CorruptShardError : Error {
  using Error::Error;
};

struct CatalogInsufficientError : Error {
  using Error::Error;
};

// Cell fill orders for the generator.  The canonical form is always the
// row-major-least table; the fill order only affects the search tree, so
// a second run with a different order is an independent cross-check.
enum class CellOrder { row_major, column_major };

// Streams every canonical associative table of the exact given order.
void generate_semigroups(int order, CatalogMode mode, bool idempotent_only,
                         const std::function<void(const OpTable&)>& emit,
                         CellOrder cell_order = CellOrder::row_major);

class CatalogHandle {
 public:
  CatalogHandle(CatalogMode mode, bool idempotent_only,
                std::vector<std::vector<OpTable>> shards,
                int fly_cap = kDefaultEnumerationCap);

  int max_order() const { return static_cast<int>(shards_.size()); }
  CatalogMode mode() const { return mode_; }
  bool idempotent_only() const { return idempotent_only_; }

  const std::vector<OpTable>& shard(int order) const;  // 1 <= order <= max_order

  // Shard when stored; lazily enumerated (and cached) for orders up to
  // the fly cap; nullptr when out of reach.
  const std::vector<OpTable>* tables_of_order(int order) const;

  std::vector<long long> counts() const;

 private:
  CatalogMode mode_;
  bool idempotent_only_;
  int fly_cap_;
  std::vector<std::vector<OpTable>> shards_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<OpTable>> extra_;
};

// Canonical-construction-path generation for all orders 1..max_order.
CatalogHandle enumerate_semigroups(int max_order, CatalogMode mode,
                                   bool idempotent_only = false,
                                   bool allow_order_7 = false,
                                   int fly_cap = kDefaultEnumerationCap);

// Shard files are length-prefixed sequences of row-major byte tables;
// manifest.json records counts, mode and version.
void save_catalog(const CatalogHandle& handle, const std::string& dir);

// Verifies counts and spot-revalidates a deterministic 1% sample;
// throws CorruptShardError on any mismatch.
CatalogHandle load_catalog(const std::string& dir, int fly_cap = kDefaultEnumerationCap);

}  // namespace forge

#endif  // FORGE_ENUMERATION_HPP_
