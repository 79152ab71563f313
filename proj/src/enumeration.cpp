#include "forge/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "json.hpp"

namespace forge {

const char* to_string(CatalogMode m) {
  return m == CatalogMode::up_to_iso ? "iso" : "anti";
}

namespace {

std::vector<std::vector<std::uint8_t>> permutations_of(int n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orderly generation: fill cells in a fixed order, prune on associativity
// of decided triples and on lexicographic minimality of the row-major
// table under simultaneous relabeling (and transpose, in anti mode).
struct Generator {
  int n;
  CatalogMode mode;
  bool idempotent_only;
  CellOrder cell_order;
  const std::function<void(const OpTable&)>& emit;

  std::vector<std::array<int, 2>> cells;
  std::vector<int> tab;  // row-major, -1 unset
  std::vector<std::vector<std::array<int, 2>>> occ;  // value -> cells holding it
  std::vector<std::vector<std::uint8_t>> perms, inv_perms;

  Generator(int n_, CatalogMode m, bool idem, CellOrder co,
            const std::function<void(const OpTable&)>& e)
      : n(n_), mode(m), idempotent_only(idem), cell_order(co), emit(e) {
    tab.assign(static_cast<std::size_t>(n) * n, -1);
    occ.assign(n, {});
    if (cell_order == CellOrder::row_major) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells.push_back({i, j});
    } else {
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cells.push_back({i, j});
    }
    perms = permutations_of(n);
    inv_perms.resize(perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k) {
      inv_perms[k].assign(n, 0);
      for (int x = 0; x < n; ++x) inv_perms[k][perms[k][x]] = static_cast<std::uint8_t>(x);
    }
  }

  int at(int i, int j) const { return tab[static_cast<std::size_t>(i) * n + j]; }
  void set(int i, int j, int v) { tab[static_cast<std::size_t>(i) * n + j] = v; }

  // All four roles a fresh cell can play in a triple; every triple is
  // therefore checked as soon as its last cell is decided.
  bool consistent(int i, int j, int v) {
    for (int k = 0; k < n; ++k) {
      // (i, j, k): (ij)k vs i(jk)
      const int jk = at(j, k);
      if (jk >= 0) {
        const int l = at(v, k), r = at(i, jk);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
      // (k, i, j): (ki)j vs k(ij)
      const int ki = at(k, i);
      if (ki >= 0) {
        const int l = at(ki, j), r = at(k, v);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
    // (a, b, j) with ab = i:  v = (ab)j  vs  a(bj)
    for (const auto& [a, b] : occ[i]) {
      const int bj = at(b, j);
      if (bj >= 0) {
        const int r = at(a, bj);
        if (r >= 0 && r != v) return false;
      }
    }
    // (i, b, c) with bc = j:  (ib)c  vs  v = i(bc)
    for (const auto& [b, c] : occ[j]) {
      const int ib = at(i, b);
      if (ib >= 0) {
        const int l = at(ib, c);
        if (l >= 0 && l != v) return false;
      }
    }
    return true;
  }

  // True when some relabeling (or transposed relabeling) is already
  // strictly smaller on the decided row-major prefix: no extension of
  // the current table can be canonical.
  bool doomed() const {
    const int total = n * n;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      for (int transposed = 0; transposed < (mode == CatalogMode::up_to_iso_and_anti ? 2 : 1);
           ++transposed) {
        if (k == 0 && !transposed) continue;  // identity image equals the table
        const auto& inv = inv_perms[k];
        const auto& sig = perms[k];
        for (int p = 0; p < total; ++p) {
          const int cur = tab[p];
          if (cur < 0) break;
          const int i = p / n, j = p % n;
          const int src = transposed ? at(inv[j], inv[i]) : at(inv[i], inv[j]);
          if (src < 0) break;
          const int img = sig[src];
          if (img != cur) {
            if (img < cur) return true;
            break;
          }
        }
      }
    }
    return false;
  }

  void dfs(int pos) {
    if (pos == n * n) {
      if (!doomed()) {
        std::vector<Elem> out(tab.begin(), tab.end());
        OpTable table(n, std::move(out));
        if (!fully_associative()) throw Error("generator emitted a non-associative table");
        emit(table);
      }
      return;
    }
    const auto [i, j] = cells[pos];
    const int lo = idempotent_only && i == j ? i : 0;
    const int hi = idempotent_only && i == j ? i + 1 : n;
    for (int v = lo; v < hi; ++v) {
      // set first: the fresh cell may play several roles in one triple
      set(i, j, v);
      occ[v].push_back({i, j});
      if (consistent(i, j, v) && ((pos + 1) % n != 0 || !doomed())) dfs(pos + 1);
      occ[v].pop_back();
      set(i, j, -1);
    }
  }

  bool fully_associative() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) return false;
    return true;
  }
};

}  // namespace

void generate_semigroups(int order, CatalogMode mode, bool idempotent_only,
                         const std::function<void(const OpTable&)>& emit,
                         CellOrder cell_order) {
  if (order < 1 || order > 7) throw CapExceededError("enumeration supports orders 1..7");
  Generator gen(order, mode, idempotent_only, cell_order, emit);
  gen.dfs(0);
}

CatalogHandle::CatalogHandle(CatalogMode mode, bool idempotent_only,
                             std::vector<std::vector<OpTable>> shards, int fly_cap)
    : mode_(mode), idempotent_only_(idempotent_only), fly_cap_(fly_cap),
      shards_(std::move(shards)) {}

const std::vector<OpTable>& CatalogHandle::shard(int order) const {
  if (order < 1 || order > max_order()) throw RangeError("shard order out of range");
  return shards_[order - 1];
}

const std::vector<OpTable>* CatalogHandle::tables_of_order(int order) const {
  if (order >= 1 && order <= max_order()) return &shards_[order - 1];
  if (order > fly_cap_) return nullptr;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = extra_.find(order);
  if (it == extra_.end()) {
    std::vector<OpTable> tables;
    generate_semigroups(order, mode_, idempotent_only_,
                        [&tables](const OpTable& t) { tables.push_back(t); });
    it = extra_.emplace(order, std::move(tables)).first;
  }
  return &it->second;
}

std::vector<long long> CatalogHandle::counts() const {
  std::vector<long long> out;
  for (const auto& s : shards_) out.push_back(static_cast<long long>(s.size()));
  return out;
}

CatalogHandle enumerate_semigroups(int max_order, CatalogMode mode, bool idempotent_only,
                                   bool allow_order_7, int fly_cap) {
  if (max_order < 1) throw RangeError("max_order must be >= 1");
  if (max_order > 7 || (max_order == 7 && !allow_order_7))
    throw CapExceededError("enumeration capped at order 6 (7 behind the explicit flag)");
  std::vector<std::vector<OpTable>> shards(max_order);
  for (int k = 1; k <= max_order; ++k)
    generate_semigroups(k, mode, idempotent_only,
                        [&shards, k](const OpTable& t) { shards[k - 1].push_back(t); });
  return CatalogHandle(mode, idempotent_only, std::move(shards), fly_cap);
}

void save_catalog(const CatalogHandle& handle, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["format_version"] = 1;
  manifest["max_order"] = handle.max_order();
  manifest["mode"] = to_string(handle.mode());
  manifest["idempotent_only"] = handle.idempotent_only();
  std::vector<long long> counts = handle.counts();
  manifest["counts"] = counts;
  for (int k = 1; k <= handle.max_order(); ++k) {
    const auto& shard = handle.shard(k);
    std::ofstream f(fs::path(dir) / ("order" + std::to_string(k) + ".shard"),
                    std::ios::binary);
    const std::uint32_t count = static_cast<std::uint32_t>(shard.size());
    f.write(reinterpret_cast<const char*>(&count), sizeof(count));
    std::vector<std::uint8_t> buf;
    for (const auto& t : shard) {
      buf.assign(t.table.begin(), t.table.end());
      f.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    }
    if (!f) throw Error("failed writing shard for order " + std::to_string(k));
  }
  std::ofstream mf(fs::path(dir) / "manifest.json");
  mf << manifest.dump(2) << "\n";
  if (!mf) throw Error("failed writing manifest");
}

CatalogHandle load_catalog(const std::string& dir, int fly_cap) {
  namespace fs = std::filesystem;
  std::ifstream mf(fs::path(dir) / "manifest.json");
  if (!mf) throw CorruptShardError("missing manifest.json in " + dir);
  nlohmann::json manifest;
  try {
    mf >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptShardError(std::string("bad manifest: ") + e.what());
  }
  const int max_order = manifest.at("max_order").get<int>();
  const std::string mode_str = manifest.at("mode").get<std::string>();
  const CatalogMode mode =
      mode_str == "anti" ? CatalogMode::up_to_iso_and_anti : CatalogMode::up_to_iso;
  const bool idem = manifest.at("idempotent_only").get<bool>();
  const auto counts = manifest.at("counts").get<std::vector<long long>>();
  if (static_cast<int>(counts.size()) != max_order)
    throw CorruptShardError("manifest counts length mismatch");

  std::vector<std::vector<OpTable>> shards(max_order);
  for (int k = 1; k <= max_order; ++k) {
    std::ifstream f(fs::path(dir) / ("order" + std::to_string(k) + ".shard"),
                    std::ios::binary);
    if (!f) throw CorruptShardError("missing shard for order " + std::to_string(k));
    std::uint32_t count = 0;
    f.read(reinterpret_cast<char*>(&count), sizeof(count));
    if (!f || count != static_cast<std::uint32_t>(counts[k - 1]))
      throw CorruptShardError("count mismatch in shard for order " + std::to_string(k));
    const std::size_t cell_count = static_cast<std::size_t>(k) * k;
    std::vector<std::uint8_t> buf(cell_count);
    shards[k - 1].reserve(count);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(cell_count));
      if (!f) throw CorruptShardError("truncated shard for order " + std::to_string(k));
      shards[k - 1].emplace_back(k, std::vector<Elem>(buf.begin(), buf.end()));
    }
    f.peek();
    if (!f.eof()) throw CorruptShardError("trailing bytes in shard for order " + std::to_string(k));
  }

  // Deterministic 1% spot revalidation (always including the first table
  // of each shard).
  for (int k = 1; k <= max_order; ++k)
    for (std::size_t idx = 0; idx < shards[k - 1].size(); idx += 100) {
      try {
        FiniteSemigroup::validate(shards[k - 1][idx]);
      } catch (const Error& e) {
        throw CorruptShardError("table " + std::to_string(idx) + " of order " +
                                std::to_string(k) + " fails revalidation: " + e.what());
      }
    }
  return CatalogHandle(mode, idem, std::move(shards), fly_cap);
}

}  // namespace forge
