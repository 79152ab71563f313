#include "forge/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace forge {

namespace {

using Color = std::uint64_t;

Color hash_words(const std::vector<Color>& words) {
  Color h = 1469598103934665603ull;
  for (Color w : words)
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xFF;
      h *= 1099511628211ull;
    }
  return h;
}

std::size_t distinct_count(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors.size();
}

// One refinement round.  Colors are content hashes of the keys, so they
// stay comparable across semigroups.
std::vector<Color> refine_once(const FiniteSemigroup& s, const std::vector<Color>& col) {
  const int n = s.order();
  std::vector<Color> out(n);
  std::vector<Color> key;
  std::vector<std::array<Color, 3>> trip(n);
  for (int x = 0; x < n; ++x) {
    key.clear();
    key.push_back(col[x]);
    key.push_back(col[s.mul(x, x)]);
    for (int y = 0; y < n; ++y)
      trip[y] = {col[y], col[s.mul(x, y)], col[s.mul(y, x)]};
    std::sort(trip.begin(), trip.end());
    for (const auto& t : trip) {
      key.push_back(t[0]);
      key.push_back(t[1]);
      key.push_back(t[2]);
    }
    out[x] = hash_words(key);
  }
  return out;
}

}  // namespace

Fingerprint fingerprint(const FiniteSemigroup& s) {
  const int n = s.order();
  // Initial invariants: idempotency, product flag, action-equivalence
  // class size, sorted row/column value-count multisets.
  std::vector<char> is_product(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) is_product[s.mul(i, j)] = 1;

  // Action-equivalence classes via (row, column) signatures.
  std::vector<int> class_size(n, 0);
  {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto sig_less = [&s, n](int a, int b) {
      for (int w = 0; w < n; ++w) {
        if (s.mul(a, w) != s.mul(b, w)) return s.mul(a, w) < s.mul(b, w);
        if (s.mul(w, a) != s.mul(w, b)) return s.mul(w, a) < s.mul(w, b);
      }
      return false;
    };
    auto sig_eq = [&s, n](int a, int b) {
      for (int w = 0; w < n; ++w)
        if (s.mul(a, w) != s.mul(b, w) || s.mul(w, a) != s.mul(w, b)) return false;
      return true;
    };
    std::sort(idx.begin(), idx.end(), sig_less);
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j < idx.size() && sig_eq(idx[i], idx[j])) ++j;
      for (std::size_t k = i; k < j; ++k) class_size[idx[k]] = static_cast<int>(j - i);
      i = j;
    }
  }

  std::vector<Color> col(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> row_count(n, 0), col_count(n, 0);
    for (int y = 0; y < n; ++y) {
      ++row_count[s.mul(x, y)];
      ++col_count[s.mul(y, x)];
    }
    std::vector<Color> rc, cc;
    for (int v = 0; v < n; ++v) {
      if (row_count[v]) rc.push_back(static_cast<Color>(row_count[v]));
      if (col_count[v]) cc.push_back(static_cast<Color>(col_count[v]));
    }
    std::sort(rc.begin(), rc.end());
    std::sort(cc.begin(), cc.end());
    std::vector<Color> key;
    key.push_back(s.mul(x, x) == x ? 1u : 0u);
    key.push_back(is_product[x] ? 1u : 0u);
    key.push_back(static_cast<Color>(class_size[x]));
    key.push_back(static_cast<Color>(rc.size()));
    key.insert(key.end(), rc.begin(), rc.end());
    key.push_back(static_cast<Color>(cc.size()));
    key.insert(key.end(), cc.begin(), cc.end());
    col[x] = hash_words(key);
  }

  for (;;) {
    auto next = refine_once(s, col);
    if (distinct_count(next) == distinct_count(col)) {
      col = std::move(next);  // one extra round mixes neighbor content in
      break;
    }
    col = std::move(next);
  }

  Fingerprint fp;
  fp.colors = col;
  fp.histogram = col;
  std::sort(fp.histogram.begin(), fp.histogram.end());
  std::vector<Color> all;
  all.push_back(static_cast<Color>(n));
  all.insert(all.end(), fp.histogram.begin(), fp.histogram.end());
  fp.global_hash = hash_words(all);
  return fp;
}

namespace {

constexpr Elem kUnset = 0xFFFF;

struct IsoSearch {
  const FiniteSemigroup& s;
  const FiniteSemigroup& t;
  std::vector<std::uint64_t> cs, ct;
  std::vector<int> order;  // s-elements by (color, index)
  std::vector<Elem> f;     // s -> t, kUnset where undecided
  std::vector<Elem> used;  // t -> s preimage or kUnset
  std::map<std::uint64_t, std::vector<Elem>> cand;  // color -> t-elements ascending
  std::vector<std::vector<Elem>> sink;  // found maps
  std::size_t limit;

  IsoSearch(const FiniteSemigroup& s_, const FiniteSemigroup& t_, std::size_t lim)
      : s(s_), t(t_), limit(lim) {}

  bool prepare() {
    if (s.order() != t.order()) return false;
    const auto fs = fingerprint(s), ft = fingerprint(t);
    if (fs.histogram != ft.histogram) return false;
    cs = fs.colors;
    ct = ft.colors;
    const int n = s.order();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [this](int a, int b) { return cs[a] < cs[b]; });
    for (int y = 0; y < n; ++y) cand[ct[y]].push_back(static_cast<Elem>(y));
    f.assign(n, kUnset);
    used.assign(n, kUnset);
    return true;
  }

  // Assign f(a) = b, then close under products of assigned elements.
  // Returns false on conflict; `trail` records assignments for undo.
  bool assign(int a, Elem b, std::vector<int>& trail) {
    if (cs[a] != ct[b]) return false;
    f[a] = b;
    used[b] = static_cast<Elem>(a);
    trail.push_back(a);
    std::size_t head = trail.size() - 1;
    const int n = s.order();
    while (head < trail.size()) {
      const int x = trail[head++];
      for (int y = 0; y < n; ++y) {
        if (f[y] == kUnset) continue;
        // both orders, since x*y and y*x may hit fresh elements
        for (int k = 0; k < 2; ++k) {
          const int p = k == 0 ? s.mul(x, y) : s.mul(y, x);
          const Elem q = k == 0 ? t.mul(f[x], f[y]) : t.mul(f[y], f[x]);
          if (f[p] != kUnset) {
            if (f[p] != q) return false;
          } else {
            if (used[q] != kUnset || cs[p] != ct[q]) return false;
            f[p] = q;
            used[q] = static_cast<Elem>(p);
            trail.push_back(p);
          }
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      const int a = trail.back();
      trail.pop_back();
      used[f[a]] = kUnset;
      f[a] = kUnset;
    }
  }

  bool dfs(std::size_t pos, std::vector<int>& trail) {
    while (pos < order.size() && f[order[pos]] != kUnset) ++pos;
    if (pos == order.size()) {
      sink.push_back(f);
      return sink.size() >= limit;
    }
    const int a = order[pos];
    auto bucket = cand.find(cs[a]);
    if (bucket == cand.end()) return false;
    for (Elem b : bucket->second) {
      if (used[b] != kUnset) continue;
      const std::size_t mark = trail.size();
      if (assign(a, b, trail) && dfs(pos + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }

  void run() {
    if (!prepare()) return;
    std::vector<int> trail;
    trail.reserve(s.order());
    dfs(0, trail);
  }
};

}  // namespace

std::vector<std::vector<Elem>> all_isomorphisms(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t,
                                                std::size_t limit) {
  IsoSearch search(s, t, limit);
  search.run();
  return std::move(search.sink);
}

std::optional<Morphism> isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  if (s.order() != t.order()) return std::nullopt;
  if (s.table() == t.table()) {
    std::vector<Elem> id(s.order());
    std::iota(id.begin(), id.end(), 0);
    return make_hom(s, t, std::move(id));
  }
  auto maps = all_isomorphisms(s, t, 1);
  if (maps.empty()) return std::nullopt;
  return make_hom(s, t, std::move(maps.front()));
}

std::optional<Morphism> anti_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  auto m = isomorphic(s, opposite(t));
  if (!m) return std::nullopt;
  return make_anti_isomorphism(s, t, std::move(m->map));
}

AutomorphismGroup automorphisms(const FiniteGroup& g, int cap) {
  if (g.order() > cap) throw CapExceededError("automorphism search capped at order " +
                                              std::to_string(cap));
  // Hard stop well past anything the zoo needs.
  constexpr std::size_t kMaxAutomorphisms = 1u << 20;
  auto maps = all_isomorphisms(g.sg(), g.sg(), kMaxAutomorphisms);
  if (maps.size() >= kMaxAutomorphisms)
    throw CapExceededError("automorphism group too large to enumerate");

  AutomorphismGroup out;
  out.order = static_cast<long long>(maps.size());

  // Greedy generating set: grow a closure, add any map outside it.
  const int n = g.order();
  std::set<std::vector<Elem>> closure;
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), 0);
  closure.insert(id);
  for (auto& m : maps) {
    if (closure.count(m)) continue;
    out.generators.push_back(make_hom(g.sg(), g.sg(), m));
    // close under composition with everything known
    std::vector<std::vector<Elem>> frontier = {m};
    closure.insert(m);
    while (!frontier.empty()) {
      std::vector<std::vector<Elem>> next;
      for (auto& a : frontier) {
        std::vector<std::vector<Elem>> known(closure.begin(), closure.end());
        for (auto& k : known) {
          std::vector<Elem> ab(n), ba(n);
          for (int x = 0; x < n; ++x) {
            ab[x] = a[k[x]];
            ba[x] = k[a[x]];
          }
          for (auto* c : {&ab, &ba})
            if (closure.insert(*c).second) next.push_back(*c);
        }
      }
      frontier = std::move(next);
    }
    if (static_cast<long long>(closure.size()) == out.order) break;
  }
  return out;
}

}  // namespace forge
