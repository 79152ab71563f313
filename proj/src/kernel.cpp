#include "forge/kernel.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace forge {

NonAssociativeError::NonAssociativeError(int i_, int j_, int k_)
    : Error("not associative at triple (" + std::to_string(i_) + ", " +
            std::to_string(j_) + ", " + std::to_string(k_) + ")"),
      i(i_),
      j(j_),
      k(k_) {}

NotAnIdealError::NotAnIdealError(int e, int m)
    : Error("set is not an ideal: element " + std::to_string(e) +
            " multiplied by " + std::to_string(m) + " leaves the set"),
      element(e),
      multiplier(m) {}

void OpTable::check_well_formed() const {
  if (order < 1) throw MalformedTableError("order must be >= 1");
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw MalformedTableError("table has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(order * order));
  for (Elem v : table)
    if (v >= order) throw MalformedTableError("entry " + std::to_string(v) + " out of range");
  if (!names.empty() && names.size() != static_cast<std::size_t>(order))
    throw MalformedTableError("names list has wrong length");
}

std::string OpTable::name_of(int i) const {
  if (!names.empty()) return names[i];
  return std::to_string(i);
}

FiniteSemigroup FiniteSemigroup::validate(OpTable t) {
  t.check_well_formed();
  const int n = t.order;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elem ij = t.at(i, j);
      for (int k = 0; k < n; ++k)
        if (t.at(ij, k) != t.at(i, t.at(j, k))) throw NonAssociativeError(i, j, k);
    }
  return FiniteSemigroup(std::move(t));
}

FiniteSemigroup FiniteSemigroup::trusted(OpTable t) {
  t.check_well_formed();
  return FiniteSemigroup(std::move(t));
}

FiniteGroup FiniteGroup::from_semigroup(FiniteSemigroup s) {
  const int n = s.order();
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = s.mul(c, x) == x && s.mul(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw NotAGroupError("no identity element");
  std::vector<Elem> inv(n, 0);
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y)
      if (s.mul(x, y) == e && s.mul(y, x) == e) {
        found = y;
        break;
      }
    if (found < 0) throw NotAGroupError("element " + std::to_string(x) + " has no inverse");
    inv[x] = static_cast<Elem>(found);
  }
  return FiniteGroup(std::move(s), static_cast<Elem>(e), std::move(inv));
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  Elem p = static_cast<Elem>(x);
  while (p != identity_) {
    p = mul(p, x);
    ++k;
  }
  return k;
}

const char* to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::hom: return "hom";
    case MorphismKind::embedding: return "embedding";
    case MorphismKind::surjection: return "surjection";
    case MorphismKind::isomorphism: return "isomorphism";
    case MorphismKind::anti_isomorphism: return "anti-isomorphism";
  }
  return "?";
}

Elem Morphism::apply(int x) const { return map[x]; }

bool Morphism::is_injective() const {
  std::vector<char> seen(codomain_order, 0);
  for (Elem v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Morphism::is_surjective() const {
  std::vector<char> seen(codomain_order, 0);
  int hits = 0;
  for (Elem v : map)
    if (!seen[v]) {
      seen[v] = 1;
      ++hits;
    }
  return hits == codomain_order;
}

namespace {

MorphismKind classify(const Morphism& m) {
  const bool inj = m.is_injective();
  const bool sur = m.is_surjective();
  if (inj && sur) return MorphismKind::isomorphism;
  if (inj) return MorphismKind::embedding;
  if (sur) return MorphismKind::surjection;
  return MorphismKind::hom;
}

void check_range(const Morphism& m) {
  for (Elem v : m.map)
    if (v >= m.codomain_order) throw NotAHomError("image out of codomain range");
}

}  // namespace

Morphism make_hom(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                  std::vector<Elem> map) {
  if (map.size() != static_cast<std::size_t>(dom.order()))
    throw NotAHomError("map length differs from domain order");
  Morphism m;
  m.domain_order = dom.order();
  m.codomain_order = cod.order();
  m.map = std::move(map);
  check_range(m);
  for (int x = 0; x < dom.order(); ++x)
    for (int y = 0; y < dom.order(); ++y)
      if (m.map[dom.mul(x, y)] != cod.mul(m.map[x], m.map[y]))
        throw NotAHomError("compatibility fails at (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
  m.kind = classify(m);
  return m;
}

Morphism make_anti_isomorphism(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                               std::vector<Elem> map) {
  if (map.size() != static_cast<std::size_t>(dom.order()))
    throw NotAHomError("map length differs from domain order");
  Morphism m;
  m.domain_order = dom.order();
  m.codomain_order = cod.order();
  m.map = std::move(map);
  check_range(m);
  for (int x = 0; x < dom.order(); ++x)
    for (int y = 0; y < dom.order(); ++y)
      if (m.map[dom.mul(x, y)] != cod.mul(m.map[y], m.map[x]))
        throw NotAHomError("anti-compatibility fails");
  if (!m.is_injective() || !m.is_surjective())
    throw NotAHomError("anti-isomorphism must be bijective");
  m.kind = MorphismKind::anti_isomorphism;
  return m;
}

Morphism make_partial_hom(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                          std::vector<Elem> subset, std::vector<Elem> map) {
  if (subset.empty()) throw NotAHomError("partial morphism needs a nonempty subset");
  if (subset.size() != map.size()) throw NotAHomError("subset/map length mismatch");
  Morphism m;
  m.domain_order = dom.order();
  m.codomain_order = cod.order();
  m.domain_subset = std::move(subset);
  m.map = std::move(map);
  check_range(m);
  std::vector<int> pos(dom.order(), -1);
  for (std::size_t k = 0; k < m.domain_subset.size(); ++k) {
    if (m.domain_subset[k] >= dom.order()) throw NotAHomError("subset element out of range");
    pos[m.domain_subset[k]] = static_cast<int>(k);
  }
  for (std::size_t a = 0; a < m.domain_subset.size(); ++a)
    for (std::size_t b = 0; b < m.domain_subset.size(); ++b) {
      const Elem prod = dom.mul(m.domain_subset[a], m.domain_subset[b]);
      if (pos[prod] < 0) throw NotAHomError("subset not closed under the operation");
      if (m.map[pos[prod]] != cod.mul(m.map[a], m.map[b]))
        throw NotAHomError("partial compatibility fails");
    }
  m.kind = MorphismKind::hom;
  return m;
}

bool check_morphism(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                    const Morphism& m) {
  try {
    if (m.kind == MorphismKind::anti_isomorphism) {
      make_anti_isomorphism(dom, cod, m.map);
      return true;
    }
    if (!m.total()) {
      make_partial_hom(dom, cod, m.domain_subset, m.map);
      return true;
    }
    Morphism fresh = make_hom(dom, cod, m.map);
    switch (m.kind) {
      case MorphismKind::isomorphism: return fresh.kind == MorphismKind::isomorphism;
      case MorphismKind::embedding: return fresh.is_injective();
      case MorphismKind::surjection: return fresh.is_surjective();
      default: return true;
    }
  } catch (const Error&) {
    return false;
  }
}

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               int carrier_cap) {
  const long long n = static_cast<long long>(s.order()) * t.order();
  if (n > carrier_cap)
    throw SizeOverflowError("product order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(carrier_cap));
  const int ns = s.order(), nt = t.order(), np = static_cast<int>(n);
  OpTable tab(np, std::vector<Elem>(static_cast<std::size_t>(np) * np));
  for (int i1 = 0; i1 < ns; ++i1)
    for (int j1 = 0; j1 < nt; ++j1)
      for (int i2 = 0; i2 < ns; ++i2)
        for (int j2 = 0; j2 < nt; ++j2)
          tab.at(i1 * nt + j1, i2 * nt + j2) =
              static_cast<Elem>(s.mul(i1, i2) * nt + t.mul(j1, j2));
  return FiniteSemigroup::trusted(std::move(tab));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, int carrier_cap) {
  return FiniteGroup::from_semigroup(direct_product(g.sg(), h.sg(), carrier_cap));
}

FiniteSemigroup null_semigroup(int kappa) {
  if (kappa < 0) throw RangeError("null semigroup needs kappa >= 0");
  const int n = kappa + 1;
  if (n > kDefaultCarrierCap) throw RangeError("kappa too large");
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n, 0));
  return FiniteSemigroup::trusted(std::move(t));
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > kDefaultCarrierCap) throw RangeError("cyclic group order out of range");
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = static_cast<Elem>((i + j) % n);
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1 || 2 * n > kDefaultCarrierCap) throw RangeError("dihedral parameter out of range");
  // indices 0..n-1: rotations x -> x+a; n..2n-1: reflections x -> a-x.
  // Composition (left acts after right):
  //   r_a r_b = r_{a+b},  r_a f_b = f_{a+b},  f_a r_b = f_{a-b},  f_a f_b = r_{a-b}.
  const int m = 2 * n;
  OpTable t(m, std::vector<Elem>(static_cast<std::size_t>(m) * m));
  auto rot = [n](int a) { return ((a % n) + n) % n; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const bool fi = i >= n, fj = j >= n;
      const int a = fi ? i - n : i, b = fj ? j - n : j;
      int out;
      if (!fi && !fj) out = rot(a + b);
      else if (!fi && fj) out = n + rot(a + b);
      else if (fi && !fj) out = n + rot(a - b);
      else out = rot(a - b);
      t.at(i, j) = static_cast<Elem>(out);
    }
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteGroup permutation_table_group(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> sorted = perms;  // already lexicographic from caller
  auto rank_of = [&sorted](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
  };
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  std::vector<int> comp(sorted[0].size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = sorted[i][sorted[j][x]];
      t.at(i, j) = static_cast<Elem>(rank_of(comp));
    }
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw RangeError("symmetric group supported for n in [1, 6]");
  return permutation_table_group(all_permutations(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 6) throw RangeError("alternating group supported for n in [1, 6]");
  auto perms = all_permutations(n);
  std::vector<std::vector<int>> evens;
  for (auto& p : perms)
    if (is_even_permutation(p)) evens.push_back(p);
  return permutation_table_group(evens);
}

FiniteGroup quaternion_group() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  // axis products with signs: i*j=k, j*k=i, k*i=j, anti-commuting.
  static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  OpTable t(8, std::vector<Elem>(64));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int ai = i / 2, si = i % 2 ? -1 : +1;
      const int aj = j / 2, sj = j % 2 ? -1 : +1;
      const int a = axis[ai][aj];
      const int s = si * sj * sign[ai][aj];
      t.at(i, j) = static_cast<Elem>(2 * a + (s < 0 ? 1 : 0));
    }
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

FiniteGroup klein_four_group() {
  return direct_product(cyclic_group(2), cyclic_group(2));
}

FiniteGroup heisenberg_group(int p) {
  if (p < 2 || p > 13) throw RangeError("heisenberg parameter out of range");
  // element (u, v, w) = I + u e12 + v e13 + w e23, index u*p^2 + v*p + w;
  // (u,v,w)(u',v',w') = (u+u', v+v'+u*w', w+w').
  const int n = p * p * p;
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v)
      for (int w = 0; w < p; ++w)
        for (int u2 = 0; u2 < p; ++u2)
          for (int v2 = 0; v2 < p; ++v2)
            for (int w2 = 0; w2 < p; ++w2) {
              const int i = (u * p + v) * p + w, j = (u2 * p + v2) * p + w2;
              const int ru = (u + u2) % p, rv = (v + v2 + u * w2) % p, rw = (w + w2) % p;
              t.at(i, j) = static_cast<Elem>((ru * p + rv) * p + rw);
            }
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

HeisenbergGens heisenberg_gens(int p) {
  // a = I+e23 = (0,0,1), b = I+e12 = (1,0,0), c = I+e13 = (0,1,0)
  return HeisenbergGens{static_cast<Elem>(1), static_cast<Elem>(p * p), static_cast<Elem>(p)};
}

FiniteGroup modular_group_p3(int p) {
  if (p < 3 || p % 2 == 0 || p > 13) throw RangeError("parameter must be a small odd prime");
  const int q = p * p, n = q * p;
  // (u, x)(v, y) = (u + v*(1+p)^x mod p^2, x + y mod p), index u*p + x.
  std::vector<int> pw(p);
  pw[0] = 1;
  for (int i = 1; i < p; ++i) pw[i] = (pw[i - 1] * (1 + p)) % q;
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  for (int u = 0; u < q; ++u)
    for (int x = 0; x < p; ++x)
      for (int v = 0; v < q; ++v)
        for (int y = 0; y < p; ++y)
          t.at(u * p + x, v * p + y) =
              static_cast<Elem>(((u + v * pw[x]) % q) * p + (x + y) % p);
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  const int n = s.order(), m = n + 1;
  OpTable t(m, std::vector<Elem>(static_cast<std::size_t>(m) * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = s.mul(i, j);
  for (int i = 0; i < m; ++i) {
    t.at(i, n) = static_cast<Elem>(i);
    t.at(n, i) = static_cast<Elem>(i);
  }
  return FiniteSemigroup::trusted(std::move(t));
}

FiniteSemigroup opposite(const FiniteSemigroup& s) {
  const int n = s.order();
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = s.mul(j, i);
  return FiniteSemigroup::trusted(std::move(t));
}

}  // namespace forge
