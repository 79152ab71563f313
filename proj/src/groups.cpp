#include "forge/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "forge/iso.hpp"

namespace forge {

int Bitset::count() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool Bitset::subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Bitset Bitset::intersect(const Bitset& other) const {
  Bitset out(bits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::vector<Elem> Bitset::members() const {
  std::vector<Elem> out;
  for (int i = 0; i < bits_; ++i)
    if (test(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

Bitset subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  Bitset in(g.order());
  std::vector<Elem> elems;
  auto add = [&](Elem x) {
    if (!in.test(x)) {
      in.set(x);
      elems.push_back(x);
    }
  };
  add(g.identity());
  for (Elem x : gens) add(x);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Elem a = elems[head];
    for (std::size_t k = 0; k <= head; ++k) {
      add(g.mul(a, elems[k]));
      add(g.mul(elems[k], a));
    }
  }
  return in;
}

Bitset normal_closure(const FiniteGroup& g, Elem x) {
  Bitset in(g.order());
  std::vector<Elem> elems;
  auto add = [&](Elem y) {
    if (!in.test(y)) {
      in.set(y);
      elems.push_back(y);
    }
  };
  add(g.identity());
  add(x);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Elem a = elems[head];
    for (int c = 0; c < g.order(); ++c) add(g.conj(c, a));
    for (std::size_t k = 0; k <= head; ++k) {
      add(g.mul(a, elems[k]));
      add(g.mul(elems[k], a));
    }
  }
  return in;
}

namespace {

bool normal_in_parent(const FiniteGroup& g, const Bitset& h) {
  for (int c = 0; c < g.order(); ++c)
    for (int x = 0; x < g.order(); ++x)
      if (h.test(x) && !h.test(g.conj(c, x))) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> subgroups(const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw CapExceededError("subgroup enumeration capped at order " + std::to_string(cap));
  const int n = g.order();
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Bitset> layer;
  std::vector<Bitset> all;

  Bitset triv(n);
  triv.set(g.identity());
  seen.insert(triv.words());
  layer.push_back(triv);
  all.push_back(triv);

  while (!layer.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& h : layer) {
      std::vector<Elem> base = h.members();
      for (int x = 0; x < n; ++x) {
        if (h.test(x)) continue;
        std::vector<Elem> gens = base;
        gens.push_back(static_cast<Elem>(x));
        Bitset k = subgroup_closure(g, gens);
        if (seen.insert(k.words()).second) {
          next.push_back(k);
          all.push_back(k);
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (const Bitset& b : all) {
    Subgroup s;
    s.members = b.members();
    s.bits = b;
    s.index = n / static_cast<int>(s.members.size());
    s.normal = normal_in_parent(g, b);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

SubgroupGroup subgroup_group(const FiniteGroup& g, const std::vector<Elem>& members) {
  const int m = static_cast<int>(members.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[members[i]] = i;
  OpTable t(m, std::vector<Elem>(static_cast<std::size_t>(m) * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int p = pos[g.mul(members[a], members[b])];
      if (p < 0) throw Error("member set is not closed under the operation");
      t.at(a, b) = static_cast<Elem>(p);
    }
  return SubgroupGroup{FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t))),
                       members};
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.normal || !normal_in_parent(g, n.bits))
    throw NotNormalError("quotient requires a normal subgroup");
  const int order = g.order();
  std::vector<int> coset(order, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem h : n.members) coset[g.mul(x, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  OpTable t(m, std::vector<Elem>(static_cast<std::size_t>(m) * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.at(a, b) = static_cast<Elem>(coset[g.mul(reps[a], reps[b])]);
  QuotientResult out{FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t))),
                     {},
                     std::vector<Elem>(coset.begin(), coset.end())};
  out.projection = make_hom(g.sg(), out.group.sg(), out.coset_of);
  if (!out.projection.is_surjective()) throw Error("quotient projection not surjective");
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Bitset> closures;
  for (int x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    Bitset c = normal_closure(g, static_cast<Elem>(x));
    if (seen.insert(c.words()).second) closures.push_back(std::move(c));
  }
  std::vector<Subgroup> out;
  for (const Bitset& c : closures) {
    bool minimal = true;
    for (const Bitset& d : closures)
      if (!(d == c) && d.subset_of(c)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    Subgroup s;
    s.members = c.members();
    s.bits = c;
    s.normal = true;
    s.index = n / static_cast<int>(s.members.size());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::optional<Subgroup> monolith(const FiniteGroup& g) {
  auto mins = minimal_normal_subgroups(g);
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    if (normal_closure(g, static_cast<Elem>(x)).count() != g.order()) return false;
  }
  return true;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const Action& action, int carrier_cap) {
  if (static_cast<int>(action.size()) != k.order())
    throw NotAnActionError("action must assign a map to every element");
  for (const auto& m : action) {
    if (static_cast<int>(m.size()) != n.order())
      throw NotAnActionError("action map has wrong length");
    try {
      Morphism a = make_hom(n.sg(), n.sg(), m);
      if (a.kind != MorphismKind::isomorphism)
        throw NotAnActionError("action map is not an automorphism");
    } catch (const NotAHomError&) {
      throw NotAnActionError("action map is not an automorphism");
    }
  }
  for (int x = 0; x < n.order(); ++x)
    if (action[k.identity()][x] != x)
      throw NotAnActionError("identity must act trivially");
  for (int x = 0; x < k.order(); ++x)
    for (int y = 0; y < k.order(); ++y)
      for (int b = 0; b < n.order(); ++b)
        if (action[k.mul(x, y)][b] != action[x][action[y][b]])
          throw NotAnActionError("action is not a homomorphism into the automorphisms");

  const long long total = static_cast<long long>(n.order()) * k.order();
  if (total > carrier_cap) throw SizeOverflowError("semidirect product exceeds carrier cap");
  const int nn = n.order(), nk = k.order(), m = static_cast<int>(total);
  OpTable t(m, std::vector<Elem>(static_cast<std::size_t>(m) * m));
  for (int a = 0; a < nn; ++a)
    for (int x = 0; x < nk; ++x)
      for (int b = 0; b < nn; ++b)
        for (int y = 0; y < nk; ++y)
          t.at(a * nk + x, b * nk + y) =
              static_cast<Elem>(n.mul(a, action[x][b]) * nk + k.mul(x, y));
  return FiniteGroup::from_semigroup(FiniteSemigroup::trusted(std::move(t)));
}

FiniteGroup wreath_product(const FiniteGroup& n, const FiniteGroup& q, int carrier_cap) {
  const int m = q.order();
  long long power = 1;
  for (int i = 0; i < m; ++i) {
    power *= n.order();
    if (power * q.order() > carrier_cap)
      throw SizeOverflowError("wreath product exceeds carrier cap");
  }
  std::vector<FiniteGroup> copies(static_cast<std::size_t>(m), n);
  FiniteGroup base = fold_direct_product(copies, carrier_cap);

  // x sends tuple a to b with b[i] = a[x^-1 * i].
  const int pn = base.order();
  std::vector<long long> weight(m, 1);
  for (int i = m - 2; i >= 0; --i) weight[i] = weight[i + 1] * n.order();
  Action action(m, std::vector<Elem>(pn));
  std::vector<int> digits(m);
  for (int x = 0; x < m; ++x) {
    const int xinv = q.inv(x);
    for (int a = 0; a < pn; ++a) {
      int rest = a;
      for (int i = 0; i < m; ++i) {
        digits[i] = static_cast<int>(rest / weight[i]);
        rest = static_cast<int>(rest % weight[i]);
      }
      long long out = 0;
      for (int i = 0; i < m; ++i) out += weight[i] * digits[q.mul(xinv, i)];
      action[x][a] = static_cast<Elem>(out);
    }
  }
  return semidirect_product(base, q, action, carrier_cap);
}

FiniteGroup fold_direct_product(const std::vector<FiniteGroup>& factors, int carrier_cap) {
  if (factors.empty()) return trivial_group();
  FiniteGroup acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = direct_product(acc, factors[i], carrier_cap);
  return acc;
}

std::optional<SubquotientWitness> is_subquotient(const FiniteGroup& h, const FiniteGroup& g,
                                                 int cap) {
  if (h.order() == 1) {
    Subgroup k;
    k.members = {g.identity()};
    k.bits = Bitset(g.order());
    k.bits.set(g.identity());
    k.normal = true;
    k.index = g.order();
    std::vector<Elem> to_h{h.identity()};
    return SubquotientWitness{k, k, make_hom(trivial_group().sg(), h.sg(), to_h)};
  }
  if (h.order() > g.order() || g.order() % h.order() != 0) return std::nullopt;

  auto subs = subgroups(g, cap);
  // decreasing K, increasing kernels
  for (auto kit = subs.rbegin(); kit != subs.rend(); ++kit) {
    const Subgroup& k = *kit;
    if (k.order() % h.order() != 0) continue;
    const int kernel_order = k.order() / h.order();
    auto kg = subgroup_group(g, k.members);
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < kg.group.order(); ++i) local[kg.members[i]] = i;
    for (const Subgroup& cand : subs) {
      if (cand.order() != kernel_order) continue;
      if (!cand.bits.subset_of(k.bits)) continue;
      Subgroup ker;
      ker.bits = Bitset(kg.group.order());
      for (Elem x : cand.members) ker.bits.set(local[x]);
      ker.members = ker.bits.members();
      ker.index = kg.group.order() / cand.order();
      if (!normal_in_parent(kg.group, ker.bits)) continue;
      ker.normal = true;
      auto qr = quotient(kg.group, ker);
      if (auto iso = isomorphic(qr.group.sg(), h.sg())) {
        Subgroup kernel_ambient = cand;
        kernel_ambient.normal = true;  // wrt K
        kernel_ambient.index = k.order() / cand.order();
        return SubquotientWitness{k, kernel_ambient, std::move(*iso)};
      }
    }
  }
  return std::nullopt;
}

namespace {

// First pair of nontrivial proper normal subgroups with trivial
// intersection and complementary orders; such a pair realizes g as an
// internal direct product.
std::optional<std::pair<Subgroup, Subgroup>> split_pair(const FiniteGroup& g, int cap) {
  auto subs = subgroups(g, cap);
  std::vector<const Subgroup*> normals;
  for (const auto& s : subs)
    if (s.normal && s.order() > 1 && s.order() < g.order()) normals.push_back(&s);
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (i == j) continue;
      if (normals[i]->order() * normals[j]->order() != g.order()) continue;
      if (normals[i]->bits.intersect(normals[j]->bits).count() != 1) continue;
      return std::make_pair(*normals[i], *normals[j]);
    }
  return std::nullopt;
}

}  // namespace

Decomposition direct_decomposition(const FiniteGroup& g, int cap) {
  if (g.order() == 1) {
    Decomposition out;
    std::vector<Elem> id{g.identity()};
    out.iso = make_hom(trivial_group().sg(), g.sg(), id);
    return out;
  }
  auto pair = split_pair(g, cap);
  if (!pair) {
    Decomposition out;
    out.factors.push_back(g);
    std::vector<Elem> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    out.iso = make_hom(g.sg(), g.sg(), std::move(id));
    return out;
  }
  auto left = subgroup_group(g, pair->first.members);
  auto right = subgroup_group(g, pair->second.members);
  Decomposition dl = direct_decomposition(left.group, cap);
  Decomposition dr = direct_decomposition(right.group, cap);

  Decomposition out;
  out.factors = dl.factors;
  out.factors.insert(out.factors.end(), dr.factors.begin(), dr.factors.end());
  FiniteGroup prod = fold_direct_product(out.factors);
  // fold(left factors ++ right factors) indexes pairs (alpha, beta) as
  // alpha*|fold(right)| + beta, matching the nested product encoding.
  const int rn = std::max(1, dr.iso.domain_order);
  std::vector<Elem> map(static_cast<std::size_t>(prod.order()));
  for (int a = 0; a < std::max(1, dl.iso.domain_order); ++a)
    for (int b = 0; b < rn; ++b) {
      const Elem x = left.members[dl.iso.map[a]];
      const Elem y = right.members[dr.iso.map[b]];
      map[static_cast<std::size_t>(a) * rn + b] = g.mul(x, y);
    }
  out.iso = make_hom(prod.sg(), g.sg(), std::move(map));
  if (out.iso.kind != MorphismKind::isomorphism)
    throw Error("direct decomposition reconstruction failed");
  return out;
}

std::optional<Subgroup> semidirect_complement(const FiniteGroup& g, const Subgroup& m,
                                              int cap) {
  if (g.order() % m.order() != 0) return std::nullopt;
  const int target = g.order() / m.order();
  for (const Subgroup& k : subgroups(g, cap)) {
    if (k.order() != target) continue;
    if (k.bits.intersect(m.bits).count() != 1) continue;
    return k;
  }
  return std::nullopt;
}

}  // namespace forge
