#include <numeric>
#include <random>
#include <map>

#include "doctest.h"
#include "forge/enumeration.hpp"
#include "forge/iso.hpp"
#include "forge/kernel.hpp"
#include "forge/structure.hpp"
#include "forge/zoo.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("isomorphic distinguishes Z4 from the Klein four-group") {
  CHECK(!isomorphic(cyclic_group(4).sg(), klein_four_group().sg()).has_value());
}

TEST_CASE("isomorphic finds shuffled relabelings") {
  std::mt19937 rng(7);
  FiniteSemigroup s = direct_product(null_refuter_semigroup(1), null_semigroup(1));
  for (int trial = 0; trial < 20; ++trial) {
    OpTable shuffled = oracle::relabel(s.table(), random_perm(s.order(), rng));
    auto w = isomorphic(s, FiniteSemigroup::validate(shuffled));
    REQUIRE(w.has_value());
    CHECK(w->kind == MorphismKind::isomorphism);
  }
}

TEST_CASE("isomorphic returns the identity on equal tables") {
  FiniteSemigroup s = null_refuter_semigroup(2);
  auto w = isomorphic(s, s);
  REQUIRE(w.has_value());
  for (int i = 0; i < s.order(); ++i) CHECK(w->map[i] == i);
}

TEST_CASE("witnesses invert and compose") {
  std::mt19937 rng(99);
  FiniteGroup g = dihedral_group(4);
  OpTable t1 = oracle::relabel(g.table(), random_perm(8, rng));
  OpTable t2 = oracle::relabel(g.table(), random_perm(8, rng));
  FiniteSemigroup a = g.sg();
  FiniteSemigroup b = FiniteSemigroup::validate(t1);
  FiniteSemigroup c = FiniteSemigroup::validate(t2);
  auto ab = isomorphic(a, b);
  auto bc = isomorphic(b, c);
  REQUIRE(ab.has_value());
  REQUIRE(bc.has_value());
  // inverse
  std::vector<Elem> inv(8);
  for (int i = 0; i < 8; ++i) inv[ab->map[i]] = static_cast<Elem>(i);
  CHECK(make_hom(b, a, inv).kind == MorphismKind::isomorphism);
  // composition
  std::vector<Elem> comp(8);
  for (int i = 0; i < 8; ++i) comp[i] = bc->map[ab->map[i]];
  CHECK(make_hom(a, c, comp).kind == MorphismKind::isomorphism);
}

TEST_CASE("backtracking matches brute force over all bijections on small tables") {
  // completeness oracle on the full order <= 3 classification
  for (int n = 1; n <= 3; ++n) {
    auto classes = oracle::brute_enumerate(n, false, false);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) {
        FiniteSemigroup s = FiniteSemigroup::validate(classes[i]);
        FiniteSemigroup t = FiniteSemigroup::validate(classes[j]);
        const bool fast = isomorphic(s, t).has_value();
        const bool brute = oracle::brute_iso(classes[i], classes[j]).has_value();
        CHECK(fast == brute);
        if (i == j) CHECK(fast);
      }
  }
}

TEST_CASE("backtracking separates the classes the fingerprint cannot") {
  // scan an order-5 catalog for colliding fingerprints between distinct
  // canonical classes; the search must still tell them apart
  CatalogHandle cat = enumerate_semigroups(5, CatalogMode::up_to_iso);
  std::map<std::uint64_t, std::vector<const OpTable*>> buckets;
  for (const auto& t : cat.shard(5))
    buckets[fingerprint(FiniteSemigroup::trusted(t)).global_hash].push_back(&t);
  int collisions = 0;
  for (const auto& [hash, group] : buckets)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        ++collisions;
        CHECK(!isomorphic(FiniteSemigroup::trusted(*group[i]),
                          FiniteSemigroup::trusted(*group[j]))
                   .has_value());
      }
  CHECK(collisions < 32);  // the filter must stay sharp
}

TEST_CASE("moderate-order group relabelings are found quickly") {
  std::mt19937 rng(23);
  for (const FiniteGroup& g : {heisenberg_group(3), extraspecial_p5(2), symmetric_group(4)}) {
    OpTable shuffled = oracle::relabel(g.table(), random_perm(g.order(), rng));
    auto w = isomorphic(g.sg(), FiniteSemigroup::trusted(shuffled));
    REQUIRE(w.has_value());
    CHECK(w->kind == MorphismKind::isomorphism);
  }
  // and a non-isomorphic same-order pair: the two order-27 p-groups of
  // exponent 3 and 9
  CHECK(!isomorphic(heisenberg_group(3).sg(), modular_group_p3(3).sg()).has_value());
}

TEST_CASE("fingerprint equality is necessary for isomorphism (order <= 3 oracle)") {
  auto classes = oracle::brute_enumerate(3, false, false);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      auto fi = fingerprint(FiniteSemigroup::validate(classes[i]));
      auto fj = fingerprint(FiniteSemigroup::validate(classes[j]));
      if (fi.histogram != fj.histogram)
        CHECK(!oracle::brute_iso(classes[i], classes[j]).has_value());
    }
}

TEST_CASE("null-factor reconstruction is isomorphic to the original product") {
  // both sides order 12: the refuter times Null(2) against its
  // extracted order-6 left factor times Null(1)
  FiniteSemigroup y = direct_product(null_refuter_semigroup(1), null_semigroup(2));
  auto w = null_factor(y, 1);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->left_factor.order() == 6);
  FiniteSemigroup rebuilt = direct_product(w.witness->left_factor, null_semigroup(1));
  CHECK(isomorphic(rebuilt, y).has_value());
  // same order, wrong structure: the order-12 null semigroup
  CHECK(!isomorphic(null_semigroup(11), y).has_value());
}

TEST_CASE("anti-isomorphism via the opposite table") {
  OpTable lz(2, {0, 0, 1, 1});  // left zero
  FiniteSemigroup l = FiniteSemigroup::validate(lz);
  FiniteSemigroup r = opposite(l);
  auto w = anti_isomorphic(l, r);
  REQUIRE(w.has_value());
  CHECK(w->kind == MorphismKind::anti_isomorphism);
  CHECK(!isomorphic(l, r).has_value());
  // groups are anti-isomorphic to themselves via inversion
  FiniteGroup q = quaternion_group();
  CHECK(anti_isomorphic(q.sg(), q.sg()).has_value());
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(trivial_group()).order == 1);
  CHECK(automorphisms(cyclic_group(5)).order == 4);  // Aut(Z_p) has order p-1
  CHECK(automorphisms(klein_four_group()).order == 6);
  CHECK(automorphisms(cyclic_group(8)).order == 4);

  // brute-force cross-checks
  CHECK(automorphisms(quaternion_group()).order ==
        oracle::brute_automorphism_count(quaternion_group().table()));
  CHECK(automorphisms(dihedral_group(4)).order ==
        oracle::brute_automorphism_count(dihedral_group(4).table()));
  CHECK(automorphisms(klein_four_group()).order ==
        oracle::brute_automorphism_count(klein_four_group().table()));

  CHECK_THROWS_AS(automorphisms(cyclic_group(300)), CapExceededError);
}

TEST_CASE("automorphism generators generate the full automorphism group") {
  auto aut = automorphisms(symmetric_group(3));
  CHECK(aut.order == 6);
  // close the generators under composition and count
  std::set<std::vector<Elem>> closure;
  std::vector<Elem> id(6);
  std::iota(id.begin(), id.end(), 0);
  closure.insert(id);
  std::vector<std::vector<Elem>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& f : frontier)
      for (const auto& gen : aut.generators) {
        std::vector<Elem> comp(6);
        for (int i = 0; i < 6; ++i) comp[i] = gen.map[f[i]];
        if (closure.insert(comp).second) next.push_back(comp);
      }
    frontier = std::move(next);
  }
  CHECK(static_cast<long long>(closure.size()) == aut.order);
}
