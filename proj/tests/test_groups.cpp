#include <numeric>
#include <random>

#include "doctest.h"
#include "forge/groups.hpp"
#include "forge/iso.hpp"
#include "forge/kernel.hpp"
#include "forge/zoo.hpp"
#include "oracles.hpp"

using namespace forge;

TEST_CASE("subgroup counts of the small classics") {
  CHECK(subgroups(cyclic_group(6)).size() == 4);
  auto s3 = subgroups(symmetric_group(3));
  CHECK(s3.size() == 6);  // 1, three Z2, one Z3, S3
  int z2s = 0, z3s = 0;
  for (const auto& h : s3) {
    if (h.order() == 2) ++z2s;
    if (h.order() == 3) ++z3s;
  }
  CHECK(z2s == 3);
  CHECK(z3s == 1);

  auto q8 = subgroups(quaternion_group());
  CHECK(q8.size() == 6);
  for (const auto& h : q8) CHECK(h.normal);  // hamiltonian cross-check

  CHECK(subgroups(dihedral_group(4)).size() == 10);
  CHECK(subgroups(alternating_group(5)).size() == 59);
  CHECK_THROWS_AS(subgroups(cyclic_group(600)), CapExceededError);
}

TEST_CASE("subgroups satisfy lagrange and are sorted without duplicates") {
  FiniteGroup g = symmetric_group(4);
  auto subs = subgroups(g);
  CHECK(subs.size() == 30);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CHECK(g.order() % subs[i].order() == 0);
    CHECK(subs[i].index == g.order() / subs[i].order());
    if (i > 0)
      CHECK((subs[i - 1].order() < subs[i].order() ||
             (subs[i - 1].order() == subs[i].order() &&
              subs[i - 1].members < subs[i].members)));
  }
}

TEST_CASE("quotients") {
  FiniteGroup s4 = symmetric_group(4);
  auto subs = subgroups(s4);
  const Subgroup* v = nullptr;
  for (const auto& h : subs)
    if (h.order() == 4 && h.normal) v = &h;
  REQUIRE(v != nullptr);
  auto qr = quotient(s4, *v);
  CHECK(qr.group.order() == 6);
  CHECK(isomorphic(qr.group.sg(), symmetric_group(3).sg()).has_value());
  CHECK(qr.projection.kind == MorphismKind::surjection);
  CHECK(s4.order() == v->order() * qr.group.order());

  // g / {e} ~ g and g / g trivial
  Subgroup triv;
  triv.members = {s4.identity()};
  triv.bits = Bitset(s4.order());
  triv.bits.set(s4.identity());
  triv.normal = true;
  triv.index = s4.order();
  CHECK(isomorphic(quotient(s4, triv).group.sg(), s4.sg()).has_value());
  CHECK(quotient(s4, subs.back()).group.order() == 1);

  // non-normal kernel rejected
  const Subgroup* z2 = nullptr;
  for (const auto& h : subs)
    if (h.order() == 2 && !h.normal) z2 = &h;
  REQUIRE(z2 != nullptr);
  CHECK_THROWS_AS(quotient(s4, *z2), NotNormalError);
}

TEST_CASE("minimal normal subgroups and monoliths") {
  auto mq8 = monolith(quaternion_group());
  REQUIRE(mq8.has_value());
  CHECK(mq8->members == std::vector<Elem>{0, 1});

  auto ms4 = monolith(symmetric_group(4));
  REQUIRE(ms4.has_value());
  CHECK(ms4->order() == 4);  // the klein four-group inside A4

  // order-30 dihedral: two minimal normal subgroups, no monolith
  FiniteGroup d15 = dihedral_group(15);
  CHECK(!monolith(d15).has_value());
  auto mins = minimal_normal_subgroups(d15);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].order() == 3);
  CHECK(mins[1].order() == 5);

  // dual route: minimal normals from the full subgroup lattice
  for (const FiniteGroup& g : {quaternion_group(), symmetric_group(4), dihedral_group(15)}) {
    auto subs = subgroups(g);
    std::vector<std::vector<Elem>> expect;
    for (const auto& n : subs) {
      if (!n.normal || n.order() <= 1) continue;
      bool minimal = true;
      for (const auto& m : subs)
        if (m.normal && m.order() > 1 && m.order() < n.order() && m.bits.subset_of(n.bits))
          minimal = false;
      if (minimal) expect.push_back(n.members);
    }
    auto fast = minimal_normal_subgroups(g);
    REQUIRE(fast.size() == expect.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].members == expect[i]);
  }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(cyclic_group(5)));
  CHECK(is_simple(alternating_group(5)));
  CHECK(!is_simple(symmetric_group(3)));
  CHECK(!is_simple(cyclic_group(4)));
  CHECK(!is_simple(trivial_group()));
}

TEST_CASE("semidirect products") {
  // Z3 x| Z2 with inversion is S3
  Action inv2(2, std::vector<Elem>(3));
  for (int x = 0; x < 3; ++x) {
    inv2[0][x] = static_cast<Elem>(x);
    inv2[1][x] = static_cast<Elem>((3 - x) % 3);
  }
  FiniteGroup s3 = semidirect_product(cyclic_group(3), cyclic_group(2), inv2);
  CHECK(isomorphic(s3.sg(), symmetric_group(3).sg()).has_value());

  // trivial action gives the direct product
  Action triv(2, std::vector<Elem>(3));
  for (int j = 0; j < 2; ++j)
    for (int x = 0; x < 3; ++x) triv[j][x] = static_cast<Elem>(x);
  FiniteGroup z6 = semidirect_product(cyclic_group(3), cyclic_group(2), triv);
  CHECK(isomorphic(z6.sg(), cyclic_group(6).sg()).has_value());

  // A:16 = Z4 x| Z4 satisfies x^4 = y^4 = e and y x y^-1 = x^-1
  FiniteGroup a = a16_group();
  CHECK(a.order() == 16);
  const Elem x = 4, y = 1;  // (1, 0) and (0, 1) under (a, k) -> a*4 + k
  CHECK(a.element_order(x) == 4);
  CHECK(a.element_order(y) == 4);
  CHECK(a.conj(y, x) == a.inv(x));

  // broken action rejected
  Action broken = inv2;
  broken[1][0] = 1;
  CHECK_THROWS_AS(semidirect_product(cyclic_group(3), cyclic_group(2), broken),
                  NotAnActionError);
}

TEST_CASE("wreath products") {
  FiniteGroup w = wreath_product(cyclic_group(2), cyclic_group(2));
  CHECK(w.order() == 8);
  CHECK(isomorphic(w.sg(), dihedral_group(4).sg()).has_value());

  CHECK(isomorphic(wreath_product(trivial_group(), cyclic_group(5)).sg(),
                   cyclic_group(5).sg())
            .has_value());
  CHECK(isomorphic(wreath_product(cyclic_group(5), trivial_group()).sg(),
                   cyclic_group(5).sg())
            .has_value());
  CHECK_THROWS_AS(wreath_product(cyclic_group(10), cyclic_group(4)), SizeOverflowError);
}

TEST_CASE("subquotient search") {
  FiniteGroup q8 = quaternion_group();
  FiniteGroup d4 = dihedral_group(4);

  auto w = is_subquotient(q8, direct_product(d4, d4));
  REQUIRE(w.has_value());
  CHECK(w->subgroup.order() % 8 == 0);
  CHECK(w->subgroup.order() / w->kernel.order() == 8);
  CHECK(w->iso.kind == MorphismKind::isomorphism);

  CHECK(is_subquotient(d4, direct_product(q8, q8)).has_value());
  CHECK(!is_subquotient(q8, d4).has_value());
  CHECK(!is_subquotient(d4, q8).has_value());

  auto triv = is_subquotient(trivial_group(), q8);
  REQUIRE(triv.has_value());
  CHECK(triv->subgroup.order() == 1);

  // explicit builder avoids enumerating the order-243 ambient group
  ModularP3Witness mw = modular_p3_subquotient_witness(3);
  CHECK(mw.ambient.order() == 243);
  CHECK(mw.witness.subgroup.order() == 81);
  CHECK(mw.witness.kernel.order() == 3);
  CHECK(mw.target.order() == 27);
}

TEST_CASE("direct decomposition") {
  auto z6 = direct_decomposition(cyclic_group(6));
  REQUIRE(z6.factors.size() == 2);
  CHECK(z6.factors[0].order() * z6.factors[1].order() == 6);
  CHECK(z6.iso.kind == MorphismKind::isomorphism);

  auto s3 = direct_decomposition(symmetric_group(3));
  CHECK(s3.factors.size() == 1);

  auto big = direct_decomposition(direct_product(dihedral_group(4), cyclic_group(3)));
  REQUIRE(big.factors.size() == 2);
  std::vector<int> orders{big.factors[0].order(), big.factors[1].order()};
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{3, 8});
  bool has_d4 = false;
  for (const auto& f : big.factors)
    if (f.order() == 8 && isomorphic(f.sg(), dihedral_group(4).sg())) has_d4 = true;
  CHECK(has_d4);

  auto z60 = direct_decomposition(cyclic_group(60));
  CHECK(z60.factors.size() == 3);  // 4, 3, 5
}

TEST_CASE("semidirect complements") {
  FiniteGroup s4 = symmetric_group(4);
  auto v = monolith(s4);
  REQUIRE(v.has_value());
  auto k = semidirect_complement(s4, *v);
  REQUIRE(k.has_value());
  CHECK(k->order() == 6);
  auto kg = subgroup_group(s4, k->members);
  CHECK(isomorphic(kg.group.sg(), symmetric_group(3).sg()).has_value());

  FiniteGroup z4 = cyclic_group(4);
  auto mz4 = monolith(z4);
  REQUIRE(mz4.has_value());
  CHECK(!semidirect_complement(z4, *mz4).has_value());

  FiniteGroup s3 = symmetric_group(3);
  auto a3 = monolith(s3);
  REQUIRE(a3.has_value());
  auto comp = semidirect_complement(s3, *a3);
  REQUIRE(comp.has_value());
  CHECK(comp->order() == 2);
}

TEST_CASE("kaloujnine-krasner instances: G embeds in monolith wr quotient") {
  std::vector<FiniteGroup> cases{cyclic_group(4), symmetric_group(3), quaternion_group(),
                                 dihedral_group(4), cyclic_group(9)};
  for (const FiniteGroup& g : cases) {
    auto m = monolith(g);
    REQUIRE(m.has_value());
    REQUIRE(m->index <= 4);
    auto qr = quotient(g, *m);
    auto mg = subgroup_group(g, m->members);
    FiniteGroup w = wreath_product(mg.group, qr.group);
    bool embedded = false;
    for (const auto& h : subgroups(w)) {
      if (h.order() != g.order()) continue;
      auto hg = subgroup_group(w, h.members);
      if (isomorphic(g.sg(), hg.group.sg())) {
        embedded = true;
        break;
      }
    }
    CHECK(embedded);
  }
}
