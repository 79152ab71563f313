#include <random>

#include "doctest.h"
#include "forge/enumeration.hpp"
#include "forge/iso.hpp"
#include "forge/kernel.hpp"
#include "forge/structure.hpp"
#include "forge/zoo.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

FiniteSemigroup left_zero(int n) {
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = static_cast<Elem>(i);
  return FiniteSemigroup::validate(std::move(t));
}

const CatalogHandle& small_catalog() {
  static CatalogHandle cat = enumerate_semigroups(4, CatalogMode::up_to_iso_and_anti);
  return cat;
}

}  // namespace

TEST_CASE("action classes of the documented examples") {
  auto ac = action_classes(null_semigroup(3));
  CHECK(ac.class_count() == 1);
  CHECK(ac.classes[0].size() == 4);
  CHECK(ac.per_class_product_count[0] == 1);

  // order-4 refuter: classes {x0,x1} and {y0,z}, products y0 and z
  FiniteSemigroup s = null_refuter_semigroup(1);
  ac = action_classes(s);
  REQUIRE(ac.class_count() == 2);
  CHECK(ac.classes[0] == std::vector<Elem>{0, 1});
  CHECK(ac.classes[1] == std::vector<Elem>{2, 3});
  CHECK(ac.per_class_product_count[0] == 0);
  CHECK(ac.per_class_product_count[1] == 2);

  // groups are cancellative, so classes are singletons
  ac = action_classes(symmetric_group(3).sg());
  CHECK(ac.class_count() == 6);
  CHECK(ac.discrete());
}

TEST_CASE("skeletons of the documented examples") {
  auto sk = skeleton(null_semigroup(3));
  CHECK(sk.skeleton.order() == 1);
  CHECK(sk.members == std::vector<Elem>{0});

  auto sk_lz = skeleton(left_zero(3));
  CHECK(sk_lz.skeleton.order() == 3);

  // refuter: products {y0, z}, plus the lowest x
  auto sk_s = skeleton(null_refuter_semigroup(1));
  CHECK(sk_s.members == std::vector<Elem>{0, 2, 3});
  CHECK(sk_s.inclusion.kind == MorphismKind::embedding);
}

TEST_CASE("skeleton representative choice only moves the iso class") {
  std::mt19937 rng(5);
  FiniteSemigroup s = direct_product(null_refuter_semigroup(1), null_semigroup(2));
  auto base = skeleton(s);
  auto ac = action_classes(s);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Elem> reps(ac.class_count());
    for (int c = 0; c < ac.class_count(); ++c)
      reps[c] = ac.classes[c][rng() % ac.classes[c].size()];
    auto alt = skeleton(s, reps);
    CHECK(isomorphic(alt.skeleton, base.skeleton).has_value());
  }
}

TEST_CASE("null_factor on the refuter family") {
  FiniteSemigroup s = null_refuter_semigroup(1);
  auto out = null_factor(s, 1);
  REQUIRE(out.refusal.has_value());
  CHECK(out.refusal->class_members == std::vector<Elem>{2, 3});
  CHECK(out.refusal->product_count == 2);

  // s x Null(2): class sizes 6 = 2*3 with 0 and 2 products
  auto some = null_factor(direct_product(s, null_semigroup(2)), 1);
  REQUIRE(some.witness.has_value());
  CHECK(some.witness->left_factor.order() == 6);
  CHECK(some.witness->right_factor.order() == 2);
  CHECK(some.witness->iso.kind == MorphismKind::isomorphism);

  auto trivial_factor = null_factor(null_semigroup(2), 2);
  REQUIRE(trivial_factor.witness.has_value());
  CHECK(trivial_factor.witness->left_factor.order() == 1);

  auto no = null_factor(null_semigroup(2), 1);
  REQUIRE(no.refusal.has_value());

  CHECK_THROWS_AS(null_factor(s, 0), RangeError);
}

TEST_CASE("direct_factor three-valued verdicts") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteSemigroup target = direct_product(z2.sg(), null_semigroup(1));
  auto yes = direct_factor(target, z2.sg(), small_catalog());
  CHECK(yes.verdict == Verdict3::Yes);
  REQUIRE(yes.witness.has_value());
  CHECK(isomorphic(yes.witness->right_factor, null_semigroup(1)).has_value());

  auto no = direct_factor(null_refuter_semigroup(1), null_semigroup(1), small_catalog());
  CHECK(no.verdict == Verdict3::No);

  auto z4_no = direct_factor(cyclic_group(4).sg(), z2.sg(), small_catalog());
  CHECK(z4_no.verdict == Verdict3::No);

  // cofactor order 5 beyond a fly-capped order-4 catalog
  CatalogHandle tight(CatalogMode::up_to_iso_and_anti, false,
                      {{OpTable(1, {0})}}, 1);
  auto unknown = direct_factor(direct_product(z2.sg(), null_semigroup(4)), z2.sg(), tight);
  CHECK(unknown.verdict == Verdict3::Unknown);
}

TEST_CASE("cancellativity flags") {
  auto g = cancellativity(symmetric_group(3).sg());
  CHECK(g.left);
  CHECK(g.right);
  CHECK(g.weak);

  // left zero: a*x = a*y for x != y, but right multiplication is injective
  auto lz = cancellativity(left_zero(2));
  CHECK(!lz.left);
  CHECK(lz.right);
  CHECK(lz.weak);

  auto nul = cancellativity(null_semigroup(1));
  CHECK(!nul.left);
  CHECK(!nul.right);
  CHECK(!nul.weak);
}

TEST_CASE("extend_ideal_hom on the documented examples") {
  // total ideal, identity map
  FiniteGroup z4 = cyclic_group(4);
  Morphism id = extend_ideal_hom(z4.sg(), {0, 1, 2, 3}, z4, {0, 1, 2, 3});
  for (int i = 0; i < 4; ++i) CHECK(id.map[i] == i);

  // Null(1) = {z=0, a=1}, ideal {z}, z -> e in Z2 forces a -> e
  FiniteGroup z2 = cyclic_group(2);
  Morphism ext = extend_ideal_hom(null_semigroup(1), {0}, z2, {0});
  CHECK(ext.map == std::vector<Elem>{0, 0});

  // canonical iso Z2 x Z3 -> Z6 extends to itself
  FiniteSemigroup prod = direct_product(cyclic_group(2).sg(), cyclic_group(3).sg());
  FiniteGroup z6 = cyclic_group(6);
  std::vector<Elem> iso(6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) iso[i * 3 + j] = static_cast<Elem>((3 * i + 2 * j) % 6);
  std::vector<Elem> whole(6);
  std::iota(whole.begin(), whole.end(), 0);
  Morphism ext2 = extend_ideal_hom(prod, whole, z6, iso);
  CHECK(ext2.map == iso);
}

TEST_CASE("extend_ideal_hom rejects non-ideals and non-homs") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  CHECK_THROWS_AS(extend_ideal_hom(z4.sg(), {0}, z2, {0}), NotAnIdealError);
  CHECK_THROWS_AS(extend_ideal_hom(null_semigroup(1), {0}, z2, {1}), NotAHomError);
  try {
    extend_ideal_hom(cyclic_group(4).sg(), {0, 1}, z2, {0, 0});
    FAIL("expected NotAnIdealError");
  } catch (const NotAnIdealError& e) {
    CHECK(e.element >= 0);
  }
}

TEST_CASE("split_product_hom on the documented examples") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteSemigroup z2s = z2.sg();

  // pi(a, b) = a + b
  Morphism sum = make_hom(direct_product(z2s, z2s), z2s, {0, 1, 1, 0});
  auto split = split_product_hom(z2s, z2s, z2, sum);
  CHECK(split.pi_s.map == std::vector<Elem>{0, 1});
  CHECK(split.pi_t.map == std::vector<Elem>{0, 1});

  // projection pi(a, b) = a
  Morphism proj = make_hom(direct_product(z2s, z2s), z2s, {0, 0, 1, 1});
  auto split2 = split_product_hom(z2s, z2s, z2, proj);
  CHECK(split2.pi_s.map == std::vector<Elem>{0, 1});
  CHECK(split2.pi_t.map == std::vector<Elem>{0, 0});

  // canonical iso Z2 x Z3 -> Z6 splits into the coordinate embeddings
  FiniteSemigroup z3s = cyclic_group(3).sg();
  FiniteGroup z6 = cyclic_group(6);
  std::vector<Elem> iso(6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) iso[i * 3 + j] = static_cast<Elem>((3 * i + 2 * j) % 6);
  auto split3 = split_product_hom(z2s, z3s, z6, make_hom(direct_product(z2s, z3s), z6.sg(), iso));
  CHECK(split3.pi_s.map == std::vector<Elem>{0, 3});
  CHECK(split3.pi_t.map == std::vector<Elem>{0, 2, 4});
  // images generate z6
  Elem gen = z6.mul(split3.pi_s.map[1], split3.pi_t.map[1]);
  CHECK(z6.element_order(gen) == 6);
}
