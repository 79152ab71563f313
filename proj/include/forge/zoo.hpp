// Built-in named groups addressable from the CLI, plus the explicit
// constructions used by the bundled verification scenarios.

#ifndef FORGE_ZOO_HPP_
#define FORGE_ZOO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "forge/groups.hpp"
#include "forge/kernel.hpp"

namespace forge {

// The 16-element group <x, y | x^4 = y^4 = e, y x y^-1 = x^-1>, i.e.
// Z4 x| Z4 with y acting by inversion.  Zoo name "A:16".
FiniteGroup a16_group();

// The 2(kappa+1)-element semigroup with elements x_0..x_kappa,
// y_0..y_{kappa-1}, z, where x_i x_j = y_0 and every other product is z.
// Its x-class satisfies the Null(kappa) divisibility condition while the
// {y, z} class (two product elements, kappa+1 members) refuses it.
FiniteSemigroup null_refuter_semigroup(int kappa);

// Central product of two copies of heisenberg_group(p): the quotient of
// Heis(p) x Heis(p) by <(c, c^-1)>, of order p^5.  Zoo name "E5:<p>".
FiniteGroup extraspecial_p5(int p);

// (Z_q0 x Z_q1) x| Z_p where the generator of Z_p acts on each factor by
// the smallest unit of multiplicative order p (the same unit on both
// factors when q0 == q1).  Requires q0, q1 == 1 mod p.
FiniteGroup pqq_group(int p, int q0, int q1);

// Explicit witness that modular_group_p3(p) divides Z_{p^2} x Heis(p):
// the order-p^4 subgroup of pairs whose Z_{p^2} coordinate is congruent
// mod p to the exponent of a, and its central order-p kernel <(p, c^-1)>.
struct ModularP3Witness {
  FiniteGroup ambient;   // direct_product(Z_{p^2}, Heis(p))
  FiniteGroup target;    // modular_group_p3(p)
  SubquotientWitness witness;
};
ModularP3Witness modular_p3_subquotient_witness(int p);

// Name grammar: "Z<n>", "D<n>" (order 2n), "S<n>"/"A<n>" (n <= 6),
// "Q8", "K4", "Heis<p>", "Mod<p>", "A:16", "E5:<p>", "PQQ:<p>:<q0>:<q1>",
// and products joined with 'x' (e.g. "D4xZ3").
std::optional<FiniteGroup> zoo_lookup(const std::string& name);

// Semigroup names: every group name, plus "Null<k>" and "Refuter<k>".
std::optional<FiniteSemigroup> zoo_lookup_semigroup(const std::string& name);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Deterministic list of every built-in zoo group of order <= max_order.
std::vector<NamedGroup> zoo_catalog(int max_order);

}  // namespace forge

#endif  // FORGE_ZOO_HPP_
