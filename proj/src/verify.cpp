#include "forge/verify.hpp"

#include <algorithm>
#include <numeric>

#include "forge/groups.hpp"
#include "forge/iso.hpp"
#include "forge/primeness.hpp"
#include "forge/structure.hpp"
#include "forge/zoo.hpp"

namespace forge {

namespace {

int least_nondivisible(int kappa) {
  for (int n = 1;; ++n)
    if ((n + 1) % (kappa + 1) != 0) return n;
}

}  // namespace

CheckResult verify_null(int kappa) {
  CheckResult out;
  out.id = "null[kappa=" + std::to_string(kappa) + "]";
  FiniteSemigroup s = null_refuter_semigroup(kappa);
  const int n = least_nondivisible(kappa);
  out.details.push_back("witness order " + std::to_string(s.order()) + ", n = " +
                        std::to_string(n));

  auto s_refusal = null_factor(s, kappa);
  out.require(s_refusal.refusal.has_value(), "Null(kappa) does not divide the witness");
  if (s_refusal.refusal)
    out.certificates.push_back(cert_null_refusal(s, kappa, *s_refusal.refusal));

  FiniteSemigroup null_n = null_semigroup(n);
  auto n_refusal = null_factor(null_n, kappa);
  out.require(n_refusal.refusal.has_value(), "Null(kappa) does not divide Null(n)");
  if (n_refusal.refusal)
    out.certificates.push_back(cert_null_refusal(null_n, kappa, *n_refusal.refusal));

  FiniteSemigroup prod = direct_product(s, null_n);
  auto witness = null_factor(prod, kappa);
  out.require(witness.witness.has_value(), "Null(kappa) divides witness x Null(n)");
  if (witness.witness)
    out.certificates.push_back(cert_factorization(prod, *witness.witness));
  return out;
}

CheckResult verify_s3() {
  CheckResult out;
  out.id = "S3";
  std::vector<std::pair<std::string, FiniteGroup>> cases;
  cases.emplace_back("S3", symmetric_group(3));
  cases.emplace_back("S4", symmetric_group(4));
  cases.emplace_back("Z4", cyclic_group(4));
  cases.emplace_back("Z9", cyclic_group(9));
  {
    // Z5 x| Z4 with the full automorphism action (2 has order 4 mod 5)
    Action action(4, std::vector<Elem>(5));
    for (int j = 0; j < 4; ++j) {
      int m = 1;
      for (int i = 0; i < j; ++i) m = (m * 2) % 5;
      for (int x = 0; x < 5; ++x) action[j][x] = static_cast<Elem>(x * m % 5);
    }
    cases.emplace_back("Z5:Z4", semidirect_product(cyclic_group(5), cyclic_group(4), action));
  }
  for (auto& [name, g] : cases) {
    PrimenessVerdict direct = rhodes_direct_prime_group(g, {});
    out.require(direct.verdict == PrimeVerdict::prime,
                name + " prime for direct-product subquotients (" +
                    direct.certificate.at("data").value("case", "?") + ")");
    out.certificates.push_back(direct.certificate);
    PrimenessVerdict semi = rhodes_semidirect_prime_group(g);
    out.require(semi.verdict == PrimeVerdict::not_prime,
                name + " not prime for semidirect-product subquotients");
    out.certificates.push_back(semi.certificate);
  }
  return out;
}

CheckResult verify_p5(int p) {
  CheckResult out;
  out.id = "p5[p=" + std::to_string(p) + "]";
  if (p != 2 && p != 3) {
    out.require(false, "p must be 2 or 3 (the square of Heis(p) must fit the carrier cap)");
    return out;
  }
  FiniteGroup h = heisenberg_group(p);
  FiniteGroup hh = direct_product(h, h);
  const HeisenbergGens gens = heisenberg_gens(p);
  const Elem line_gen = static_cast<Elem>(gens.c * h.order() + h.inv(gens.c));
  Bitset line = subgroup_closure(hh, {line_gen});
  Subgroup line_sub;
  line_sub.members = line.members();
  line_sub.bits = line;
  line_sub.normal = true;
  line_sub.index = hh.order() / line.count();
  auto qr = quotient(hh, line_sub);
  const FiniteGroup& g = qr.group;

  out.require(g.order() == p * p * p * p * p, "quotient has order p^5");

  auto mono = monolith(g);
  out.require(mono.has_value(), "quotient is monolithic");
  if (mono) {
    const Elem c_left = qr.coset_of[gens.c * h.order() + h.identity()];
    const Elem c_right = qr.coset_of[h.identity() * h.order() + gens.c];
    out.require(c_left == c_right, "images of (c, I) and (I, c) agree");
    Bitset m = subgroup_closure(g, {c_left});
    out.require(mono->members == m.members(), "monolith is generated by the image of (c, I)");
    out.require(mono->order() == p, "monolith has order p");
    out.certificates.push_back(cert_monolith(g, mono->members));
  }

  // subquotient of H x H by construction: subgroup = all of H x H,
  // kernel = the identified central line
  Subgroup whole;
  whole.members.resize(hh.order());
  std::iota(whole.members.begin(), whole.members.end(), 0);
  whole.bits = Bitset(hh.order());
  for (Elem x : whole.members) whole.bits.set(x);
  whole.normal = true;
  whole.index = 1;
  SubquotientWitness w{whole, line_sub, make_hom(g.sg(), g.sg(), [&] {
                         std::vector<Elem> id(g.order());
                         std::iota(id.begin(), id.end(), 0);
                         return id;
                       }())};
  out.certificates.push_back(cert_subquotient(hh, g, w));
  out.require(recheck_certificate(out.certificates.back()).ok,
              "constructed subquotient witness replays");

  if (p == 2) {
    auto found = is_subquotient(g, hh);
    out.require(found.has_value(), "search also finds the quotient inside H x H");
  }
  out.require(!is_subquotient(g, h).has_value(), "quotient is not a subquotient of H");
  return out;
}

CheckResult verify_q8d4() {
  CheckResult out;
  out.id = "Q8D4";
  FiniteGroup a = a16_group();
  FiniteGroup q8 = quaternion_group();
  FiniteGroup d4 = dihedral_group(4);

  struct Side {
    std::string name;
    FiniteGroup big;      // Q8^2 or D4^2
    Elem x, y;            // generator images
    const FiniteGroup* onto;
  };
  // Q8: x = (i, 1), y = (j, j); D4: x = (p, 1), y = (q, p)
  std::vector<Side> sides;
  sides.push_back({"Q8", direct_product(q8, q8), static_cast<Elem>(2 * 8 + 0),
                   static_cast<Elem>(4 * 8 + 4), &q8});
  sides.push_back({"D4", direct_product(d4, d4), static_cast<Elem>(1 * 8 + 0),
                   static_cast<Elem>(4 * 8 + 1), &d4});

  for (const auto& side : sides) {
    Bitset image = subgroup_closure(side.big, {side.x, side.y});
    out.require(image.count() == 16, "generated subgroup of " + side.name +
                                         "^2 has order 16");
    auto sub = subgroup_group(side.big, image.members());
    auto iso = isomorphic(a.sg(), sub.group.sg());
    out.require(iso.has_value(), "generated subgroup of " + side.name + "^2 is A:16");
    if (!iso) continue;
    std::vector<Elem> emb(a.order());
    for (int v = 0; v < a.order(); ++v) emb[v] = sub.members[iso->map[v]];
    Morphism embedding = make_hom(a.sg(), side.big.sg(), emb);
    out.require(embedding.is_injective(), "A:16 embeds in " + side.name + "^2");
    out.certificates.push_back(cert_embedding(a.sg(), side.big.sg(), embedding));

    // projection to the first coordinate maps A:16 onto the factor
    std::vector<Elem> onto(a.order());
    for (int v = 0; v < a.order(); ++v) onto[v] = static_cast<Elem>(emb[v] / 8);
    Morphism surj = make_hom(a.sg(), side.onto->sg(), onto);
    out.require(surj.is_surjective(), "A:16 maps onto " + side.name);
    out.certificates.push_back(cert_surjection(a.sg(), side.onto->sg(), surj));
  }

  out.require(!is_subquotient(q8, d4).has_value(), "Q8 is not a subquotient of D4");
  out.require(!is_subquotient(d4, q8).has_value(), "D4 is not a subquotient of Q8");

  auto mq = monolith(q8);
  out.require(mq && mq->members == std::vector<Elem>{0, 1}, "monolith of Q8 is {1, -1}");
  if (mq) out.certificates.push_back(cert_monolith(q8, mq->members));
  auto md = monolith(d4);
  out.require(md && md->members == std::vector<Elem>{0, 2},
              "monolith of D4 is {e, p^2}");
  if (md) out.certificates.push_back(cert_monolith(d4, md->members));
  return out;
}

CheckResult verify_zpzp2(int p) {
  CheckResult out;
  out.id = "ZpZp2[p=" + std::to_string(p) + "]";
  if (p != 3 && p != 5) {
    out.require(false, "p must be an odd prime in {3, 5}");
    return out;
  }
  ModularP3Witness w = modular_p3_subquotient_witness(p);
  out.require(w.witness.subgroup.order() == p * p * p * p,
              "explicit subgroup has order p^4");
  out.require(w.witness.kernel.order() == p, "kernel has order p");
  Json cert = cert_subquotient(w.ambient, w.target, w.witness);
  out.certificates.push_back(cert);
  out.require(recheck_certificate(cert).ok, "explicit subquotient witness replays");

  FiniteGroup zp2 = cyclic_group(p * p);
  FiniteGroup h = heisenberg_group(p);
  out.require(!is_subquotient(w.target, zp2).has_value(),
              "target is not a subquotient of Z_{p^2}");
  out.require(!is_subquotient(w.target, h).has_value(),
              "target is not a subquotient of Heis(p)");
  return out;
}

CheckResult verify_pq1q2(int p, int q0, int q1) {
  CheckResult out;
  out.id = "pq1q2[" + std::to_string(p) + "," + std::to_string(q0) + "," +
           std::to_string(q1) + "]";
  FiniteGroup g = pqq_group(p, q0, q1);
  out.require(g.order() == p * q0 * q1, "group has order p*q0*q1");

  PrimenessVerdict tarski = tarski_prime_group(g);
  out.require(tarski.verdict == PrimeVerdict::prime, "directly indecomposable");
  out.certificates.push_back(tarski.certificate);

  auto mins = minimal_normal_subgroups(g);
  out.require(mins.size() >= 2, "not monolithic");
  if (mins.size() >= 2) {
    out.certificates.push_back(cert_non_monolithic(g, mins[0].members, mins[1].members));
    PrimenessVerdict modified = modified_rhodes_direct_prime_group(g);
    out.require(modified.verdict == PrimeVerdict::not_prime,
                "not modified-rhodes prime");
  }
  if (q0 == q1)
    out.require(static_cast<int>(mins.size()) == q0 + 1,
                "exactly q0+1 minimal normal subgroups");
  else
    out.require(mins.size() == 2, "exactly two minimal normal subgroups");
  return out;
}

CheckResult verify_audit(int max_order) {
  CheckResult out;
  out.id = "audit[<=" + std::to_string(max_order) + "]";
  std::vector<FiniteGroup> rhodes_universe{dihedral_group(4), quaternion_group(),
                                           heisenberg_group(2)};
  AuditReport report = implication_audit(zoo_catalog(max_order), rhodes_universe);
  out.require(report.violations.empty(), "no implication violations over " +
                                             std::to_string(report.rows.size()) +
                                             " groups");
  for (const auto& v : report.violations) out.details.push_back("violation: " + v);

  auto found = [](const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  out.require(found(report.strict_first, "S3") || found(report.strict_first, "Z4"),
              "first implication strictness witness (S3 or Z4)");
  out.require(found(report.strict_second, "Q8") && found(report.strict_second, "D4"),
              "second implication strictness witnesses (Q8 and D4)");
  out.require(found(report.strict_third, "D15") || found(report.strict_third, "PQQ:2:3:5"),
              "third implication strictness witness (order-30 dihedral)");
  return out;
}

std::vector<CheckResult> verify_paper(const std::vector<std::string>& only, int p,
                                      int kappa) {
  auto wanted = [&only](const std::string& id) {
    if (only.empty()) return true;
    return std::find(only.begin(), only.end(), id) != only.end();
  };
  std::vector<CheckResult> out;
  if (wanted("null")) {
    if (kappa > 0) out.push_back(verify_null(kappa));
    else
      for (int k = 1; k <= 3; ++k) out.push_back(verify_null(k));
  }
  if (wanted("S3")) out.push_back(verify_s3());
  if (wanted("p5")) out.push_back(verify_p5(p == 0 ? 2 : p));
  if (wanted("Q8D4")) out.push_back(verify_q8d4());
  if (wanted("ZpZp2")) {
    const int pp = p == 0 ? 3 : p;
    if (pp % 2 == 0) {
      CheckResult bad;
      bad.id = "ZpZp2";
      bad.require(false, "requires an odd prime");
      out.push_back(bad);
    } else {
      out.push_back(verify_zpzp2(pp));
    }
  }
  if (wanted("pq1q2")) {
    out.push_back(verify_pq1q2(2, 3, 5));
    out.push_back(verify_pq1q2(3, 7, 7));
  }
  if (wanted("audit")) out.push_back(verify_audit(32));
  return out;
}

}  // namespace forge
