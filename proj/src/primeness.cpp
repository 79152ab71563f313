#include "forge/primeness.hpp"

#include <algorithm>

#include "forge/groups.hpp"
#include "forge/iso.hpp"
#include "forge/structure.hpp"

namespace forge {

const char* to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::tarski_semigroup: return "tarski-semigroup";
    case PrimeKind::tarski_group: return "tarski";
    case PrimeKind::rhodes_direct: return "rhodes-direct";
    case PrimeKind::rhodes_semidirect: return "rhodes-semidirect";
    case PrimeKind::modified_rhodes_direct: return "modified-rhodes-direct";
  }
  return "?";
}

const char* to_string(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::prime: return "prime";
    case PrimeVerdict::not_prime: return "not-prime";
    case PrimeVerdict::unknown_within_bound: return "unknown-within-bound";
  }
  return "?";
}

PrimenessVerdict tarski_prime_group(const FiniteGroup& g, int cap) {
  if (g.order() == 1) throw TrivialInputError("the final object is excluded");
  Decomposition dec = direct_decomposition(g, cap);
  if (dec.factors.size() == 1)
    return {PrimeKind::tarski_group, PrimeVerdict::prime, cert_indecomposable(g), ""};
  return {PrimeKind::tarski_group, PrimeVerdict::not_prime,
          cert_decomposition(g, dec.factors, dec.iso), ""};
}

PrimenessVerdict rhodes_semidirect_prime_group(const FiniteGroup& g) {
  if (g.order() == 1) throw TrivialInputError("the final object is excluded");
  if (is_simple(g))
    return {PrimeKind::rhodes_semidirect, PrimeVerdict::prime, cert_simple(g), ""};
  auto mins = minimal_normal_subgroups(g);
  // a minimal normal subgroup of a nonsimple nontrivial group is proper
  return {PrimeKind::rhodes_semidirect, PrimeVerdict::not_prime,
          cert_normal_witness(g, mins.front().members), ""};
}

PrimenessVerdict modified_rhodes_direct_prime_group(const FiniteGroup& g) {
  if (g.order() == 1) throw TrivialInputError("the final object is excluded");
  auto mins = minimal_normal_subgroups(g);
  if (mins.size() == 1)
    return {PrimeKind::modified_rhodes_direct, PrimeVerdict::prime,
            cert_monolith(g, mins.front().members), ""};
  return {PrimeKind::modified_rhodes_direct, PrimeVerdict::not_prime,
          cert_non_monolithic(g, mins[0].members, mins[1].members), ""};
}

namespace {

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

// Embedding of g into (g/N) x (g/N') for two minimal normal subgroups,
// the Lemma-style witness behind every non-monolithic refusal.
Json non_monolithic_cert_with_embedding(const FiniteGroup& g, const Subgroup& n1,
                                        const Subgroup& n2) {
  auto q1 = quotient(g, n1);
  auto q2 = quotient(g, n2);
  FiniteGroup prod = direct_product(q1.group, q2.group);
  std::vector<Elem> map(g.order());
  for (int x = 0; x < g.order(); ++x)
    map[x] = static_cast<Elem>(q1.coset_of[x] * q2.group.order() + q2.coset_of[x]);
  Morphism emb = make_hom(g.sg(), prod.sg(), std::move(map));
  if (!emb.is_injective()) throw Error("product-of-quotients map is not injective");
  Json cert = cert_non_monolithic(g, n1.members, n2.members);
  cert["data"]["embedding"] = cert_embedding(g.sg(), prod.sg(), emb);
  return cert;
}

}  // namespace

PrimenessVerdict rhodes_direct_prime_group(const FiniteGroup& g,
                                           const std::vector<FiniteGroup>& universe,
                                           int cap) {
  if (g.order() == 1) throw TrivialInputError("the final object is excluded");

  // Stage 1: two minimal normal subgroups refute primeness outright.
  auto mins = minimal_normal_subgroups(g);
  if (mins.size() != 1)
    return {PrimeKind::rhodes_direct, PrimeVerdict::not_prime,
            non_monolithic_cert_with_embedding(g, mins[0], mins[1]), ""};

  // Stage 2: sufficient criteria on the monolith.
  const Subgroup& m = mins.front();
  bool noncommutative = false;
  for (Elem a : m.members)
    for (Elem b : m.members)
      if (g.mul(a, b) != g.mul(b, a)) noncommutative = true;
  if (noncommutative) {
    Json d;
    d["case"] = "noncommutative-monolith";
    d["group"] = table_to_json(g.table());
    d["monolith"] = m.members;
    return {PrimeKind::rhodes_direct, PrimeVerdict::prime,
            Json{{"kind", "rhodes_case"}, {"data", d}}, ""};
  }
  if (auto k = semidirect_complement(g, m, cap)) {
    Json d;
    d["case"] = "split-complement";
    d["group"] = table_to_json(g.table());
    d["monolith"] = m.members;
    d["complement"] = k->members;
    return {PrimeKind::rhodes_direct, PrimeVerdict::prime,
            Json{{"kind", "rhodes_case"}, {"data", d}}, ""};
  }
  if (is_cyclic(g) && is_prime_power(g.order())) {
    Json d;
    d["case"] = "cyclic-prime-power";
    d["group"] = table_to_json(g.table());
    d["monolith"] = m.members;
    return {PrimeKind::rhodes_direct, PrimeVerdict::prime,
            Json{{"kind", "rhodes_case"}, {"data", d}}, ""};
  }

  // Stage 3: bounded counterexample search over universe pairs.
  std::string skipped;
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i; j < universe.size(); ++j) {
      const long long prod_order =
          static_cast<long long>(universe[i].order()) * universe[j].order();
      if (prod_order > cap || prod_order > kDefaultCarrierCap) {
        skipped += (skipped.empty() ? "" : ", ") + std::to_string(i) + "x" +
                   std::to_string(j);
        continue;
      }
      if (prod_order % g.order() != 0) continue;
      FiniteGroup prod = direct_product(universe[i], universe[j]);
      auto w = is_subquotient(g, prod, cap);
      if (!w) continue;
      if (is_subquotient(g, universe[i], cap)) continue;
      if (is_subquotient(g, universe[j], cap)) continue;
      Json d;
      d["group"] = table_to_json(g.table());
      d["g0"] = table_to_json(universe[i].table());
      d["g1"] = table_to_json(universe[j].table());
      d["subquotient"] = cert_subquotient(prod, g, *w);
      return {PrimeKind::rhodes_direct, PrimeVerdict::not_prime,
              Json{{"kind", "rhodes_pair"}, {"data", d}}, ""};
    }

  std::string bound = "universe of " + std::to_string(universe.size()) +
                      " groups, subgroup cap " + std::to_string(cap);
  if (!skipped.empty()) bound += "; skipped pairs beyond caps: " + skipped;
  return {PrimeKind::rhodes_direct, PrimeVerdict::unknown_within_bound,
          cert_exhaustion(bound), bound};
}

PrimenessVerdict tarski_falsify_semigroup(const FiniteSemigroup& x, int max_order,
                                          const CatalogHandle& catalog) {
  if (x.order() == 1) throw TrivialInputError("the final object is excluded");
  if (max_order < x.order()) throw RangeError("max_order below the order of x");

  const bool x_is_null = [&x] {
    for (int i = 0; i < x.order(); ++i)
      for (int j = 0; j < x.order(); ++j)
        if (x.mul(i, j) != x.mul(0, 0)) return false;
    return true;
  }();
  const int x_kappa = x.order() - 1;

  // Replayable claim that x does not divide s.
  auto nondivisibility_cert = [&](const FiniteSemigroup& s) -> Json {
    if (x_is_null) {
      NullFactorOutcome nf = null_factor(s, x_kappa);
      if (nf.refusal) return cert_null_refusal(s, x_kappa, *nf.refusal);
      throw Error("internal: expected a null-factor refusal");
    }
    Json d;
    d["target"] = table_to_json(s.table());
    d["factor"] = table_to_json(x.table());
    return Json{{"kind", "exhaustive_nondivisor"}, {"data", d}};
  };
  auto divides = [&](const FiniteSemigroup& s) -> Verdict3 {
    if (x_is_null) return null_factor(s, x_kappa).divides() ? Verdict3::Yes : Verdict3::No;
    return direct_factor(s, x, catalog).verdict;
  };

  // Candidate targets Y range over products Y0 x Y1 of catalog members
  // with x dividing neither; x | Y0 x Y1 then exhibits Y as x times the
  // division cofactor T, so the pair search is equivalent to iterating
  // the products x * T directly, with a better-bounded universe.
  std::vector<std::string> skipped;
  bool any_reachable = false;

  // per-order candidate cache: the catalog members x does not divide
  std::map<int, std::vector<FiniteSemigroup>> nondivisors;
  auto nondivisors_of = [&](int order) -> const std::vector<FiniteSemigroup>* {
    auto it = nondivisors.find(order);
    if (it != nondivisors.end()) return &it->second;
    const std::vector<OpTable>* tables = catalog.tables_of_order(order);
    if (tables == nullptr) return nullptr;
    std::vector<FiniteSemigroup> out;
    for (const OpTable& t : *tables) {
      FiniteSemigroup s = FiniteSemigroup::trusted(t);
      if (divides(s) == Verdict3::No) out.push_back(std::move(s));
    }
    return &nondivisors.emplace(order, std::move(out)).first->second;
  };

  for (int total = 4; total <= max_order; ++total) {
    if (total % x.order() != 0) continue;  // x | Y forces |x| to divide |Y|
    for (int d = 2; d * d <= total; ++d) {
      if (total % d != 0) continue;
      const int e = total / d;
      const auto* y0s = nondivisors_of(d);
      const auto* y1s = nondivisors_of(e);
      if (y0s == nullptr || y1s == nullptr) {
        skipped.push_back("split " + std::to_string(d) + "x" + std::to_string(e));
        continue;
      }
      any_reachable = true;
      for (const FiniteSemigroup& y0 : *y0s)
        for (const FiniteSemigroup& y1 : *y1s) {
          FiniteSemigroup y = direct_product(y0, y1);
          FiniteSemigroup t = trivial_group().sg();
          Morphism to_xt;  // direct_product(x, t) -> y
          if (x_is_null) {
            NullFactorOutcome nf = null_factor(y, x_kappa);
            if (!nf.witness) continue;
            // witness iso maps T x Null = T x X; swap the coordinates
            t = nf.witness->left_factor;
            const int nx = x.order(), ntt = t.order();
            std::vector<Elem> swapped(static_cast<std::size_t>(y.order()));
            for (int a = 0; a < ntt; ++a)
              for (int b = 0; b < nx; ++b)
                swapped[static_cast<std::size_t>(b) * ntt + a] =
                    nf.witness->iso.map[static_cast<std::size_t>(a) * nx + b];
            to_xt = make_hom(direct_product(x, t), y, std::move(swapped));
          } else {
            DirectFactorResult df = direct_factor(y, x, catalog);
            if (df.verdict == Verdict3::Unknown)
              skipped.push_back("division of order " + std::to_string(total));
            if (df.verdict != Verdict3::Yes) continue;
            t = df.witness->right_factor;
            to_xt = df.witness->iso;
          }
          // certificate iso runs from y0 x y1 onto x x t
          std::vector<Elem> inv(static_cast<std::size_t>(y.order()));
          for (int v = 0; v < y.order(); ++v) inv[to_xt.map[v]] = static_cast<Elem>(v);
          Json d;
          d["x"] = table_to_json(x.table());
          d["t"] = table_to_json(t.table());
          d["y0"] = table_to_json(y0.table());
          d["y1"] = table_to_json(y1.table());
          d["iso"] = inv;
          d["nondiv0"] = nondivisibility_cert(y0);
          d["nondiv1"] = nondivisibility_cert(y1);
          return {PrimeKind::tarski_semigroup, PrimeVerdict::not_prime,
                  Json{{"kind", "tarski_semigroup"}, {"data", d}}, ""};
        }
    }
  }

  if (!any_reachable)
    throw CatalogInsufficientError("no factor split within catalog or enumeration reach");
  std::string bound = "targets x * T up to total order " + std::to_string(max_order) +
                      " via factor pairs from the catalog; catalog max order " +
                      std::to_string(catalog.max_order());
  if (!skipped.empty()) {
    bound += "; unreachable: ";
    for (std::size_t i = 0; i < skipped.size() && i < 8; ++i)
      bound += (i ? ", " : "") + skipped[i];
    if (skipped.size() > 8) bound += ", ...";
  }
  return {PrimeKind::tarski_semigroup, PrimeVerdict::unknown_within_bound,
          cert_exhaustion(bound), bound};
}

AuditReport implication_audit(const std::vector<NamedGroup>& universe,
                              const std::vector<FiniteGroup>& rhodes_universe) {
  AuditReport report;
  for (const NamedGroup& ng : universe) {
    const FiniteGroup& g = ng.group;
    AuditRow row;
    row.name = ng.name;
    row.simple = is_simple(g);
    row.monolithic = minimal_normal_subgroups(g).size() == 1;
    row.tarski_prime = direct_decomposition(g).factors.size() == 1;
    row.rhodes_direct = rhodes_direct_prime_group(g, rhodes_universe).verdict;

    // chain: simple => rhodes-direct => monolithic => tarski
    if (row.simple && row.rhodes_direct == PrimeVerdict::not_prime)
      report.violations.push_back(row.name + ": simple but not rhodes-direct prime");
    if (row.rhodes_direct == PrimeVerdict::prime && !row.monolithic)
      report.violations.push_back(row.name + ": rhodes-direct prime but not monolithic");
    if (row.monolithic && !row.tarski_prime)
      report.violations.push_back(row.name + ": monolithic but not tarski prime");

    if (!row.simple && row.rhodes_direct == PrimeVerdict::prime)
      report.strict_first.push_back(row.name);
    if (row.monolithic && row.rhodes_direct == PrimeVerdict::not_prime)
      report.strict_second.push_back(row.name);
    if (row.tarski_prime && !row.monolithic)
      report.strict_third.push_back(row.name);

    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace forge
