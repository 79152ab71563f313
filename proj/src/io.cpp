#include "forge/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "forge/enumeration.hpp"

namespace forge {

Json table_to_json(const OpTable& t) {
  Json j;
  j["order"] = t.order;
  j["table"] = t.table;
  if (!t.names.empty()) j["names"] = t.names;
  return j;
}

OpTable table_from_json(const Json& j) {
  OpTable t;
  t.order = j.at("order").get<int>();
  const auto raw = j.at("table").get<std::vector<long long>>();
  t.table.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0 || v > 0xFFFF) throw MalformedTableError("table entry out of range");
    t.table.push_back(static_cast<Elem>(v));
  }
  if (j.contains("names")) t.names = j.at("names").get<std::vector<std::string>>();
  t.check_well_formed();
  return t;
}

OpTable parse_table_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n < 1) throw MalformedTableError("bad order line");
  OpTable t;
  t.order = n;
  t.table.reserve(static_cast<std::size_t>(n) * n);
  long long v = 0;
  for (int i = 0; i < n * n; ++i) {
    if (!(in >> v)) throw MalformedTableError("table has too few entries");
    if (v < 0 || v > 0xFFFF) throw MalformedTableError("table entry out of range");
    t.table.push_back(static_cast<Elem>(v));
  }
  t.check_well_formed();
  return t;
}

std::string table_to_text(const OpTable& t) {
  std::ostringstream out;
  out << t.order << "\n";
  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j) out << (j ? " " : "") << static_cast<int>(t.at(i, j));
    out << "\n";
  }
  return out.str();
}

OpTable read_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw MalformedTableError("empty table file");
  if (text[first] == '{') {
    try {
      return table_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw MalformedTableError(std::string("bad JSON table: ") + e.what());
    }
  }
  return parse_table_text(text);
}

Json morphism_to_json(const Morphism& m) {
  Json j;
  j["domain_order"] = m.domain_order;
  j["codomain_order"] = m.codomain_order;
  j["map"] = m.map;
  j["kind"] = to_string(m.kind);
  if (!m.total()) j["domain_subset"] = m.domain_subset;
  return j;
}

Morphism morphism_from_json(const Json& j) {
  Morphism m;
  m.domain_order = j.at("domain_order").get<int>();
  m.codomain_order = j.at("codomain_order").get<int>();
  for (long long v : j.at("map").get<std::vector<long long>>())
    m.map.push_back(static_cast<Elem>(v));
  if (j.contains("domain_subset"))
    for (long long v : j.at("domain_subset").get<std::vector<long long>>())
      m.domain_subset.push_back(static_cast<Elem>(v));
  const std::string kind = j.value("kind", "hom");
  if (kind == "embedding") m.kind = MorphismKind::embedding;
  else if (kind == "surjection") m.kind = MorphismKind::surjection;
  else if (kind == "isomorphism") m.kind = MorphismKind::isomorphism;
  else if (kind == "anti-isomorphism") m.kind = MorphismKind::anti_isomorphism;
  else m.kind = MorphismKind::hom;
  return m;
}

namespace {

std::vector<Elem> elems_from_json(const Json& j) {
  std::vector<Elem> out;
  for (long long v : j.get<std::vector<long long>>()) out.push_back(static_cast<Elem>(v));
  return out;
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Elem> members,
                               bool normal_flag) {
  Subgroup s;
  std::sort(members.begin(), members.end());
  s.members = std::move(members);
  s.bits = Bitset(g.order());
  for (Elem x : s.members) s.bits.set(x);
  s.normal = normal_flag;
  s.index = g.order() / static_cast<int>(s.members.size());
  return s;
}

}  // namespace

Json cert_factorization(const FiniteSemigroup& target, const FactorWitness& w) {
  Json d;
  d["target"] = table_to_json(target.table());
  d["left"] = table_to_json(w.left_factor.table());
  d["right"] = table_to_json(w.right_factor.table());
  d["iso"] = w.iso.map;
  return Json{{"kind", "factorization"}, {"data", d}};
}

Json cert_null_refusal(const FiniteSemigroup& target, int kappa,
                       const NullFactorRefusal& r) {
  Json d;
  d["target"] = table_to_json(target.table());
  d["kappa"] = kappa;
  d["class_members"] = r.class_members;
  d["product_count"] = r.product_count;
  d["reason"] = r.reason;
  return Json{{"kind", "refusal"}, {"data", d}};
}

Json cert_embedding(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                    const Morphism& m) {
  Json d;
  d["domain"] = table_to_json(dom.table());
  d["codomain"] = table_to_json(cod.table());
  d["map"] = m.map;
  return Json{{"kind", "embedding"}, {"data", d}};
}

Json cert_surjection(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                     const Morphism& m) {
  Json d;
  d["domain"] = table_to_json(dom.table());
  d["codomain"] = table_to_json(cod.table());
  d["map"] = m.map;
  return Json{{"kind", "surjection"}, {"data", d}};
}

Json cert_subquotient(const FiniteGroup& ambient, const FiniteGroup& target,
                      const SubquotientWitness& w) {
  Json d;
  d["ambient"] = table_to_json(ambient.table());
  d["target"] = table_to_json(target.table());
  d["subgroup"] = w.subgroup.members;
  d["kernel"] = w.kernel.members;
  d["iso"] = w.iso.map;
  return Json{{"kind", "subquotient"}, {"data", d}};
}

Json cert_decomposition(const FiniteGroup& g, const std::vector<FiniteGroup>& factors,
                        const Morphism& iso) {
  Json d;
  d["group"] = table_to_json(g.table());
  Json fs = Json::array();
  for (const auto& f : factors) fs.push_back(table_to_json(f.table()));
  d["factors"] = fs;
  d["iso"] = iso.map;
  return Json{{"kind", "decomposition"}, {"data", d}};
}

Json cert_indecomposable(const FiniteGroup& g) {
  return Json{{"kind", "indecomposable"}, {"data", Json{{"group", table_to_json(g.table())}}}};
}

Json cert_simple(const FiniteGroup& g) {
  return Json{{"kind", "simple"}, {"data", Json{{"group", table_to_json(g.table())}}}};
}

Json cert_normal_witness(const FiniteGroup& g, const std::vector<Elem>& members) {
  Json d;
  d["group"] = table_to_json(g.table());
  d["members"] = members;
  return Json{{"kind", "normal_witness"}, {"data", d}};
}

Json cert_monolith(const FiniteGroup& g, const std::vector<Elem>& members) {
  Json d;
  d["group"] = table_to_json(g.table());
  d["members"] = members;
  return Json{{"kind", "monolith"}, {"data", d}};
}

Json cert_non_monolithic(const FiniteGroup& g, const std::vector<Elem>& n1,
                         const std::vector<Elem>& n2) {
  Json d;
  d["group"] = table_to_json(g.table());
  d["n1"] = n1;
  d["n2"] = n2;
  return Json{{"kind", "non_monolithic"}, {"data", d}};
}

Json cert_exhaustion(const std::string& description) {
  return Json{{"kind", "exhaustion"}, {"data", Json{{"description", description}}}};
}

namespace {

FiniteSemigroup semigroup_from(const Json& j) {
  return FiniteSemigroup::validate(table_from_json(j));
}

FiniteGroup group_from(const Json& j) {
  return FiniteGroup::from_table(table_from_json(j));
}

// N is minimal normal iff the normal closure of each nonidentity member
// is N itself.
bool is_minimal_normal(const FiniteGroup& g, const Bitset& n) {
  if (n.count() <= 1) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!n.test(x) || x == g.identity()) continue;
    if (!(normal_closure(g, static_cast<Elem>(x)) == n)) return false;
  }
  return true;
}

void recheck_one(const Json& cert, RecheckResult& res) {
  const std::string kind = cert.at("kind").get<std::string>();
  const Json& d = cert.at("data");
  if (kind == "factorization") {
    FiniteSemigroup target = semigroup_from(d.at("target"));
    FiniteSemigroup left = semigroup_from(d.at("left"));
    FiniteSemigroup right = semigroup_from(d.at("right"));
    Morphism iso =
        make_hom(direct_product(left, right), target, elems_from_json(d.at("iso")));
    if (iso.kind != MorphismKind::isomorphism)
      res.fail("factorization witness map is not an isomorphism");
  } else if (kind == "refusal") {
    FiniteSemigroup target = semigroup_from(d.at("target"));
    const int kappa = d.at("kappa").get<int>();
    const auto members = elems_from_json(d.at("class_members"));
    const auto ac = action_classes(target);
    bool found = false;
    for (int c = 0; c < ac.class_count(); ++c) {
      if (ac.classes[c] != members) continue;
      found = true;
      const int size = static_cast<int>(members.size());
      if (ac.per_class_product_count[c] != d.at("product_count").get<int>())
        res.fail("refusal product count mismatch");
      if (size % (kappa + 1) == 0 && size / (kappa + 1) >= ac.per_class_product_count[c])
        res.fail("named class does not violate the divisibility condition");
    }
    if (!found) res.fail("named class is not an action class of the target");
  } else if (kind == "embedding" || kind == "surjection") {
    FiniteSemigroup dom = semigroup_from(d.at("domain"));
    FiniteSemigroup cod = semigroup_from(d.at("codomain"));
    Morphism m = make_hom(dom, cod, elems_from_json(d.at("map")));
    if (kind == "embedding" && !m.is_injective()) res.fail("map is not injective");
    if (kind == "surjection" && !m.is_surjective()) res.fail("map is not surjective");
  } else if (kind == "subquotient") {
    FiniteGroup ambient = group_from(d.at("ambient"));
    FiniteGroup target = group_from(d.at("target"));
    auto kg = subgroup_group(ambient, elems_from_json(d.at("subgroup")));
    std::vector<int> local(ambient.order(), -1);
    for (int i = 0; i < kg.group.order(); ++i) local[kg.members[i]] = i;
    std::vector<Elem> kernel_local;
    for (Elem x : elems_from_json(d.at("kernel"))) {
      if (local[x] < 0) {
        res.fail("kernel not contained in the subgroup");
        return;
      }
      kernel_local.push_back(static_cast<Elem>(local[x]));
    }
    auto ker = subgroup_from_members(kg.group, kernel_local, true);
    auto qr = quotient(kg.group, ker);
    Morphism iso = make_hom(qr.group.sg(), target.sg(), elems_from_json(d.at("iso")));
    if (iso.kind != MorphismKind::isomorphism)
      res.fail("subquotient witness map is not an isomorphism");
  } else if (kind == "decomposition") {
    FiniteGroup g = group_from(d.at("group"));
    std::vector<FiniteGroup> factors;
    for (const auto& fj : d.at("factors")) factors.push_back(group_from(fj));
    if (factors.size() < 2) res.fail("decomposition must have at least two factors");
    for (const auto& f : factors)
      if (f.order() <= 1) res.fail("decomposition factor is trivial");
    FiniteGroup prod = fold_direct_product(factors);
    Morphism iso = make_hom(prod.sg(), g.sg(), elems_from_json(d.at("iso")));
    if (iso.kind != MorphismKind::isomorphism)
      res.fail("decomposition witness map is not an isomorphism");
  } else if (kind == "indecomposable") {
    FiniteGroup g = group_from(d.at("group"));
    if (direct_decomposition(g).factors.size() != 1)
      res.fail("group decomposes although claimed indecomposable");
  } else if (kind == "simple") {
    if (!is_simple(group_from(d.at("group")))) res.fail("group is not simple");
  } else if (kind == "normal_witness") {
    FiniteGroup g = group_from(d.at("group"));
    auto members = elems_from_json(d.at("members"));
    auto sub = subgroup_from_members(g, members, true);
    subgroup_group(g, sub.members);  // closure check
    if (sub.order() <= 1 || sub.order() >= g.order())
      res.fail("normal witness must be proper and nontrivial");
    for (Elem x : sub.members)
      if (!normal_closure(g, x).subset_of(sub.bits)) {
        res.fail("witness subgroup is not normal");
        break;
      }
  } else if (kind == "monolith") {
    FiniteGroup g = group_from(d.at("group"));
    auto mins = minimal_normal_subgroups(g);
    if (mins.size() != 1 || mins.front().members != elems_from_json(d.at("members")))
      res.fail("claimed monolith is not the unique minimal normal subgroup");
  } else if (kind == "non_monolithic") {
    FiniteGroup g = group_from(d.at("group"));
    auto n1 = subgroup_from_members(g, elems_from_json(d.at("n1")), true);
    auto n2 = subgroup_from_members(g, elems_from_json(d.at("n2")), true);
    if (n1.members == n2.members) res.fail("witness subgroups must be distinct");
    if (n1.order() <= 1 || n2.order() <= 1) res.fail("witness subgroups must be nontrivial");
    if (n1.bits.intersect(n2.bits).count() != 1)
      res.fail("witness subgroups must intersect trivially");
    if (!is_minimal_normal(g, n1.bits) || !is_minimal_normal(g, n2.bits))
      res.fail("witness subgroups must be minimal normal subgroups");
    if (d.contains("embedding")) {
      RecheckResult inner = recheck_certificate(d.at("embedding"));
      if (!inner.ok) {
        res.fail("embedded product-of-quotients certificate fails");
        for (const auto& m : inner.messages) res.messages.push_back("  " + m);
      }
    }
  } else if (kind == "rhodes_case") {
    FiniteGroup g = group_from(d.at("group"));
    auto mono = monolith(g);
    if (!mono || mono->members != elems_from_json(d.at("monolith"))) {
      res.fail("claimed monolith does not match");
      return;
    }
    const std::string c = d.at("case").get<std::string>();
    if (c == "noncommutative-monolith") {
      bool noncomm = false;
      for (Elem a : mono->members)
        for (Elem b : mono->members)
          if (g.mul(a, b) != g.mul(b, a)) noncomm = true;
      if (!noncomm) res.fail("monolith is commutative");
    } else if (c == "split-complement") {
      auto k = subgroup_from_members(g, elems_from_json(d.at("complement")), false);
      subgroup_group(g, k.members);  // closure check
      if (k.order() * mono->order() != g.order() ||
          k.bits.intersect(mono->bits).count() != 1)
        res.fail("complement fails the semidirect conditions");
    } else if (c == "cyclic-prime-power") {
      bool cyclic = false;
      for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) cyclic = true;
      int n = g.order();
      int p = 2;
      while (p <= n && n % p != 0) ++p;
      while (n % p == 0) n /= p;
      if (!cyclic || n != 1) res.fail("group is not cyclic of prime-power order");
    } else {
      res.fail("unknown rhodes case " + c);
    }
  } else if (kind == "rhodes_pair") {
    FiniteGroup g = group_from(d.at("group"));
    FiniteGroup g0 = group_from(d.at("g0"));
    FiniteGroup g1 = group_from(d.at("g1"));
    RecheckResult inner = recheck_certificate(d.at("subquotient"));
    if (!inner.ok) {
      res.fail("embedded subquotient certificate fails");
      for (const auto& m : inner.messages) res.messages.push_back("  " + m);
    }
    if (is_subquotient(g, g0)) res.fail("group is a subquotient of the first factor");
    if (is_subquotient(g, g1)) res.fail("group is a subquotient of the second factor");
  } else if (kind == "tarski_semigroup") {
    FiniteSemigroup x = semigroup_from(d.at("x"));
    FiniteSemigroup t = semigroup_from(d.at("t"));
    FiniteSemigroup y0 = semigroup_from(d.at("y0"));
    FiniteSemigroup y1 = semigroup_from(d.at("y1"));
    FiniteSemigroup y = direct_product(x, t);
    Morphism iso = make_hom(direct_product(y0, y1), y, elems_from_json(d.at("iso")));
    if (iso.kind != MorphismKind::isomorphism)
      res.fail("counterexample factorization map is not an isomorphism");
    RecheckResult r0 = recheck_certificate(d.at("nondiv0"));
    RecheckResult r1 = recheck_certificate(d.at("nondiv1"));
    if (!r0.ok || !r1.ok) {
      res.fail("non-divisibility sub-certificate fails");
      for (const auto& m : r0.messages) res.messages.push_back("  " + m);
      for (const auto& m : r1.messages) res.messages.push_back("  " + m);
    }
  } else if (kind == "exhaustive_nondivisor") {
    FiniteSemigroup target = semigroup_from(d.at("target"));
    FiniteSemigroup factor = semigroup_from(d.at("factor"));
    CatalogHandle fresh = enumerate_semigroups(1, CatalogMode::up_to_iso_and_anti);
    DirectFactorResult r = direct_factor(target, factor, fresh);
    if (r.verdict != Verdict3::No) res.fail("replayed factor search did not return no");
  } else if (kind == "exhaustion") {
    if (!d.contains("description") || d.at("description").get<std::string>().empty())
      res.fail("exhaustion record must name its bound");
  } else {
    res.fail("unknown certificate kind " + kind);
  }
}

}  // namespace

RecheckResult recheck_certificate(const Json& cert) {
  RecheckResult res;
  try {
    recheck_one(cert, res);
  } catch (const std::exception& e) {
    res.fail(std::string("recheck raised: ") + e.what());
  }
  return res;
}

RecheckResult recheck_report(const Json& report) {
  RecheckResult res;
  if (!report.contains("certificates") || !report.at("certificates").is_array()) {
    res.fail("report has no certificates array");
    return res;
  }
  int idx = 0;
  for (const auto& cert : report.at("certificates")) {
    RecheckResult one = recheck_certificate(cert);
    if (!one.ok) {
      res.ok = false;
      res.messages.push_back("certificate " + std::to_string(idx) + " fails");
      for (const auto& m : one.messages) res.messages.push_back("  " + m);
    }
    ++idx;
  }
  return res;
}

}  // namespace forge
