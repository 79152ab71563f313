#include "forge/zoo.hpp"

#include <algorithm>
#include <charconv>

#include "forge/iso.hpp"

namespace forge {

FiniteSemigroup null_refuter_semigroup(int kappa) {
  if (kappa < 1) throw RangeError("needs kappa >= 1");
  const int n = 2 * (kappa + 1);
  const Elem y0 = static_cast<Elem>(kappa + 1), z = static_cast<Elem>(n - 1);
  OpTable t(n, std::vector<Elem>(static_cast<std::size_t>(n) * n, z));
  for (int i = 0; i <= kappa; ++i)
    for (int j = 0; j <= kappa; ++j) t.at(i, j) = y0;
  return FiniteSemigroup::validate(std::move(t));
}

FiniteGroup a16_group() {
  FiniteGroup z4 = cyclic_group(4);
  Action action(4, std::vector<Elem>(4));
  for (int j = 0; j < 4; ++j)
    for (int x = 0; x < 4; ++x)
      action[j][x] = static_cast<Elem>(j % 2 ? (4 - x) % 4 : x);
  return semidirect_product(z4, z4, action);
}

FiniteGroup extraspecial_p5(int p) {
  FiniteGroup h = heisenberg_group(p);
  FiniteGroup hh = direct_product(h, h);
  const HeisenbergGens gens = heisenberg_gens(p);
  const Elem cc = static_cast<Elem>(gens.c * h.order() + h.inv(gens.c));
  Bitset z = subgroup_closure(hh, {cc});
  Subgroup center_line;
  center_line.members = z.members();
  center_line.bits = z;
  center_line.normal = true;  // generated by a central element
  center_line.index = hh.order() / z.count();
  return quotient(hh, center_line).group;
}

namespace {

int unit_of_order(int p, int q) {
  for (int u = 2; u < q; ++u) {
    int pw = u, ord = 1;
    while (pw != 1) {
      pw = (pw * u) % q;
      ++ord;
    }
    if (ord == p) return u;
  }
  throw RangeError("no unit of order " + std::to_string(p) + " mod " + std::to_string(q));
}

}  // namespace

FiniteGroup pqq_group(int p, int q0, int q1) {
  if (q0 % p != 1 || q1 % p != 1)
    throw RangeError("requires q0, q1 congruent to 1 mod p");
  const int u0 = unit_of_order(p, q0);
  const int u1 = q0 == q1 ? u0 : unit_of_order(p, q1);
  FiniteGroup n = direct_product(cyclic_group(q0), cyclic_group(q1));
  Action action(p, std::vector<Elem>(n.order()));
  for (int j = 0; j < p; ++j) {
    long long m0 = 1, m1 = 1;
    for (int i = 0; i < j; ++i) {
      m0 = (m0 * u0) % q0;
      m1 = (m1 * u1) % q1;
    }
    for (int a = 0; a < q0; ++a)
      for (int b = 0; b < q1; ++b)
        action[j][a * q1 + b] =
            static_cast<Elem>((a * m0 % q0) * q1 + (b * m1 % q1));
  }
  return semidirect_product(n, cyclic_group(p), action);
}

ModularP3Witness modular_p3_subquotient_witness(int p) {
  FiniteGroup zp2 = cyclic_group(p * p);
  FiniteGroup h = heisenberg_group(p);
  FiniteGroup ambient = direct_product(zp2, h);
  const int nh = h.order();

  // pairs (u, (i,j,k)) with u = i mod p; the a-exponent i is the leading
  // base-p digit of the heisenberg index.
  std::vector<Elem> members;
  for (int u = 0; u < p * p; ++u)
    for (int x = 0; x < nh; ++x)
      if (u % p == x / (p * p)) members.push_back(static_cast<Elem>(u * nh + x));

  Subgroup k;
  k.members = members;
  k.bits = Bitset(ambient.order());
  for (Elem x : members) k.bits.set(x);
  k.normal = false;
  k.index = ambient.order() / static_cast<int>(members.size());

  auto kg = subgroup_group(ambient, members);
  std::vector<int> local(ambient.order(), -1);
  for (int i = 0; i < kg.group.order(); ++i) local[kg.members[i]] = i;

  // kernel <(p, c^-1)>, central of order p
  const HeisenbergGens gens = heisenberg_gens(p);
  const Elem gen = static_cast<Elem>(p * nh + h.inv(gens.c));
  Bitset ker_local = subgroup_closure(kg.group, {static_cast<Elem>(local[gen])});
  Subgroup ker;
  ker.members = ker_local.members();
  ker.bits = ker_local;
  ker.normal = true;
  ker.index = kg.group.order() / ker_local.count();

  auto qr = quotient(kg.group, ker);
  FiniteGroup target = modular_group_p3(p);
  auto iso = isomorphic(qr.group.sg(), target.sg());
  if (!iso) throw Error("explicit subquotient does not match the target group");

  Subgroup ker_ambient;
  ker_ambient.members.reserve(ker.members.size());
  for (Elem x : ker.members) ker_ambient.members.push_back(kg.members[x]);
  std::sort(ker_ambient.members.begin(), ker_ambient.members.end());
  ker_ambient.bits = Bitset(ambient.order());
  for (Elem x : ker_ambient.members) ker_ambient.bits.set(x);
  ker_ambient.normal = true;
  ker_ambient.index = k.order() / static_cast<int>(ker.members.size());

  return ModularP3Witness{std::move(ambient), std::move(target),
                          SubquotientWitness{std::move(k), std::move(ker_ambient),
                                             std::move(*iso)}};
}

namespace {

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<FiniteGroup> atom_lookup(const std::string& name) {
  try {
    if (name == "Q8") return quaternion_group();
    if (name == "K4") return klein_four_group();
    if (name == "A:16") return a16_group();
    if (name.rfind("E5:", 0) == 0) {
      if (auto p = parse_int(name.substr(3))) return extraspecial_p5(*p);
      return std::nullopt;
    }
    if (name.rfind("PQQ:", 0) == 0) {
      const auto c1 = name.find(':', 4);
      const auto c2 = c1 == std::string::npos ? std::string::npos : name.find(':', c1 + 1);
      if (c2 == std::string::npos) return std::nullopt;
      auto p = parse_int(name.substr(4, c1 - 4));
      auto q0 = parse_int(name.substr(c1 + 1, c2 - c1 - 1));
      auto q1 = parse_int(name.substr(c2 + 1));
      if (p && q0 && q1) return pqq_group(*p, *q0, *q1);
      return std::nullopt;
    }
    if (name.rfind("Heis", 0) == 0) {
      if (auto p = parse_int(name.substr(4))) return heisenberg_group(*p);
      return std::nullopt;
    }
    if (name.rfind("Mod", 0) == 0) {
      if (auto p = parse_int(name.substr(3))) return modular_group_p3(*p);
      return std::nullopt;
    }
    if (name.size() >= 2) {
      const char head = name[0];
      if (auto n = parse_int(name.substr(1))) {
        switch (head) {
          case 'Z': return cyclic_group(*n);
          case 'D': return dihedral_group(*n);
          case 'S': return symmetric_group(*n);
          case 'A': return alternating_group(*n);
          default: break;
        }
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FiniteGroup> zoo_lookup(const std::string& name) {
  if (auto g = atom_lookup(name)) return g;
  // product names joined with 'x'
  if (name.find('x') == std::string::npos) return std::nullopt;
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() < 2) return std::nullopt;
  std::vector<FiniteGroup> factors;
  for (const auto& part : parts) {
    auto g = atom_lookup(part);
    if (!g) return std::nullopt;
    factors.push_back(std::move(*g));
  }
  try {
    return fold_direct_product(factors);
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

std::optional<FiniteSemigroup> semigroup_atom_lookup(const std::string& name) {
  try {
    if (name.rfind("Null", 0) == 0) {
      if (auto k = parse_int(name.substr(4))) return null_semigroup(*k);
      return std::nullopt;
    }
    if (name.rfind("Refuter", 0) == 0) {
      if (auto k = parse_int(name.substr(7))) return null_refuter_semigroup(*k);
      return std::nullopt;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (auto g = atom_lookup(name)) return g->sg();
  return std::nullopt;
}

}  // namespace

std::optional<FiniteSemigroup> zoo_lookup_semigroup(const std::string& name) {
  if (auto s = semigroup_atom_lookup(name)) return s;
  if (name.find('x') == std::string::npos) return std::nullopt;
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() < 2) return std::nullopt;
  std::vector<FiniteSemigroup> factors;
  for (const auto& part : parts) {
    auto s = semigroup_atom_lookup(part);
    if (!s) return std::nullopt;
    factors.push_back(std::move(*s));
  }
  try {
    FiniteSemigroup acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, factors[i]);
    return acc;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<NamedGroup> zoo_catalog(int max_order) {
  std::vector<NamedGroup> out;
  auto add = [&out, max_order](const std::string& name) {
    auto g = zoo_lookup(name);
    if (g && g->order() <= max_order && g->order() > 1)
      out.push_back(NamedGroup{name, std::move(*g)});
  };
  for (int n = 2; n <= std::min(max_order, 64); ++n) add("Z" + std::to_string(n));
  for (int n = 3; 2 * n <= std::min(max_order, 64); ++n) add("D" + std::to_string(n));
  for (const char* name :
       {"S3", "S4", "A4", "A5", "Q8", "K4", "Heis2", "Heis3", "Mod3", "A:16", "E5:2",
        "PQQ:2:3:5", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "D4xZ3", "Z2xQ8"})
    add(name);
  return out;
}

}  // namespace forge
