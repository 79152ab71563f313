// forge: analyze, factor and decide primeness of finite algebras given
// by composition tables.  Every run prints a human summary on stderr and
// a machine-readable JSON report on stdout; certificates in the report
// replay offline via `forge recheck`.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "forge/enumeration.hpp"
#include "forge/groups.hpp"
#include "forge/io.hpp"
#include "forge/iso.hpp"
#include "forge/primeness.hpp"
#include "forge/structure.hpp"
#include "forge/verify.hpp"
#include "forge/zoo.hpp"

namespace {

using namespace forge;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitVerifyFailure = 3;

// Zoo resolution precedes file lookup.
FiniteSemigroup resolve_semigroup(const std::string& spec, Json& inputs) {
  if (auto s = zoo_lookup_semigroup(spec)) {
    inputs[spec] = table_to_json(s->table());
    return *s;
  }
  OpTable t = read_table_file(spec);
  FiniteSemigroup s = FiniteSemigroup::validate(std::move(t));
  inputs[spec] = table_to_json(s.table());
  return s;
}

FiniteGroup resolve_group(const std::string& spec, Json& inputs) {
  if (auto g = zoo_lookup(spec)) {
    inputs[spec] = table_to_json(g->table());
    return *g;
  }
  FiniteGroup g = FiniteGroup::from_table(read_table_file(spec));
  inputs[spec] = table_to_json(g.table());
  return g;
}

CatalogHandle open_catalog(const std::string& flag_value, int fly_cap) {
  std::string dir = flag_value;
  if (dir.empty()) {
    if (const char* env = std::getenv("FORGE_CATALOG")) dir = env;
  }
  if (!dir.empty()) return load_catalog(dir, fly_cap);
  return enumerate_semigroups(4, CatalogMode::up_to_iso_and_anti, false, false, fly_cap);
}

void emit(const Json& report, const std::string& human) {
  std::cerr << human;
  std::cout << report.dump(2) << "\n";
}

int cmd_analyze(const std::string& input) {
  Json report{{"command", "analyze"}, {"inputs", Json::object()}};
  FiniteSemigroup s = resolve_semigroup(input, report["inputs"]);
  const auto ac = action_classes(s);
  const auto canc = cancellativity(s);
  const auto sk = skeleton(s);

  bool is_group = true;
  try {
    FiniteGroup::from_semigroup(s);
  } catch (const NotAGroupError&) {
    is_group = false;
  }

  Json classes = Json::array();
  for (int c = 0; c < ac.class_count(); ++c)
    classes.push_back({{"members", ac.classes[c]},
                       {"product_count", ac.per_class_product_count[c]}});
  report["result"] = {{"order", s.order()},
                      {"group", is_group},
                      {"action_classes", classes},
                      {"cancellative", {{"left", canc.left},
                                        {"right", canc.right},
                                        {"weak", canc.weak}}},
                      {"skeleton_members", sk.members}};
  report["certificates"] = Json::array();

  std::string human = "order " + std::to_string(s.order()) +
                      (is_group ? " (group)" : " (semigroup)") + "\n" +
                      "action classes: " + std::to_string(ac.class_count()) + "\n" +
                      "cancellativity: left=" + (canc.left ? "yes" : "no") +
                      " right=" + (canc.right ? "yes" : "no") +
                      " weak=" + (canc.weak ? "yes" : "no") + "\n" +
                      "skeleton order: " + std::to_string(sk.skeleton.order()) + "\n";
  emit(report, human);
  return kExitOk;
}

int cmd_factor(const std::string& input, int null_kappa, const std::string& by,
               bool decompose, const std::string& catalog_dir, int fly_cap) {
  Json report{{"command", "factor"}, {"inputs", Json::object()}};
  report["certificates"] = Json::array();
  FiniteSemigroup s = resolve_semigroup(input, report["inputs"]);
  std::string human;
  int exit_code = kExitOk;

  if (null_kappa > 0) {
    auto out = null_factor(s, null_kappa);
    if (out.witness) {
      report["result"] = {{"divides", true},
                          {"left_factor_order", out.witness->left_factor.order()}};
      report["certificates"].push_back(cert_factorization(s, *out.witness));
      human = "Null(" + std::to_string(null_kappa) + ") divides: yes\n";
    } else {
      report["result"] = {{"divides", false}, {"reason", out.refusal->reason}};
      report["certificates"].push_back(cert_null_refusal(s, null_kappa, *out.refusal));
      human = "Null(" + std::to_string(null_kappa) + ") divides: no (" +
              out.refusal->reason + ")\n";
    }
  } else if (!by.empty()) {
    FiniteSemigroup p = resolve_semigroup(by, report["inputs"]);
    CatalogHandle catalog = open_catalog(catalog_dir, fly_cap);
    auto out = direct_factor(s, p, catalog);
    report["result"] = {{"verdict", to_string(out.verdict)}, {"note", out.note}};
    if (out.witness) report["certificates"].push_back(cert_factorization(s, *out.witness));
    human = std::string("direct factor: ") + to_string(out.verdict) + "\n";
    if (out.verdict == Verdict3::Unknown) exit_code = kExitUnknown;
  } else if (decompose) {
    FiniteGroup g = FiniteGroup::from_semigroup(s);
    auto dec = direct_decomposition(g);
    Json orders = Json::array();
    for (const auto& f : dec.factors) orders.push_back(f.order());
    report["result"] = {{"factor_count", dec.factors.size()}, {"factor_orders", orders}};
    if (dec.factors.size() >= 2)
      report["certificates"].push_back(cert_decomposition(g, dec.factors, dec.iso));
    else
      report["certificates"].push_back(cert_indecomposable(g));
    human = "indecomposable factors: " + std::to_string(dec.factors.size()) + "\n";
  } else {
    throw Error("factor needs one of --null, --by, --decompose");
  }
  emit(report, human);
  return exit_code;
}

int cmd_prime(const std::string& input, const std::string& kind,
              const std::vector<std::string>& universe_names, int max_order,
              const std::string& catalog_dir, int fly_cap) {
  Json report{{"command", "prime"}, {"kind", kind}, {"inputs", Json::object()}};
  report["certificates"] = Json::array();
  PrimenessVerdict v{PrimeKind::tarski_group, PrimeVerdict::prime, {}, ""};

  if (kind == "tarski-semigroup") {
    FiniteSemigroup s = resolve_semigroup(input, report["inputs"]);
    CatalogHandle catalog = open_catalog(catalog_dir, fly_cap);
    v = tarski_falsify_semigroup(s, max_order > 0 ? max_order : 4 * s.order(), catalog);
  } else {
    FiniteGroup g = resolve_group(input, report["inputs"]);
    if (kind == "tarski") {
      v = tarski_prime_group(g);
    } else if (kind == "rhodes-semidirect") {
      v = rhodes_semidirect_prime_group(g);
    } else if (kind == "modified-rhodes") {
      v = modified_rhodes_direct_prime_group(g);
    } else if (kind == "rhodes-direct") {
      std::vector<FiniteGroup> universe;
      for (const auto& name : universe_names)
        universe.push_back(resolve_group(name, report["inputs"]));
      v = rhodes_direct_prime_group(g, universe);
    } else {
      throw Error("unknown primeness kind " + kind);
    }
  }
  report["result"] = {{"kind", to_string(v.kind)},
                      {"verdict", to_string(v.verdict)},
                      {"certificate", v.certificate},
                      {"bound", v.bound}};
  report["certificates"].push_back(v.certificate);
  emit(report, std::string(to_string(v.kind)) + ": " + to_string(v.verdict) + "\n");
  return v.verdict == PrimeVerdict::unknown_within_bound ? kExitUnknown : kExitOk;
}

int cmd_subquotient(const std::string& h_spec, const std::string& g_spec) {
  Json report{{"command", "subquotient"}, {"inputs", Json::object()}};
  report["certificates"] = Json::array();
  FiniteGroup h = resolve_group(h_spec, report["inputs"]);
  FiniteGroup g = resolve_group(g_spec, report["inputs"]);
  auto w = is_subquotient(h, g);
  report["result"] = {{"subquotient", w.has_value()}};
  if (w) {
    report["result"]["subgroup_order"] = w->subgroup.order();
    report["result"]["kernel_order"] = w->kernel.order();
    report["certificates"].push_back(cert_subquotient(g, h, *w));
  }
  emit(report, std::string("subquotient: ") + (w ? "yes" : "no") + "\n");
  return kExitOk;
}

int cmd_enumerate(int max_order, const std::string& mode, bool idempotent_only,
                  bool allow7, const std::string& out_dir) {
  CatalogMode m = mode == "iso" ? CatalogMode::up_to_iso : CatalogMode::up_to_iso_and_anti;
  CatalogHandle handle = enumerate_semigroups(max_order, m, idempotent_only, allow7);
  Json report{{"command", "enumerate"},
              {"result", {{"mode", to_string(m)},
                          {"idempotent_only", idempotent_only},
                          {"counts", handle.counts()}}}};
  report["certificates"] = Json::array();
  std::string human = "counts:";
  for (long long c : handle.counts()) human += " " + std::to_string(c);
  human += "\n";
  if (!out_dir.empty()) {
    save_catalog(handle, out_dir);
    report["result"]["out"] = out_dir;
    human += "saved to " + out_dir + "\n";
  }
  emit(report, human);
  return kExitOk;
}

int cmd_verify_paper(const std::vector<std::string>& only, int p, int kappa) {
  auto results = verify_paper(only, p, kappa);
  Json report{{"command", "verify-paper"}, {"checks", Json::array()}};
  report["certificates"] = Json::array();
  bool all_pass = true;
  std::string human;
  for (const auto& r : results) {
    Json jr{{"id", r.id}, {"pass", r.pass}, {"details", r.details}};
    report["checks"].push_back(jr);
    for (const auto& c : r.certificates) report["certificates"].push_back(c);
    all_pass = all_pass && r.pass;
    human += (r.pass ? "PASS " : "FAIL ") + r.id + "\n";
    for (const auto& d : r.details) human += "  " + d + "\n";
  }
  report["pass"] = all_pass;
  emit(report, human);
  return all_pass ? kExitOk : kExitVerifyFailure;
}

int cmd_recheck(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  Json report = Json::parse(f);
  RecheckResult res = recheck_report(report);
  Json out{{"command", "recheck"}, {"input", path}, {"pass", res.ok},
           {"messages", res.messages}};
  std::string human = res.ok ? "recheck: PASS\n" : "recheck: FAIL\n";
  for (const auto& m : res.messages) human += "  " + m + "\n";
  emit(out, human);
  return res.ok ? kExitOk : kExitError;
}

int cmd_zoo(int max_order) {
  Json report{{"command", "zoo"}, {"groups", Json::array()}};
  std::string human;
  for (const auto& ng : zoo_catalog(max_order)) {
    report["groups"].push_back({{"name", ng.name}, {"order", ng.group.order()}});
    human += ng.name + " (order " + std::to_string(ng.group.order()) + ")\n";
  }
  emit(report, human);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra toolkit: tables in, certificates out"};
  app.require_subcommand(0, 1);

  std::string recheck_path;
  app.add_option("--recheck", recheck_path, "replay the certificates of a JSON report");

  auto* analyze = app.add_subcommand("analyze", "action classes, cancellativity, skeleton");
  std::string analyze_input;
  analyze->add_option("input", analyze_input, "zoo name or table file")->required();

  auto* factor = app.add_subcommand("factor", "direct/null factorization");
  std::string factor_input, factor_by, factor_catalog;
  int factor_null = 0, factor_fly = kDefaultEnumerationCap;
  bool factor_decompose = false;
  factor->add_option("input", factor_input)->required();
  factor->add_option("--null", factor_null, "test for a Null(kappa) direct factor");
  factor->add_option("--by", factor_by, "test for a given direct factor");
  factor->add_flag("--decompose", factor_decompose, "full direct decomposition (groups)");
  factor->add_option("--catalog", factor_catalog, "catalog directory (or FORGE_CATALOG)");
  factor->add_option("--fly-cap", factor_fly, "max order enumerated on the fly");

  auto* prime = app.add_subcommand("prime", "primeness deciders");
  std::string prime_input, prime_kind = "tarski", prime_catalog;
  std::vector<std::string> prime_universe;
  int prime_max_order = 0, prime_fly = kDefaultEnumerationCap;
  prime->add_option("input", prime_input)->required();
  prime->add_option("--kind", prime_kind,
                    "tarski | rhodes-direct | rhodes-semidirect | modified-rhodes | "
                    "tarski-semigroup");
  prime->add_option("--universe", prime_universe, "universe groups for rhodes-direct");
  prime->add_option("--max-order", prime_max_order, "bound for tarski-semigroup search");
  prime->add_option("--catalog", prime_catalog, "catalog directory");
  prime->add_option("--fly-cap", prime_fly, "max order enumerated on the fly");

  auto* subq = app.add_subcommand("subquotient", "is the target a subquotient of the ambient group");
  std::string subq_h, subq_g;
  subq->add_option("target", subq_h)->required();
  subq->add_option("ambient", subq_g)->required();

  auto* enumerate = app.add_subcommand("enumerate", "canonical semigroup tables");
  int enum_max = 4;
  std::string enum_mode = "anti", enum_out;
  bool enum_idem = false, enum_allow7 = false;
  enumerate->add_option("--max-order", enum_max)->required();
  enumerate->add_option("--mode", enum_mode, "iso | anti");
  enumerate->add_flag("--idempotent-only", enum_idem);
  enumerate->add_flag("--allow-order-7", enum_allow7);
  enumerate->add_option("--out", enum_out, "directory for shards + manifest");

  auto* verify = app.add_subcommand("verify-paper", "run the bundled scenario checks");
  std::vector<std::string> verify_only;
  int verify_p = 0, verify_kappa = 0;
  verify->add_option("--only", verify_only, "null | S3 | p5 | Q8D4 | ZpZp2 | pq1q2 | audit");
  verify->add_option("--p", verify_p, "prime parameter where applicable (2, 3 or 5)");
  verify->add_option("--kappa", verify_kappa, "kappa for the null check");

  auto* recheck = app.add_subcommand("recheck", "replay the certificates of a report");
  std::string recheck_sub_path;
  recheck->add_option("report", recheck_sub_path)->required();

  auto* zoo = app.add_subcommand("zoo", "list built-in groups");
  int zoo_max = 64;
  zoo->add_option("--max-order", zoo_max);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!recheck_path.empty()) return cmd_recheck(recheck_path);
    if (*analyze) return cmd_analyze(analyze_input);
    if (*factor)
      return cmd_factor(factor_input, factor_null, factor_by, factor_decompose,
                        factor_catalog, factor_fly);
    if (*prime)
      return cmd_prime(prime_input, prime_kind, prime_universe, prime_max_order,
                       prime_catalog, prime_fly);
    if (*subq) return cmd_subquotient(subq_h, subq_g);
    if (*enumerate)
      return cmd_enumerate(enum_max, enum_mode, enum_idem, enum_allow7, enum_out);
    if (*verify) return cmd_verify_paper(verify_only, verify_p, verify_kappa);
    if (*recheck) return cmd_recheck(recheck_sub_path);
    if (*zoo) return cmd_zoo(zoo_max);
    std::cerr << app.help();
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
