// Table file formats, JSON serialization of witnesses and certificates,
// and offline re-verification of certificates.  Certificates are
// self-contained: they embed every table they mention, so a replay needs
// no access to the original inputs.

#ifndef FORGE_IO_HPP_
#define FORGE_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "forge/groups.hpp"
#include "forge/kernel.hpp"
#include "forge/structure.hpp"

namespace forge {

using Json = nlohmann::json;

Json table_to_json(const OpTable& t);
OpTable table_from_json(const Json& j);

// Plain-text alternative: first line n, then n rows of n ints.
OpTable parse_table_text(const std::string& text);
std::string table_to_text(const OpTable& t);

// Reads either format, auto-detecting by the first non-space byte.
OpTable read_table_file(const std::string& path);

Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j);

// --- certificate builders ---
// Each returns an object with a "kind" discriminator understood by
// recheck_certificate.

Json cert_factorization(const FiniteSemigroup& target, const FactorWitness& w);
Json cert_null_refusal(const FiniteSemigroup& target, int kappa,
                       const NullFactorRefusal& r);
Json cert_embedding(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                    const Morphism& m);
Json cert_surjection(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                     const Morphism& m);
Json cert_subquotient(const FiniteGroup& ambient, const FiniteGroup& target,
                      const SubquotientWitness& w);
Json cert_decomposition(const FiniteGroup& g, const std::vector<FiniteGroup>& factors,
                        const Morphism& iso);
Json cert_indecomposable(const FiniteGroup& g);
Json cert_simple(const FiniteGroup& g);
Json cert_normal_witness(const FiniteGroup& g, const std::vector<Elem>& members);
Json cert_monolith(const FiniteGroup& g, const std::vector<Elem>& members);
Json cert_non_monolithic(const FiniteGroup& g, const std::vector<Elem>& n1,
                         const std::vector<Elem>& n2);
Json cert_exhaustion(const std::string& description);

struct RecheckResult {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(const std::string& msg) {
    ok = false;
    messages.push_back(msg);
  }
};

// Replays one certificate from scratch using only kernel/iso/group
// operations (and bounded searches for exhaustive claims).
RecheckResult recheck_certificate(const Json& cert);

// Walks every certificate found in a CLI report.
RecheckResult recheck_report(const Json& report);

}  // namespace forge

#endif  // FORGE_IO_HPP_
