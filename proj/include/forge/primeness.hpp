// The primeness deciders: Tarski-primeness for groups (complete, via
// direct decomposition), both Rhodes variants (semidirect: complete via
// simplicity; direct: staged, three-valued), the modified-Rhodes direct
// variant (complete via monolithicity), bounded Tarski falsification for
// semigroups, and the implication-chain auditor.

#ifndef FORGE_PRIMENESS_HPP_
#define FORGE_PRIMENESS_HPP_

#include <string>
#include <vector>

#include "forge/enumeration.hpp"
#include "forge/io.hpp"
#include "forge/kernel.hpp"
#include "forge/zoo.hpp"

namespace forge {

enum class PrimeKind {
  tarski_semigroup,
  tarski_group,
  rhodes_direct,
  rhodes_semidirect,
  modified_rhodes_direct,
};

enum class PrimeVerdict { prime, not_prime, unknown_within_bound };

const char* to_string(PrimeKind k);
const char* to_string(PrimeVerdict v);

struct PrimenessVerdict {
  PrimeKind kind;
  PrimeVerdict verdict;
  Json certificate;   // self-contained, replayable with recheck_certificate
  std::string bound;  // nonempty iff verdict is unknown_within_bound
};

// Prime iff directly indecomposable (complete decision).
PrimenessVerdict tarski_prime_group(const FiniteGroup& g, int cap = kDefaultSubgroupCap);

// Prime iff simple (complete decision).
PrimenessVerdict rhodes_semidirect_prime_group(const FiniteGroup& g);

// Staged: (1) non-monolithic groups are not prime; (2) a noncommutative
// monolith, a semidirect complement of the monolith, or being cyclic of
// prime-power order proves primeness; (3) otherwise search universe
// pairs for a counterexample; unknown within the bound when none found.
PrimenessVerdict rhodes_direct_prime_group(const FiniteGroup& g,
                                           const std::vector<FiniteGroup>& universe,
                                           int cap = kDefaultSubgroupCap);

// Prime iff monolithic (complete decision).
PrimenessVerdict modified_rhodes_direct_prime_group(const FiniteGroup& g);

// Searches for a product x * t of order <= max_order admitting a
// factorization into two parts of which x divides neither.  Never
// returns prime; a negative search is unknown-within-bound.
PrimenessVerdict tarski_falsify_semigroup(const FiniteSemigroup& x, int max_order,
                                          const CatalogHandle& catalog);

struct AuditRow {
  std::string name;
  bool simple = false;
  PrimeVerdict rhodes_direct = PrimeVerdict::unknown_within_bound;
  bool monolithic = false;
  bool tarski_prime = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::vector<std::string> violations;  // must stay empty
  // Strictness witnesses per implication of the chain
  // simple => rhodes-direct => monolithic => tarski.
  std::vector<std::string> strict_first;
  std::vector<std::string> strict_second;
  std::vector<std::string> strict_third;
};

AuditReport implication_audit(const std::vector<NamedGroup>& universe,
                              const std::vector<FiniteGroup>& rhodes_universe);

}  // namespace forge

#endif  // FORGE_PRIMENESS_HPP_
