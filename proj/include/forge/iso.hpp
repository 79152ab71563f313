// Isomorphism, anti-isomorphism and automorphism search for table
// algebras.  Pruning is by iterated partition refinement on the
// multiplication structure, then depth-first extension of partial
// bijections with closure under products.

#ifndef FORGE_ISO_HPP_
#define FORGE_ISO_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/kernel.hpp"

namespace forge {

inline constexpr int kDefaultAutomorphismCap = 256;

// Stable per-element colors, comparable across semigroups: colors are
// content hashes of the refined invariant keys, so two elements (of
// possibly different semigroups) share a color exactly when the
// refinement cannot tell them apart.  Equal color histograms are
// necessary for isomorphism.
struct Fingerprint {
  std::vector<std::uint64_t> colors;
  std::vector<std::uint64_t> histogram;  // sorted colors
  std::uint64_t global_hash = 0;
};

Fingerprint fingerprint(const FiniteSemigroup& s);

// Complete decision.  The witness is deterministic: decision points are
// taken in the element order induced by fingerprint classes and
// candidate targets are tried in ascending index.
std::optional<Morphism> isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t);

// isomorphic(s, opposite(t)), re-verified and tagged as an
// anti-isomorphism against t itself.
std::optional<Morphism> anti_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t);

struct AutomorphismGroup {
  std::vector<Morphism> generators;
  long long order = 0;
};

AutomorphismGroup automorphisms(const FiniteGroup& g, int cap = kDefaultAutomorphismCap);

// All isomorphisms s -> t as raw maps, in search order; stops after
// `limit` solutions.  Exposed for the automorphism search and tests.
std::vector<std::vector<Elem>> all_isomorphisms(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t,
                                                std::size_t limit);

}  // namespace forge

#endif  // FORGE_ISO_HPP_
