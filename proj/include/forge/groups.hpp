// Group-structure algorithms over table groups: subgroup and
// normal-subgroup enumeration, quotients, monoliths, semidirect and
// wreath products, subquotient search, and direct-product decomposition.

#ifndef FORGE_GROUPS_HPP_
#define FORGE_GROUPS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/kernel.hpp"

namespace forge {

inline constexpr int kDefaultSubgroupCap = 512;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : bits_(n), words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return bits_; }
  int count() const;
  bool subset_of(const Bitset& other) const;
  Bitset intersect(const Bitset& other) const;
  std::vector<Elem> members() const;

  bool operator==(const Bitset& other) const { return words_ == other.words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Subgroup {
  std::vector<Elem> members;  // ascending
  Bitset bits;
  bool normal = false;
  int index = 0;  // |G| / |H|

  int order() const { return static_cast<int>(members.size()); }
};

// Closure of a generating set under product (and hence inverse, the
// carrier being finite).
Bitset subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& gens);

// Smallest normal subgroup containing x.
Bitset normal_closure(const FiniteGroup& g, Elem x);

// All subgroups by cyclic extension, exactly once each, sorted by
// (order, member list); normal flags set.
std::vector<Subgroup> subgroups(const FiniteGroup& g, int cap = kDefaultSubgroupCap);

// Reindexed group on an ascending sub-carrier that is closed under the
// operation; members[i] is the parent element of local index i.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Elem> members;
};
SubgroupGroup subgroup_group(const FiniteGroup& g, const std::vector<Elem>& members);

struct QuotientResult {
  FiniteGroup group;
  Morphism projection;          // verified surjective hom
  std::vector<Elem> coset_of;   // element -> coset id (cosets numbered by least member)
};

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);
std::optional<Subgroup> monolith(const FiniteGroup& g);

bool is_simple(const FiniteGroup& g);

// Per-element automorphism maps: action[x] is the automorphism of n
// assigned to element x of k.
using Action = std::vector<std::vector<Elem>>;

// Carrier n x k with (a, x)(b, y) = (a * action[x](b), x * y), pair
// (a, x) encoded as a*|k| + x.  The action is verified.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const Action& action, int carrier_cap = kDefaultCarrierCap);

// Regular wreath product n wr q = n^|q| x| q, q permuting coordinates;
// tuples encoded big-endian base |n|, coordinate i indexed by element i
// of q.
FiniteGroup wreath_product(const FiniteGroup& n, const FiniteGroup& q,
                           int carrier_cap = kDefaultCarrierCap);

struct SubquotientWitness {
  Subgroup subgroup;  // K <= ambient (members in ambient indices)
  Subgroup kernel;    // N normal in K (members in ambient indices; flag wrt K)
  Morphism iso;       // quotient(K, N) -> target
};

// Some(witness) iff some K <= g and N normal in K give K/N ~ h; search
// over subgroups in decreasing order, kernels in increasing order.
std::optional<SubquotientWitness> is_subquotient(const FiniteGroup& h, const FiniteGroup& g,
                                                 int cap = kDefaultSubgroupCap);

// Left-nested iterated product; identity group for an empty list.
FiniteGroup fold_direct_product(const std::vector<FiniteGroup>& factors,
                                int carrier_cap = kDefaultCarrierCap);

struct Decomposition {
  std::vector<FiniteGroup> factors;  // directly indecomposable, search order
  Morphism iso;                      // fold_direct_product(factors) -> g
};

Decomposition direct_decomposition(const FiniteGroup& g, int cap = kDefaultSubgroupCap);

// First K (in (order, members) order) with trivial intersection with m
// and |m|*|K| = |g|.
std::optional<Subgroup> semidirect_complement(const FiniteGroup& g, const Subgroup& m,
                                              int cap = kDefaultSubgroupCap);

}  // namespace forge

#endif  // FORGE_GROUPS_HPP_
