// Carrier types for finite algebras given by composition tables:
// validated semigroups and groups over dense element indices, morphisms
// with verified compatibility, and the basic constructors everything
// else is built from.

#ifndef FORGE_KERNEL_HPP_
#define FORGE_KERNEL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

using Elem = std::uint16_t;

// Default ceiling on carrier sizes produced by product constructors.
inline constexpr int kDefaultCarrierCap = 4096;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedTableError : Error {
  using Error::Error;
};

struct NonAssociativeError : Error {
  int i, j, k;  // first violating triple, lexicographic
  NonAssociativeError(int i_, int j_, int k_);
};

struct SizeOverflowError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

struct NotAGroupError : Error {
  using Error::Error;
};

struct NotAHomError : Error {
  using Error::Error;
};

struct NotAnIdealError : Error {
  int element, multiplier;  // witness pair: element in the set, multiplier outside
  NotAnIdealError(int e, int m);
};

struct NotNormalError : Error {
  using Error::Error;
};

struct NotAnActionError : Error {
  using Error::Error;
};

struct TrivialInputError : Error {
  using Error::Error;
};

// Dense n x n composition table over element indices.  table[i*n + j] is
// the product of element i by element j.  Names are display-only.
struct OpTable {
  int order = 0;
  std::vector<Elem> table;
  std::vector<std::string> names;  // empty or size == order

  OpTable() = default;
  OpTable(int n, std::vector<Elem> t, std::vector<std::string> nm = {})
      : order(n), table(std::move(t)), names(std::move(nm)) {}

  Elem at(int i, int j) const { return table[static_cast<std::size_t>(i) * order + j]; }
  Elem& at(int i, int j) { return table[static_cast<std::size_t>(i) * order + j]; }

  // Structural well-formedness: order >= 1, n*n entries, all in [0, n).
  void check_well_formed() const;

  bool operator==(const OpTable& other) const {
    return order == other.order && table == other.table;
  }

  std::string name_of(int i) const;
};

// A composition table whose associativity has been verified (or is
// guaranteed by the way the table was constructed).
class FiniteSemigroup {
 public:
  // Full n^3 associativity scan; throws NonAssociativeError with the
  // lexicographically first violating triple, or MalformedTableError.
  static FiniteSemigroup validate(OpTable t);

  // For tables whose associativity holds by construction (direct
  // products of valid tables, verified sub-tables, coset tables).
  static FiniteSemigroup trusted(OpTable t);

  int order() const { return tab_.order; }
  Elem mul(int a, int b) const { return tab_.at(a, b); }
  const OpTable& table() const { return tab_; }

  bool operator==(const FiniteSemigroup& other) const { return tab_ == other.tab_; }

 private:
  explicit FiniteSemigroup(OpTable t) : tab_(std::move(t)) {}
  OpTable tab_;
};

// A semigroup together with its identity and inverse map.
class FiniteGroup {
 public:
  // Locates the identity and inverses; throws NotAGroupError if absent.
  static FiniteGroup from_semigroup(FiniteSemigroup s);
  static FiniteGroup from_table(OpTable t) {
    return from_semigroup(FiniteSemigroup::validate(std::move(t)));
  }

  int order() const { return base_.order(); }
  Elem mul(int a, int b) const { return base_.mul(a, b); }
  Elem identity() const { return identity_; }
  Elem inv(int a) const { return inverses_[a]; }
  Elem conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const FiniteSemigroup& sg() const { return base_; }
  const OpTable& table() const { return base_.table(); }

  // Order of an element (least k >= 1 with x^k = e).
  int element_order(int x) const;

 private:
  FiniteGroup(FiniteSemigroup b, Elem e, std::vector<Elem> inv)
      : base_(std::move(b)), identity_(e), inverses_(std::move(inv)) {}
  FiniteSemigroup base_;
  Elem identity_;
  std::vector<Elem> inverses_;
};

enum class MorphismKind { hom, embedding, surjection, isomorphism, anti_isomorphism };

const char* to_string(MorphismKind k);

// A compatibility-verified map between two table algebras.  When
// `domain_subset` is nonempty the map is partial: map[k] is the image of
// domain element domain_subset[k], and compatibility is verified on the
// subset (which must be closed under the operation).
struct Morphism {
  int domain_order = 0;
  int codomain_order = 0;
  std::vector<Elem> domain_subset;  // empty == total
  std::vector<Elem> map;
  MorphismKind kind = MorphismKind::hom;

  bool total() const { return domain_subset.empty(); }
  Elem apply(int x) const;  // total morphisms only

  bool is_injective() const;
  bool is_surjective() const;
};

// Verifies map(x*y) == map(x)*map(y) on the (total) domain and classifies
// the kind from injectivity/surjectivity.  Throws NotAHomError.
Morphism make_hom(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                  std::vector<Elem> map);

// Same with the product reversed on the codomain side; kind is
// anti_isomorphism and the map must be bijective.
Morphism make_anti_isomorphism(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                               std::vector<Elem> map);

// Partial morphism on a product-closed subset of the domain carrier.
Morphism make_partial_hom(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                          std::vector<Elem> subset, std::vector<Elem> map);

// Re-runs the compatibility and kind checks on an arbitrary morphism value.
bool check_morphism(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                    const Morphism& m);

// Componentwise product on |s|*|t| elements; (i, j) is encoded as
// i*|t| + j.  This encoding is part of the external contract.
FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               int carrier_cap = kDefaultCarrierCap);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int carrier_cap = kDefaultCarrierCap);

// --- constructors ---

// kappa + 1 elements, every product equal to element 0.
FiniteSemigroup null_semigroup(int kappa);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);       // order 2n, n >= 1
FiniteGroup symmetric_group(int n);      // n <= 6
FiniteGroup alternating_group(int n);    // n <= 6
FiniteGroup quaternion_group();
FiniteGroup klein_four_group();

// Order p^3, upper unitriangular 3x3 matrices over Z_p; generators
// a = I+e23, b = I+e12, c = I+e13 (c central, ba = abc).
FiniteGroup heisenberg_group(int p);

// Order p^3 for odd p: Z_{p^2} x| Z_p with the generator of Z_p acting
// by multiplication by 1+p.
FiniteGroup modular_group_p3(int p);

// Appends a two-sided identity as the new highest index n.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

// Transposed table: products taken in reverse order.
FiniteSemigroup opposite(const FiniteSemigroup& s);

// Element indices of the generators used by heisenberg_group.
struct HeisenbergGens {
  Elem a, b, c;
};
HeisenbergGens heisenberg_gens(int p);

}  // namespace forge

#endif  // FORGE_KERNEL_HPP_
