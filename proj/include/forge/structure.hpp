// Semigroup-structure analysis: action equivalence, product elements,
// skeleta, null-factor and general direct-factor tests, cancellativity,
// and extension of ideal homomorphisms into groups.

#ifndef FORGE_STRUCTURE_HPP_
#define FORGE_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "forge/enumeration.hpp"
#include "forge/kernel.hpp"

namespace forge {

// Partition of the carrier into action-equivalence classes (x ~ y iff
// x*w = y*w and w*x = w*y for all w), with product-element bookkeeping.
// Classes are numbered by smallest member.
struct ActionClassing {
  std::vector<int> class_of;                // element -> class id
  std::vector<std::vector<Elem>> classes;   // members, ascending
  std::vector<bool> product_flag;           // element is some y*z
  std::vector<int> per_class_product_count;

  int class_count() const { return static_cast<int>(classes.size()); }
  bool discrete() const { return classes.size() == product_flag.size(); }
};

ActionClassing action_classes(const FiniteSemigroup& s);

// A verified direct-product decomposition of some semigroup: iso maps
// direct_product(left_factor, right_factor) onto it.
struct FactorWitness {
  FiniteSemigroup left_factor;
  FiniteSemigroup right_factor;
  Morphism iso;
};

struct SkeletonResult {
  FiniteSemigroup skeleton;
  std::vector<Elem> members;  // ascending sub-carrier in the parent
  Morphism inclusion;
};

// Sub-carrier consisting of all product elements plus one representative
// of each class containing none; default representative is the lowest
// index.  `chosen_reps`, when given, supplies the representative per
// class id (ignored for classes that contain a product element).
SkeletonResult skeleton(const FiniteSemigroup& s);
SkeletonResult skeleton(const FiniteSemigroup& s, const std::vector<Elem>& chosen_reps);

struct NullFactorRefusal {
  int class_id;
  std::vector<Elem> class_members;
  int product_count;
  std::string reason;
};

// Exactly one of the two fields is set.
struct NullFactorOutcome {
  std::optional<FactorWitness> witness;  // right factor is Null(kappa)
  std::optional<NullFactorRefusal> refusal;
  bool divides() const { return witness.has_value(); }
};

// Decides whether s ~ s0 x Null(kappa): every action class must have
// cardinality (kappa+1)*m with m >= the number of product elements in
// it.  kappa >= 1.
NullFactorOutcome null_factor(const FiniteSemigroup& s, int kappa);

enum class Verdict3 { Yes, No, Unknown };

const char* to_string(Verdict3 v);

struct DirectFactorResult {
  Verdict3 verdict = Verdict3::Unknown;
  std::optional<FactorWitness> witness;  // set when verdict == Yes
  std::string note;                      // refusal / insufficiency detail
};

// Searches the catalog (in catalog order) for a cofactor q with
// p x q ~ s.  Unknown when the cofactor order is beyond both the
// catalog and the enumeration cap.
DirectFactorResult direct_factor(const FiniteSemigroup& s, const FiniteSemigroup& p,
                                 const CatalogHandle& catalog);

struct Cancellativity {
  bool left = false;   // w*x = w*y implies x = y
  bool right = false;  // x*w = y*w implies x = y
  bool weak = false;   // no two distinct elements action equivalent
};

Cancellativity cancellativity(const FiniteSemigroup& s);

// Extends a homomorphism pi from a two-sided ideal of s into a group to
// the whole of s via  ext(x) = pi(a)^-1 pi(a x a) pi(a)^-1  for an ideal
// element a; the result is verified to be a homomorphism, to agree with
// pi on the ideal, and to be independent of the choice of a.
Morphism extend_ideal_hom(const FiniteSemigroup& s, const std::vector<Elem>& ideal,
                          const FiniteGroup& g, const std::vector<Elem>& pi_on_ideal);

struct SplitHom {
  Morphism pi_s;
  Morphism pi_t;
};

// Splits a homomorphism pi : s x t -> g into the unique pi_s, pi_t with
// pi(x, y) = pi_s(x) * pi_t(y); the images centralize one another.
SplitHom split_product_hom(const FiniteSemigroup& s, const FiniteSemigroup& t,
                           const FiniteGroup& g, const Morphism& pi);

}  // namespace forge

#endif  // FORGE_STRUCTURE_HPP_
