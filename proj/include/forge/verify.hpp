// The bundled verification scenarios: each check constructs its objects
// from scratch, decides the claimed facts, and returns PASS/FAIL with
// replayable certificates.

#ifndef FORGE_VERIFY_HPP_
#define FORGE_VERIFY_HPP_

#include <string>
#include <vector>

#include "forge/io.hpp"

namespace forge {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::vector<std::string> details;
  std::vector<Json> certificates;

  void require(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    pass = pass && ok;
  }
};

// Null(kappa) has no factorization-primeness: the refuter semigroup S
// and the least n with (kappa+1) not dividing (n+1) give Null(kappa)
// dividing S x Null(n) but neither S nor Null(n).
CheckResult verify_null(int kappa);

// The groups S3, S4, Z4, Z9 and Z5 x| Z4 are prime for subquotients of
// direct products but not simple.
CheckResult verify_s3();

// The order-p^5 central product of two heisenberg groups is monolithic
// and divides Heis(p) x Heis(p) without dividing Heis(p).
CheckResult verify_p5(int p);

// The order-16 group A:16 embeds in Q8^2 and D4^2 and maps onto both,
// while neither of Q8 and D4 divides the other.
CheckResult verify_q8d4();

// Mod(p^3) is a subquotient of Z_{p^2} x Heis(p) via the explicit
// order-p^4 subgroup, hence not prime for direct-product subquotients.
CheckResult verify_zpzp2(int p);

// (Z_q0 x Z_q1) x| Z_p is directly indecomposable but not monolithic;
// with q0 = q1 and equal action there are exactly q0+1 minimal normal
// subgroups.
CheckResult verify_pq1q2(int p, int q0, int q1);

// The implication chain simple => rhodes-direct => monolithic => tarski
// audited over the whole zoo up to max_order.
CheckResult verify_audit(int max_order);

// Runs the selected checks ("null", "S3", "p5", "Q8D4", "ZpZp2",
// "pq1q2", "audit"; empty = all), with parameters where applicable.
std::vector<CheckResult> verify_paper(const std::vector<std::string>& only, int p,
                                      int kappa);

}  // namespace forge

#endif  // FORGE_VERIFY_HPP_
