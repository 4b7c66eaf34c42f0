#ifndef NINECONG_CONGRUENCE_HPP
#define NINECONG_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "count.hpp"
#include "weierstrass.hpp"

namespace ninecong {

struct CongruenceRow {
  uint64_t p = 0;
  long ap1 = 0, ap2 = 0;
  bool congruent = false;
};

struct CongruenceReport {
  int modulus = 0;
  uint64_t bound = 0;
  std::vector<CongruenceRow> rows;      // primes good for both given models
  std::vector<uint64_t> skipped;        // bad reduction for either model, and p = 2
  bool all_congruent = true;
  bool vacuous = false;                 // warning: no good prime was tested
  std::optional<uint64_t> isogeny_excluded;  // first prime with an integer a_p mismatch
};

// Trace-of-Frobenius congruence scan: a_p(E1) ≡ a_p(E2) mod n at shared good
// primes is a necessary condition for n-congruence, and a single integer
// mismatch excludes an isogeny over Q.
inline CongruenceReport verify_congruence(const Curve<Rat>& e1, const Curve<Rat>& e2, int n,
                                          uint64_t bound) {
  if (n != 3 && n != 9) throw std::invalid_argument("verify_congruence: modulus must be 3 or 9");
  if (bound > kApPrimeCap) throw std::invalid_argument("verify_congruence: bound exceeds a_p cap");
  CongruenceReport rep;
  rep.modulus = n;
  rep.bound = bound;
  if (bound >= 2) rep.skipped.push_back(2);  // naive counting needs odd p
  for (uint64_t p : odd_primes_up_to(bound)) {
    CongruenceRow row;
    row.p = p;
    try {
      row.ap1 = ap(e1, p);
      row.ap2 = ap(e2, p);
    } catch (const BadReduction&) {
      rep.skipped.push_back(p);
      continue;
    }
    row.congruent = (row.ap1 - row.ap2) % n == 0;
    if (!row.congruent) rep.all_congruent = false;
    if (row.ap1 != row.ap2 && !rep.isogeny_excluded) rep.isogeny_excluded = p;
    rep.rows.push_back(row);
  }
  rep.vacuous = rep.rows.empty();
  return rep;
}

}  // namespace ninecong

#endif
