#ifndef NINECONG_COUNT_HPP
#define NINECONG_COUNT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fp.hpp"
#include "weierstrass.hpp"

namespace ninecong {

class BadReduction : public std::domain_error {
 public:
  explicit BadReduction(uint64_t p)
      : std::domain_error("bad reduction at p = " + std::to_string(p)) {}
};
class PrimeTooLarge : public std::domain_error {
 public:
  explicit PrimeTooLarge(uint64_t p)
      : std::domain_error("prime exceeds naive counting cap: " + std::to_string(p)) {}
};

inline constexpr uint64_t kApPrimeCap = 100000;

inline Curve<Fp> reduce_mod_p(const Curve<Rat>& e, uint64_t p) {
  for (const Rat* c : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
    if (mpz_divisible_ui_p(c->get_den().get_mpz_t(), p)) throw BadReduction(p);
  Curve<Fp> f{Fp::from_rat(e.a1, p), Fp::from_rat(e.a2, p), Fp::from_rat(e.a3, p),
              Fp::from_rat(e.a4, p), Fp::from_rat(e.a6, p)};
  Rat d = invariants(e).disc;
  if (mpz_divisible_ui_p(d.get_den().get_mpz_t(), p) || is_zero(Fp::from_rat(d, p)))
    throw BadReduction(p);
  return f;
}

// #E(F_p) by a quadratic-residue scan of the completed square
// (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6, valid for odd p.
inline uint64_t count_points(const Curve<Fp>& e, uint64_t p) {
  if (p == 2) throw PrimeTooLarge(2);  // odd primes only
  std::vector<int8_t> chi(p, -1);
  chi[0] = 0;
  for (uint64_t y = 1; y <= p / 2; ++y) chi[(__uint128_t(y) * y) % p] = 1;
  // b-quantities computed directly (invariants() divides by 1728, bad for p = 3)
  Fp four(4, p), two(2, p);
  uint64_t b2 = (e.a1 * e.a1 + four * e.a2).value();
  uint64_t b4 = (two * e.a4 + e.a1 * e.a3).value();
  uint64_t b6 = (e.a3 * e.a3 + four * e.a6).value();
  uint64_t n = p + 1;
  for (uint64_t x = 0; x < p; ++x) {
    __uint128_t f = ((__uint128_t)4 * x % p) * x % p * x % p;
    f += (__uint128_t)b2 * x % p * x % p;
    f += (__uint128_t)2 * b4 % p * x % p;
    f += b6;
    n += chi[uint64_t(f % p)];
  }
  return n;
}

inline long ap(const Curve<Rat>& e, uint64_t p) {
  if (p > kApPrimeCap) throw PrimeTooLarge(p);
  if (p == 2) throw BadReduction(2);  // naive scan needs odd p; callers skip 2
  Curve<Fp> f = reduce_mod_p(e, p);
  return static_cast<long>(p) + 1 - static_cast<long>(count_points(f, p));
}

inline std::vector<uint64_t> odd_primes_up_to(uint64_t bound) {
  std::vector<uint64_t> ps;
  for (uint64_t n = 3; n <= bound; n += 2)
    if (is_prime_u64(n)) ps.push_back(n);
  return ps;
}

}  // namespace ninecong

#endif
