#ifndef NINECONG_FP_HPP
#define NINECONG_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace ninecong {

// Prime field element.  The modulus travels with the value; mixing moduli is a
// programming error and throws.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

  static Fp from_rat(const Rat& x, uint64_t p) {
    Int num = x.get_num() % Int(static_cast<unsigned long>(p));
    Int den = x.get_den() % Int(static_cast<unsigned long>(p));
    uint64_t n = mpz_get_ui(num.get_mpz_t());
    if (sgn(num) < 0) n = p - n % p;
    uint64_t d = mpz_get_ui(den.get_mpz_t());
    if (d % p == 0) throw std::domain_error("Fp::from_rat: denominator divisible by p");
    return Fp(n % p, p) / Fp(d % p, p);
  }

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp((a.v_ + b.v_) % a.p_, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp(mulmod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(p_ - v_ % p_, p_); }
  friend bool operator==(const Fp& a, const Fp& b) = default;

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    return pow(p_ - 2);
  }

  Fp pow(uint64_t e) const {
    Fp r(1, p_), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

 private:
  static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }
  void match(const Fp& o) const {
    if (p_ != o.p_) throw std::logic_error("Fp: modulus mismatch");
  }
  uint64_t v_, p_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace ninecong

#endif
