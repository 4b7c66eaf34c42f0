#ifndef NINECONG_RATIONAL_HPP
#define NINECONG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ninecong {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

inline Rat pow_rat(const Rat& x, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
  r.canonicalize();
  return r;
}

inline Int pow_int(const Int& x, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

// Exact n-th root of a rational, if one exists.  For even n the input must be
// non-negative and the non-negative root is returned.
inline std::optional<Rat> nth_root(const Rat& x, unsigned long n) {
  if (n == 0) throw std::invalid_argument("nth_root: n = 0");
  if (sgn(x) == 0) return Rat(0);
  if (sgn(x) < 0 && n % 2 == 0) return std::nullopt;
  Rat xc = x;
  xc.canonicalize();
  Int num = xc.get_num(), den = xc.get_den();
  Int rn, rd;
  bool neg = sgn(num) < 0;
  Int an = abs(num);
  if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  if (neg) rn = -rn;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace ninecong

#endif
