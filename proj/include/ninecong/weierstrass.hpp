#ifndef NINECONG_WEIERSTRASS_HPP
#define NINECONG_WEIERSTRASS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace ninecong {

class SingularCurve : public std::domain_error {
 public:
  SingularCurve() : std::domain_error("Weierstrass curve has zero discriminant") {}
};

// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over any field K with +, -, *, /, ==, is_zero.
template <class K>
struct Curve {
  K a1, a2, a3, a4, a6;
};

template <class K>
struct Invariants {
  K b2, b4, b6, b8, c4, c6, disc;
};

template <class K>
Invariants<K> invariants(const Curve<K>& e) {
  Invariants<K> v;
  K one = [&] {
    // a unit must be derived from the coefficients themselves; the all-zero
    // curve y^2 = x^3 is singular and rejected elsewhere
    for (const K* c : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
      if (!is_zero(*c)) return *c / *c;
    throw SingularCurve();
  }();
  auto n = [&](int k) {
    K acc = one - one;
    for (int i = 0; i < k; ++i) acc = acc + one;
    return acc;
  };
  v.b2 = e.a1 * e.a1 + n(4) * e.a2;
  v.b4 = n(2) * e.a4 + e.a1 * e.a3;
  v.b6 = e.a3 * e.a3 + n(4) * e.a6;
  v.b8 = e.a1 * e.a1 * e.a6 + n(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
         e.a4 * e.a4;
  v.c4 = v.b2 * v.b2 - n(24) * v.b4;
  v.c6 = n(0) - v.b2 * v.b2 * v.b2 + n(36) * v.b2 * v.b4 - n(216) * v.b6;
  v.disc = (v.c4 * v.c4 * v.c4 - v.c6 * v.c6) / n(1728);
  return v;
}

template <class K>
Curve<K> make_curve(const K& a1, const K& a2, const K& a3, const K& a4, const K& a6) {
  Curve<K> e{a1, a2, a3, a4, a6};
  if (is_zero(invariants(e).disc)) throw SingularCurve();
  return e;
}

template <class K>
Curve<K> make_short_curve(const K& a, const K& b) {
  K zero = a - a;
  return make_curve(zero, zero, zero, a, b);
}

template <class K>
struct Point {
  bool infinity = true;
  K x{}, y{};
  static Point at_infinity() { return Point{}; }
  static Point affine(const K& x, const K& y) { return Point{false, x, y}; }
  friend bool operator==(const Point& p, const Point& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

template <class K>
bool on_curve(const Curve<K>& e, const Point<K>& p) {
  if (p.infinity) return true;
  K lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
  K rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
  return is_zero(lhs - rhs);
}

template <class K>
Point<K> negate(const Curve<K>& e, const Point<K>& p) {
  if (p.infinity) return p;
  K my = (p.y - p.y) - p.y - e.a1 * p.x - e.a3;
  return Point<K>::affine(p.x, my);
}

template <class K>
Point<K> add(const Curve<K>& e, const Point<K>& p, const Point<K>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  K zero = p.x - p.x;
  if (p.x == q.x) {
    // either inverse points or doubling
    K ysum = p.y + q.y + e.a1 * q.x + e.a3;
    if (is_zero(ysum)) return Point<K>::at_infinity();
  }
  K lambda, nu;
  if (p.x == q.x) {
    K one = [&] {
      for (const K* c : {&p.x, &p.y, &e.a3, &e.a4, &e.a6, &e.a1, &e.a2})
        if (!is_zero(*c)) return *c / *c;
      throw std::domain_error("add: cannot derive field unit");
    }();
    K two = one + one, three = two + one;
    K den = two * p.y + e.a1 * p.x + e.a3;
    lambda = (three * p.x * p.x + two * e.a2 * p.x + e.a4 - e.a1 * p.y) / den;
    nu = (zero - p.x * p.x * p.x + e.a4 * p.x + two * e.a6 - e.a3 * p.y) / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  K xr = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  K yr = zero - (lambda + e.a1) * xr - nu - e.a3;
  return Point<K>{false, xr, yr};
}

template <class K>
Point<K> mul(const Curve<K>& e, const Point<K>& p, long n) {
  if (n < 0) return mul(e, negate(e, p), -n);
  Point<K> acc = Point<K>::at_infinity();
  for (long i = 0; i < n; ++i) acc = add(e, acc, p);
  return acc;
}

// Weierstrass change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
template <class K>
Curve<K> transform(const Curve<K>& e, const K& u, const K& r, const K& s, const K& t) {
  K one = u / u;
  K two = one + one, three = two + one;
  K u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Curve<K> f;
  f.a1 = (e.a1 + two * s) / u;
  f.a2 = (e.a2 - s * e.a1 + three * r - s * s) / u2;
  f.a3 = (e.a3 + r * e.a1 + two * t) / u3;
  f.a4 = (e.a4 - s * e.a3 + two * r * e.a2 - (t + r * s) * e.a1 + three * r * r - two * s * t) / u4;
  f.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1) / u6;
  return f;
}

template <class K>
Point<K> transform_point(const Point<K>& p, const K& u, const K& r, const K& s, const K& t) {
  if (p.infinity) return p;
  K u2 = u * u, u3 = u2 * u;
  K xp = (p.x - r) / u2;
  K yp = (p.y - s * u2 * xp - t) / u3;
  return Point<K>::affine(xp, yp);
}

// Scaling u with c4' = u^4 c4, c6' = u^6 c6 detecting Q-isomorphism of the
// underlying curves.  For j = 0 or 1728 this reports the scaling within the
// standard twist family when an exact rational root exists.
inline std::optional<Rat> is_isomorphic(const Curve<Rat>& e1, const Curve<Rat>& e2) {
  auto v1 = invariants(e1), v2 = invariants(e2);
  if (is_zero(v1.c4) != is_zero(v2.c4)) return std::nullopt;
  if (is_zero(v1.c6) != is_zero(v2.c6)) return std::nullopt;
  if (is_zero(v1.c4)) {  // j = 0
    auto u6 = v2.c6 / v1.c6;
    auto u = nth_root(u6, 6);
    if (!u) return std::nullopt;
    return *u;
  }
  if (is_zero(v1.c6)) {  // j = 1728
    auto u4 = v2.c4 / v1.c4;
    auto u = nth_root(u4, 4);
    if (!u) return std::nullopt;
    return *u;
  }
  Rat u2 = (v2.c6 * v1.c4) / (v1.c6 * v2.c4);
  auto u = nth_root(u2, 2);
  if (!u) return std::nullopt;
  if (pow_rat(*u, 4) * v1.c4 != v2.c4) return std::nullopt;
  if (pow_rat(*u, 6) * v1.c6 != v2.c6) return std::nullopt;
  return *u;
}

// Curve with invariants (d^2 c4, d^3 c6), as the short model
// y^2 = x^3 - (d^2 c4 / 48) x - (d^3 c6 / 864).
template <class K>
Curve<K> quadratic_twist(const Curve<K>& e, const K& d) {
  auto v = invariants(e);
  K one = d / d, zero = one - one;
  auto n = [&](int k) {
    K acc = zero;
    for (int i = 0; i < k; ++i) acc = acc + one;
    return acc;
  };
  K c4 = d * d * v.c4, c6 = d * d * d * v.c6;
  return Curve<K>{zero, zero, zero, (zero - c4) / n(48), (zero - c6) / n(864)};
}

}  // namespace ninecong

#endif
