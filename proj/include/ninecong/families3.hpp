#ifndef NINECONG_FAMILIES3_HPP
#define NINECONG_FAMILIES3_HPP

#include <stdexcept>

#include "poly.hpp"
#include "weierstrass.hpp"

namespace ninecong {

class SingularFiber : public std::domain_error {
 public:
  SingularFiber() : std::domain_error("parameter point is a cusp: fiber is singular") {}
};
class NotThreeTorsion : public std::domain_error {
 public:
  NotThreeTorsion() : std::domain_error("point is not a rational 3-torsion point") {}
};

enum class Sign { direct, reverse };
inline const char* to_string(Sign s) { return s == Sign::direct ? "direct" : "reverse"; }

template <class K>
K unit_from(const K& a, const K& b, const K& c, const K& d) {
  for (const K* x : {&a, &b, &c, &d})
    if (!is_zero(*x)) return *x / *x;
  throw std::domain_error("cannot derive field unit from all-zero inputs");
}

// Quartic/sextic coefficient forms of the degree-3 congruent families:
//   A+ = c4 r^4 + 4 c6 r^3 s + 6 c4^2 r^2 s^2 + 4 c4 c6 r s^3 - (3 c4^3 - 4 c6^2) s^4
//   B+ = c6 r^6 + 6 c4^2 r^5 s + 15 c4 c6 r^4 s^2 + 20 c6^2 r^3 s^3
//        + 15 c4^2 c6 r^2 s^4 + 6 (3 c4^4 - 2 c4 c6^2) r s^5 + (9 c4^3 c6 - 8 c6^3) s^6
//   A- = -4 (r^4 - 6 c4 r^2 s^2 - 8 c6 r s^3 - 3 c4^2 s^4) / (c4^3 - c6^2)
//   B- = -8 B+ / (c4^3 - c6^2)^2
template <class K>
K hesse_A(Sign sign, const K& c4, const K& c6, const K& r, const K& s) {
  K u = unit_from(c4, c6, r, s);
  auto n = [&](int k) {
    K acc = u - u;
    for (int i = 0; i < k; ++i) acc = acc + u;
    return acc;
  };
  K r2 = r * r, s2 = s * s;
  if (sign == Sign::direct) {
    return c4 * r2 * r2 + n(4) * c6 * r2 * r * s + n(6) * c4 * c4 * r2 * s2 +
           n(4) * c4 * c6 * r * s2 * s - (n(3) * c4 * c4 * c4 - n(4) * c6 * c6) * s2 * s2;
  }
  K f = r2 * r2 - n(6) * c4 * r2 * s2 - n(8) * c6 * r * s2 * s - n(3) * c4 * c4 * s2 * s2;
  return ((u - u) - n(4) * f) / (c4 * c4 * c4 - c6 * c6);
}

template <class K>
K hesse_B_plus(const K& c4, const K& c6, const K& r, const K& s) {
  K u = unit_from(c4, c6, r, s);
  auto n = [&](int k) {
    K acc = u - u;
    for (int i = 0; i < k; ++i) acc = acc + u;
    return acc;
  };
  K r2 = r * r, r3 = r2 * r, s2 = s * s, s3 = s2 * s;
  return c6 * r3 * r3 + n(6) * c4 * c4 * r3 * r2 * s + n(15) * c4 * c6 * r2 * r2 * s2 +
         n(20) * c6 * c6 * r3 * s3 + n(15) * c4 * c4 * c6 * r2 * s2 * s2 +
         n(6) * (n(3) * c4 * c4 * c4 * c4 - n(2) * c4 * c6 * c6) * r * s3 * s2 +
         (n(9) * c4 * c4 * c4 * c6 - n(8) * c6 * c6 * c6) * s3 * s3;
}

template <class K>
K hesse_B(Sign sign, const K& c4, const K& c6, const K& r, const K& s) {
  K bp = hesse_B_plus(c4, c6, r, s);
  if (sign == Sign::direct) return bp;
  K u = unit_from(c4, c6, r, s);
  K eight = u + u;
  eight = eight + eight;
  eight = eight + eight;
  K den = c4 * c4 * c4 - c6 * c6;
  return ((u - u) - eight * bp) / (den * den);
}

// Family member y^2 = x^3 - 27 A(r,s) x - 54 B(r,s).
template <class K>
Curve<K> hesse_family(Sign sign, const K& c4, const K& c6, const K& r, const K& s) {
  K a = hesse_A(sign, c4, c6, r, s), b = hesse_B(sign, c4, c6, r, s);
  K u = unit_from(c4, c6, r, s);
  auto n = [&](int k) {
    K acc = u - u;
    for (int i = 0; i < k; ++i) acc = acc + u;
    return acc;
  };
  K zero = u - u;
  Curve<K> e{zero, zero, zero, zero - n(27) * a, zero - n(54) * b};
  if (is_zero(invariants(e).disc)) throw SingularFiber();
  return e;
}

// Cusp forms of X_E^{+/-}(3): roots of f_{+/-}(r, s) = 0.
// Symbolic over Q[c4, c6, r, s].
inline QPoly cusp_form(Sign sign) {
  std::vector<std::string> vars{"c4", "c6", "r", "s"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly c4 = v("c4"), c6 = v("c6"), r = v("r"), s = v("s");
  if (sign == Sign::direct) {
    return r.pow(4) - Rat(6) * c4 * r * r * s * s - Rat(8) * c6 * r * s.pow(3) -
           Rat(3) * c4 * c4 * s.pow(4);
  }
  return c4 * r.pow(4) + Rat(4) * c6 * r.pow(3) * s + Rat(6) * c4 * c4 * r * r * s * s +
         Rat(4) * c4 * c6 * r * s.pow(3) - (Rat(3) * c4.pow(3) - Rat(4) * c6 * c6) * s.pow(4);
}

// Symbolic A/B over Q[c4, c6, r, s]; for the reverse sign the denominator
// (c4^3 - c6^2)^{1,2} is cleared, i.e. these are the printed numerators.
inline QPoly hesse_A_sym(Sign sign) {
  std::vector<std::string> vars{"c4", "c6", "r", "s"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  if (sign == Sign::direct)
    return hesse_A(Sign::direct, v("c4"), v("c6"), v("r"), v("s"));
  return Rat(-4) * cusp_form(Sign::direct);
}
inline QPoly hesse_B_sym(Sign sign) {
  std::vector<std::string> vars{"c4", "c6", "r", "s"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly bp = hesse_B_plus(v("c4"), v("c6"), v("r"), v("s"));
  if (sign == Sign::direct) return bp;
  return Rat(-8) * bp;
}

// (r : s) over Q, normalized to coprime integers with r > 0, or (0, 1).
struct HessePoint {
  Int r, s;
  static HessePoint normalized(const Rat& r, const Rat& s) {
    if (is_zero(r) && is_zero(s)) throw std::invalid_argument("HessePoint: (0:0)");
    Int a = r.get_num() * s.get_den();
    Int b = s.get_num() * r.get_den();
    Int g = gcd(a, b);
    a /= g;
    b /= g;
    if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) {
      a = -a;
      b = -b;
    }
    return HessePoint{a, b};
  }
};

// Same fiber with the reverse denominators cleared, by evaluating at the
// rescaled point (q r : q s), q = c4^3 - c6^2.  This changes the model by the
// Q-isomorphism u = q, so congruence testing is unaffected.
inline Curve<Rat> hesse_family_integral(Sign sign, const Rat& c4, const Rat& c6, const Rat& r,
                                        const Rat& s) {
  if (sign == Sign::direct) return hesse_family(sign, c4, c6, r, s);
  Rat q = c4 * c4 * c4 - c6 * c6;
  return hesse_family(sign, c4, c6, Rat(q * r), Rat(q * s));
}

// y^2 + 3 t xy + (t^3 - Delta^{+/-1}) y = x^3.
template <class K>
Curve<K> torsion3_family(Sign sign, const K& delta, const K& t) {
  if (is_zero(delta)) throw SingularFiber();
  K one = delta / delta;
  K three = one + one + one;
  K d = sign == Sign::direct ? delta : one / delta;
  K zero = one - one;
  Curve<K> e{three * t, zero, t * t * t - d, zero, zero};
  if (is_zero(invariants(e).disc)) throw SingularFiber();
  return e;
}

struct Torsion3Curve {
  Rat a1, a3;
  // recorded change of variables from the input model: x = x' + r, y = y' + s x' + t
  Rat r, s, t;
  Rat disc() const { return pow_rat(a3, 3) * (pow_rat(a1, 3) - 27 * a3); }
};

// Move a rational 3-torsion point to (0,0) on y^2 + a1 xy + a3 y = x^3.
inline Torsion3Curve to_torsion_form(const Curve<Rat>& e, const Point<Rat>& tors) {
  if (tors.infinity || !on_curve(e, tors) || !(mul(e, tors, 3) == Point<Rat>::at_infinity()))
    throw NotThreeTorsion();
  // translate to the origin
  Curve<Rat> f = transform(e, Rat(1), tors.x, Rat(0), tors.y);
  // y <- y + s x to kill a4 (a3 != 0 since 2T != 0)
  if (is_zero(f.a3)) throw NotThreeTorsion();
  Rat s = f.a4 / f.a3;
  Curve<Rat> g = transform(f, Rat(1), Rat(0), s, Rat(0));
  if (!is_zero(g.a2) || !is_zero(g.a4) || !is_zero(g.a6)) throw NotThreeTorsion();
  return Torsion3Curve{g.a1, g.a3, tors.x, s, tors.y};
}

}  // namespace ninecong

#endif
