#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ninecong/count.hpp"
#include "ninecong/families3.hpp"
#include "ninecong/poly.hpp"

using namespace ninecong;

namespace {
std::mt19937 rng(40923);

// normal form in Q[a1,a3,dl,z] / (dl^3 - (a1^3 - 27 a3), z^2 + z + 1)
QPoly reduce_cubic_ring(QPoly p) {
  size_t id = p.index("dl"), iz = p.index("z");
  const auto& vars = p.vars();
  QPoly a1 = QPoly::variable(vars, "a1", Rat(1));
  QPoly a3 = QPoly::variable(vars, "a3", Rat(1));
  QPoly z = QPoly::variable(vars, "z", Rat(1));
  QPoly d3 = a1 * a1 * a1 - Rat(27) * a3;
  QPoly zred = -z - QPoly::constant(vars, Rat(1));
  bool changed = true;
  while (changed) {
    changed = false;
    QPoly out(vars);
    for (const auto& [e, c] : p.terms()) {
      QPoly m(vars);
      if (e[id] >= 3) {
        auto e2 = e;
        e2[id] -= 3;
        m.add_term(e2, c);
        out = out + m * d3;
        changed = true;
      } else if (e[iz] >= 2) {
        auto e2 = e;
        e2[iz] -= 2;
        m.add_term(e2, c);
        out = out + m * zred;
        changed = true;
      } else {
        out.add_term(e, c);
      }
    }
    p = out;
  }
  return p;
}
}  // namespace

TEST_CASE("direct family at (1:0) is the base curve") {
  std::uniform_int_distribution<int> d(-30, 30);
  int done = 0;
  while (done < 100) {
    Rat c4(d(rng)), c6(d(rng));
    if (is_zero(c4 * c4 * c4 - c6 * c6)) continue;
    Curve<Rat> e = hesse_family(Sign::direct, c4, c6, Rat(1), Rat(0));
    CHECK(e.a4 == Rat(-27) * c4);
    CHECK(e.a6 == Rat(-54) * c6);
    ++done;
  }
}

TEST_CASE("reverse family at (0:1)") {
  for (auto [a, b] : {std::pair<int, int>{2, 3}, {5, -1}, {-3, 7}}) {
    Rat c4(a), c6(b);
    Rat q = c4 * c4 * c4 - c6 * c6;
    REQUIRE(!is_zero(q));
    Rat A = hesse_A(Sign::reverse, c4, c6, Rat(0), Rat(1));
    Rat B = hesse_B(Sign::reverse, c4, c6, Rat(0), Rat(1));
    CHECK(A == Rat(12) * c4 * c4 / q);
    CHECK(B == Rat(-8) * (Rat(9) * pow_rat(c4, 3) * c6 - Rat(8) * pow_rat(c6, 3)) / (q * q));
  }
}

TEST_CASE("cusp form values at (1,0)") {
  Rat c4(11), c6(5);
  CHECK(cusp_form(Sign::direct).eval({c4, c6, Rat(1), Rat(0)}) == Rat(1));
  CHECK(cusp_form(Sign::reverse).eval({c4, c6, Rat(1), Rat(0)}) == c4);
}

TEST_CASE("quartic and sextic scaling under (r:s) -> (lr:ls)") {
  std::vector<std::string> vars{"c4", "c6", "r", "s", "l"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly c4 = v("c4"), c6 = v("c6"), r = v("r"), s = v("s"), l = v("l");
  QPoly Ap = hesse_A(Sign::direct, c4, c6, r, s);
  QPoly Bp = hesse_B_plus(c4, c6, r, s);
  CHECK(hesse_A(Sign::direct, c4, c6, l * r, l * s) == l.pow(4) * Ap);
  CHECK(hesse_B_plus(c4, c6, l * r, l * s) == l.pow(6) * Bp);
  // the reverse numerators -4 f_+ and -8 B^+ scale the same way
  QPoly fp = r.pow(4) - Rat(6) * c4 * r * r * s * s - Rat(8) * c6 * r * s.pow(3) -
             Rat(3) * c4 * c4 * s.pow(4);
  QPoly fps = (l * r).pow(4) - Rat(6) * c4 * (l * r) * (l * r) * (l * s) * (l * s) -
              Rat(8) * c6 * (l * r) * (l * s).pow(3) - Rat(3) * c4 * c4 * (l * s).pow(4);
  CHECK(fps == l.pow(4) * fp);

  // numerically the rescaled member is the same curve up to u = lambda
  Rat C4(3), C6(-5);
  for (Sign sg : {Sign::direct, Sign::reverse}) {
    Curve<Rat> e1 = hesse_family(sg, C4, C6, Rat(1), Rat(2));
    Curve<Rat> e2 = hesse_family(sg, C4, C6, Rat(3), Rat(6));
    auto u = is_isomorphic(e1, e2);
    REQUIRE(u.has_value());
    CHECK(abs(*u) == Rat(3));
  }
}

TEST_CASE("family discriminant is divisible by the cusp form") {
  std::vector<std::string> vars{"c4", "c6", "r", "s"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly q = v("c4").pow(3) - v("c6") * v("c6");

  QPoly A = hesse_A_sym(Sign::direct), B = hesse_B_sym(Sign::direct);
  QPoly D = A.pow(3) - B * B;
  QPoly fp = cusp_form(Sign::direct);
  QPoly quot = exact_divide(D, fp);
  CHECK(quot * fp == D);

  // reverse, with the denominator (c4^3-c6^2)^{1,2} cleared:
  // A^-3 - B^-2 = (At^3 q - Bt^2) / q^4
  QPoly At = hesse_A_sym(Sign::reverse), Bt = hesse_B_sym(Sign::reverse);
  QPoly Dm = At.pow(3) * q - Bt * Bt;
  QPoly fm = cusp_form(Sign::reverse);
  QPoly quotm = exact_divide(Dm, fm);
  CHECK(quotm * fm == Dm);
}

TEST_CASE("rational 3-torsion family") {
  Curve<Rat> e = torsion3_family(Sign::direct, Rat(5), Rat(2));
  CHECK(e.a1 == Rat(6));
  CHECK(e.a3 == Rat(3));
  CHECK(is_zero(e.a2));
  CHECK(is_zero(e.a4));
  CHECK(is_zero(e.a6));

  Curve<Rat> f = torsion3_family(Sign::direct, Rat(1), Rat(0));
  CHECK(f.a1 == Rat(0));
  CHECK(f.a3 == Rat(-1));  // y^2 - y = x^3

  Curve<Rat> g = torsion3_family(Sign::reverse, Rat(2), Rat(1));
  CHECK(g.a3 == Rat(1, 2));

  CHECK_THROWS_AS(torsion3_family(Sign::direct, Rat(1), Rat(1)), SingularFiber);
  CHECK_THROWS_AS(torsion3_family(Sign::direct, Rat(0), Rat(1)), SingularFiber);
  CHECK_THROWS_AS(torsion3_family(Sign::reverse, Rat(8), Rat(1, 2)), SingularFiber);

  // (0,0) is a 3-torsion point on every member
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 20; ++i) {
    Rat delta(d(rng)), t(d(rng));
    if (is_zero(delta)) continue;
    for (Sign sg : {Sign::direct, Sign::reverse}) {
      Curve<Rat> m;
      try {
        m = torsion3_family(sg, delta, t);
      } catch (const SingularFiber&) {
        continue;
      }
      Point<Rat> z = Point<Rat>::affine(Rat(0), Rat(0));
      REQUIRE(on_curve(m, z));
      CHECK(!(z == Point<Rat>::at_infinity()));
      CHECK(mul(m, z, 3) == Point<Rat>::at_infinity());
    }
  }
}

TEST_CASE("moving a 3-torsion point to (0,0)") {
  // already in torsion form: unchanged
  Curve<Rat> e = make_curve(Rat(2), Rat(0), Rat(3), Rat(0), Rat(0));
  Point<Rat> z = Point<Rat>::affine(Rat(0), Rat(0));
  Torsion3Curve tc = to_torsion_form(e, z);
  CHECK(tc.a1 == Rat(2));
  CHECK(tc.a3 == Rat(3));
  CHECK(tc.disc() == invariants(e).disc);

  // y^2 - y = x^3 with T = (0,0) -> (0, -1), disc -27
  Curve<Rat> f = make_curve(Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0));
  Torsion3Curve tf = to_torsion_form(f, z);
  CHECK(tf.a1 == Rat(0));
  CHECK(tf.a3 == Rat(-1));
  CHECK(tf.disc() == Rat(-27));
  CHECK(tf.disc() == invariants(f).disc);

  // translated models round-trip to an isomorphic torsion form
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 10; ++i) {
    Rat r(d(rng)), s(d(rng)), t(d(rng));
    Curve<Rat> e2 = transform(e, Rat(1), r, s, t);
    Point<Rat> z2 = transform_point(z, Rat(1), r, s, t);
    REQUIRE(on_curve(e2, z2));
    Torsion3Curve tr = to_torsion_form(e2, z2);
    Curve<Rat> g = make_curve(tr.a1, Rat(0), tr.a3, Rat(0), Rat(0));
    CHECK(is_isomorphic(g, e2).has_value());
    CHECK(mul(g, z, 3) == Point<Rat>::at_infinity());
    CHECK(tr.disc() == invariants(g).disc);
  }

  // y^2 = x^3 + 1: (0,1) has order 3, (2,3) has order 6
  Curve<Rat> h = make_short_curve(Rat(0), Rat(1));
  Torsion3Curve th = to_torsion_form(h, Point<Rat>::affine(Rat(0), Rat(1)));
  Curve<Rat> hh = make_curve(th.a1, Rat(0), th.a3, Rat(0), Rat(0));
  CHECK(is_isomorphic(hh, h).has_value());
  CHECK_THROWS_AS(to_torsion_form(h, Point<Rat>::affine(Rat(2), Rat(3))), NotThreeTorsion);
  CHECK_THROWS_AS(to_torsion_form(h, Point<Rat>::at_infinity()), NotThreeTorsion);
}

TEST_CASE("second 3-torsion generator in the cubic extension") {
  // work in Q[a1,a3,dl,z] / (dl^3 - (a1^3 - 27 a3), z^2 + z + 1) where
  // dl is a cube root of a1^3 - 27 a3 and z a primitive cube root of unity;
  // T' = (3 a3 / (dl - a1), a3 (z dl - a1) / (dl - a1)) with denominators cleared
  std::vector<std::string> vars{"a1", "a3", "dl", "z"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly a1 = v("a1"), a3 = v("a3"), dl = v("dl"), z = v("z");
  QPoly X = Rat(3) * a3;
  QPoly Y = a3 * (z * dl - a1);
  QPoly d = dl - a1;

  // curve equation for y^2 + a1 xy + a3 y = x^3, times d^3
  QPoly oncurve = Y * Y * d + a1 * X * Y * d + a3 * Y * d * d - X.pow(3);
  CHECK(reduce_cubic_ring(oncurve).is_zero_poly());

  // 3-division polynomial 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8 at x(T'), times d^4
  QPoly psi3 = Rat(3) * X.pow(4) + a1 * a1 * X.pow(3) * d + Rat(3) * a1 * a3 * X * X * d * d +
               Rat(3) * a3 * a3 * X * d.pow(3);
  CHECK(reduce_cubic_ring(psi3).is_zero_poly());
}

TEST_CASE("3-congruence of family members, mod-3 trace agreement") {
  std::vector<std::pair<int, int>> curves{{-1, 0}, {0, 1}, {-2, 3}, {1, 1}, {-7, 10}};
  std::vector<std::pair<int, int>> pts{{1, 1}, {1, -1}, {2, 1}, {1, 2}, {3, 1}};
  auto primes = odd_primes_up_to(200);
  for (auto [a, b] : curves) {
    Curve<Rat> e = make_short_curve(Rat(a), Rat(b));
    auto ve = invariants(e);
    for (auto [r, s] : pts) {
      for (Sign sg : {Sign::direct, Sign::reverse}) {
        Curve<Rat> m = hesse_family_integral(sg, ve.c4, ve.c6, Rat(r), Rat(s));
        for (uint64_t p : primes) {
          long ae, am;
          try {
            ae = ap(e, p);
            am = ap(m, p);
          } catch (const BadReduction&) {
            continue;
          }
          CHECK(((ae - am) % 3 + 3) % 3 == 0);
        }
      }
    }
  }
}

TEST_CASE("torsion family members sit in the quartic family") {
  // base curve y^2 + a1 xy + a3 y = x^3, discriminant a3^3 (a1^3 - 27 a3);
  // its parameter-t family member matches the quartic family at
  // (r,s) = (a1^2 t - a1^3 a3 + 36 a3^2, t - a1 a3), with the j-invariant
  // identity B^2 c4t^3 = A^3 c6t^2 after the 6^12 factors cancel
  std::vector<std::string> vars{"a1", "a3", "t"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly a1 = v("a1"), a3 = v("a3"), t = v("t");
  QPoly c4 = a1.pow(4) - Rat(24) * a1 * a3;
  QPoly c6 = -a1.pow(6) + Rat(36) * a1.pow(3) * a3 - Rat(216) * a3 * a3;
  QPoly delta = a3.pow(3) * (a1.pow(3) - Rat(27) * a3);
  auto inv4 = [](const QPoly& A1, const QPoly& A3) { return A1.pow(4) - Rat(24) * A1 * A3; };
  auto inv6 = [](const QPoly& A1, const QPoly& A3) {
    return -A1.pow(6) + Rat(36) * A1.pow(3) * A3 - Rat(216) * A3 * A3;
  };

  {
    QPoly A1 = Rat(3) * t, A3 = t.pow(3) - delta;
    QPoly c4t = inv4(A1, A3), c6t = inv6(A1, A3);
    QPoly r = a1 * a1 * t - a1.pow(3) * a3 + Rat(36) * a3 * a3;
    QPoly s = t - a1 * a3;
    QPoly A = hesse_A(Sign::direct, c4, c6, r, s);
    QPoly B = hesse_B_plus(c4, c6, r, s);
    CHECK(B * B * c4t.pow(3) == A.pow(3) * c6t * c6t);
  }
  {
    // reverse: member y^2 + 3t xy + (t^3 - 1/delta) y = x^3, rescaled by
    // u = 1/delta to (3 delta t, delta^3 t^3 - delta^2); quartic side uses the
    // cleared numerators At = -4 f_+, Bt = -8 B^+ over q = c4^3 - c6^2
    QPoly A1 = Rat(3) * delta * t, A3 = delta.pow(3) * t.pow(3) - delta * delta;
    QPoly c4t = inv4(A1, A3), c6t = inv6(A1, A3);
    QPoly r = (a1.pow(3) * a3 - Rat(36) * a3 * a3) * t + Rat(2) * a1 * a1;
    QPoly s = a1 * a3 * t + QPoly::constant(vars, Rat(2));
    QPoly q = c4.pow(3) - c6 * c6;
    QPoly fp = r.pow(4) - Rat(6) * c4 * r * r * s * s - Rat(8) * c6 * r * s.pow(3) -
               Rat(3) * c4 * c4 * s.pow(4);
    QPoly At = Rat(-4) * fp;
    QPoly Bt = Rat(-8) * hesse_B_plus(c4, c6, r, s);
    CHECK(Bt * Bt * c4t.pow(3) == q * At.pow(3) * c6t * c6t);
  }

  // numeric spot check: the two members are actually Q-isomorphic
  for (auto [A1v, A3v, tv] : {std::tuple<int, int, int>{1, 1, 2}, {2, -1, 1}, {1, 3, -2}}) {
    Rat A1(A1v), A3(A3v);
    Rat dv = pow_rat(A3, 3) * (pow_rat(A1, 3) - Rat(27) * A3);
    if (is_zero(dv)) continue;
    Curve<Rat> base = make_curve(A1, Rat(0), A3, Rat(0), Rat(0));
    auto vb = invariants(base);
    {
      Curve<Rat> m1 = torsion3_family(Sign::direct, dv, Rat(tv));
      Rat r = A1 * A1 * Rat(tv) - pow_rat(A1, 3) * A3 + Rat(36) * A3 * A3;
      Rat s = Rat(tv) - A1 * A3;
      Curve<Rat> m2 = hesse_family(Sign::direct, vb.c4, vb.c6, r, s);
      CHECK(is_isomorphic(m1, m2).has_value());
    }
    {
      Curve<Rat> m1 = torsion3_family(Sign::reverse, dv, Rat(tv));
      Rat r = (pow_rat(A1, 3) * A3 - Rat(36) * A3 * A3) * Rat(tv) + Rat(2) * A1 * A1;
      Rat s = A1 * A3 * Rat(tv) + Rat(2);
      Curve<Rat> m2 = hesse_family(Sign::reverse, vb.c4, vb.c6, r, s);
      CHECK(is_isomorphic(m1, m2).has_value());
    }
  }
}

TEST_CASE("projective point normalization") {
  auto p = HessePoint::normalized(Rat(4, 6), Rat(-2, 9));
  CHECK(p.r == 3);
  CHECK(p.s == -1);
  auto q = HessePoint::normalized(Rat(0), Rat(-7));
  CHECK(q.r == 0);
  CHECK(q.s == 1);
  auto w = HessePoint::normalized(Rat(-3), Rat(6));
  CHECK(w.r == 1);
  CHECK(w.s == -2);
  CHECK_THROWS_AS(HessePoint::normalized(Rat(0), Rat(0)), std::invalid_argument);
}
