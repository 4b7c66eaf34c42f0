#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ninecong/catalog.hpp"
#include "ninecong/count.hpp"
#include "ninecong/fp.hpp"
#include "ninecong/modular9.hpp"
#include "ninecong/ratfun.hpp"
#include "ninecong/specialize.hpp"

using namespace ninecong;

namespace {

std::vector<Rat> mat_vec(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& v) {
  std::vector<Rat> r(4, Rat(0));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

template <class C>
C quad_coeff(const Poly<C>& F, const std::vector<C>& P, const std::vector<C>& Q, const C& two) {
  C acc = two - two;
  auto H = hessian_matrix(F);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) acc = acc + Q[i] * H[i][j].eval(P) * Q[j];
  return acc / two;
}

Curve<RatFun> short_curve_qt(const UPoly& a, const UPoly& b) {
  return Curve<RatFun>{RatFun(), RatFun(), RatFun(), RatFun(a), RatFun(b)};
}

void check_mod9_pair(const Curve<Rat>& e1, const Curve<Rat>& e2, uint64_t bound,
                     uint64_t witness_bound) {
  bool mismatch = false;
  int rows = 0;
  for (uint64_t p : odd_primes_up_to(bound)) {
    long a1, a2;
    try {
      a1 = ap(e1, p);
      a2 = ap(e2, p);
    } catch (const BadReduction&) {
      continue;
    }
    ++rows;
    CHECK((a1 - a2) % 9 == 0);
    if (a1 != a2 && p <= witness_bound) mismatch = true;
  }
  CHECK(rows > 5);
  CHECK(mismatch);
}

}  // namespace

TEST_CASE("twisted models are homogeneous cubics and reject singular curves") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    auto m = twisted_model(Rat(-2), Rat(3), sign);
    CHECK(m.F1.is_homogeneous());
    CHECK(m.F2.is_homogeneous());
    CHECK(m.F1.total_degree() == 3);
    CHECK(m.F2.total_degree() == 3);
    CHECK_THROWS_AS(twisted_model(Rat(0), Rat(0), sign), SingularCurve);
    CHECK_THROWS_AS(twisted_model(Rat(-3), Rat(2), sign), SingularCurve);  // 4a^3+27b^2 = 0
  }
}

TEST_CASE("symbolic twisted model specializes to the coefficient-level one") {
  std::vector<std::string> vars{"a", "b", "x", "y", "z", "t"};
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    auto sym = twisted_model_sym(sign, vars);
    auto num = twisted_model(Rat(5), Rat(-7), sign);
    std::vector<Rat> xyzt{Rat(2), Rat(-3), Rat(1), Rat(4)};
    std::vector<Rat> full{Rat(5), Rat(-7), xyzt[0], xyzt[1], xyzt[2], xyzt[3]};
    CHECK(sym.F1.eval(full) == num.F1.eval(xyzt));
    CHECK(sym.F2.eval(full) == num.F2.eval(xyzt));
  }
}

TEST_CASE("weighted scaling covariance of the twisted cubics") {
  std::vector<std::string> vars{"l", "a", "b", "x", "y", "z", "t"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly l = v("l");
  std::map<std::string, QPoly> dir{{"a", l * l * v("a")},     {"b", l * l * l * v("b")},
                                   {"x", l * l * l * v("x")}, {"y", l * l * v("y")},
                                   {"z", l * v("z")},         {"t", v("t")},
                                   {"l", l}};
  std::map<std::string, QPoly> rev = dir;
  rev["x"] = l * l * v("x");
  rev["y"] = l * v("y");

  auto md = twisted_model_sym(Sign::direct, vars);
  CHECK(md.F1.substitute(dir) == l.pow(6) * md.F1);
  CHECK(md.F2.substitute(dir) == l.pow(7) * md.F2);
  auto mr = twisted_model_sym(Sign::reverse, vars);
  CHECK(mr.F1.substitute(rev) == l.pow(5) * mr.F1);
  CHECK(mr.F2.substitute(rev) == l.pow(6) * mr.F2);
}

TEST_CASE("universal Hessian pencil determinant factors as printed") {
  std::vector<std::string> vars{"a", "b", "c", "d", "t"};
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly a = v("a"), b = v("b"), c = v("c"), d = v("d"), t = v("t");
  QPoly F1 = a * a * b + b * b * c + c * c * a;
  QPoly F2 = a * b * b + b * c * c + c * a * a - d.pow(3);
  QPoly det_h = det(hessian_matrix(t * F1 - F2, {0, 1, 2, 3}));
  QPoly expected = Rat(-48) * (t.pow(3) - QPoly::constant(vars, Rat(1))) *
                   (a.pow(3) + b.pow(3) + c.pow(3) - Rat(3) * a * b * c) * d;
  CHECK(det_h == expected);
}

TEST_CASE("forgetful map on the universal model") {
  // (1:0:0:0) and (0:0:1:0) lie on the model with d = 0, so the map is infinite
  auto v1 = universal_forget({Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(v1.infinite);
  auto v2 = universal_forget({Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(v2.infinite);
  CHECK_THROWS_AS(universal_forget({Rat(1), Rat(1), Rat(1), Rat(1)}), NotOnModel);
}

TEST_CASE("tangent process flags cusps and singular points") {
  auto m = universal_model();
  CHECK_THROWS_AS(forget9_rs(m, {Rat(0), Rat(0), Rat(1), Rat(0)}), CuspPoint);
  CHECK_THROWS_AS(forget9_rs(m, {Rat(1), Rat(0), Rat(0), Rat(0)}), CuspPoint);
  CHECK_THROWS_AS(tangent_expansion(m, {Rat(1), Rat(1), Rat(1), Rat(1)}), NotOnModel);

  std::vector<std::string> vars{"x", "y", "z", "t"};
  auto x = QPoly::variable(vars, "x", Rat(1)), y = QPoly::variable(vars, "y", Rat(1));
  CubicPair<Rat> degenerate{x.pow(3), x * x * y};
  CHECK_THROWS_AS(tangent_expansion(degenerate, {Rat(0), Rat(0), Rat(1), Rat(0)}), SingularPoint);
}

TEST_CASE("direct 9-congruent triple from the height-5 points") {
  const auto& ex = twisted_example_case("ex-47775-direct");
  auto m = twisted_model(ex.a, ex.b, ex.sign);
  QPoly g1 = apply_matrix(m.F1, ex.matrix, Rat(1));
  QPoly g2 = apply_matrix(m.F2, ex.matrix, Rat(1));
  REQUIRE(ex.points.size() == 3);
  for (size_t i = 0; i < ex.points.size(); ++i) {
    CAPTURE(i);
    CHECK(is_zero(g1.eval(ex.points[i])));
    CHECK(is_zero(g2.eval(ex.points[i])));
    std::vector<Rat> orig = mat_vec(ex.matrix, ex.points[i]);
    CHECK(is_zero(m.F1.eval(orig)));
    CHECK(is_zero(m.F2.eval(orig)));
    auto out = nine_congruent_curve(ex.a, ex.b, orig, ex.sign);
    CHECK(is_isomorphic(out, ex.expected[i]).has_value());
  }
  // the y^2 = x^3 + a x + b model is the base curve up to isomorphism
  CHECK(is_isomorphic(make_short_curve(ex.a, ex.b), ex.base_curve).has_value());
}

TEST_CASE("reverse 9-congruent curve from the printed point") {
  const auto& ex = twisted_example_case("ex-201-reverse");
  auto m = twisted_model(ex.a, ex.b, ex.sign);
  QPoly g1 = apply_matrix(m.F1, ex.matrix, Rat(1));
  QPoly g2 = apply_matrix(m.F2, ex.matrix, Rat(1));
  REQUIRE(ex.points.size() == 1);
  CHECK(is_zero(g1.eval(ex.points[0])));
  CHECK(is_zero(g2.eval(ex.points[0])));
  std::vector<Rat> orig = mat_vec(ex.matrix, ex.points[0]);
  auto out = nine_congruent_curve(ex.a, ex.b, orig, ex.sign);
  CHECK(is_isomorphic(out, ex.expected[0]).has_value());
}

TEST_CASE("one-parameter examples match the printed forgetful images") {
  for (const auto& qt : qt_cases()) {
    CAPTURE(qt.id);
    RatFun a(qt.a), b(qt.b);
    auto m = twisted_model(a, b, qt.sign);
    std::vector<RatFun> P;
    for (const auto& c : qt.point) P.emplace_back(c);
    CHECK(is_zero(m.F1.eval(P)));
    CHECK(is_zero(m.F2.eval(P)));
    auto [r, s] = forget9_rs(m, P);
    CHECK(r * RatFun(qt.s) == s * RatFun(qt.r));

    // specializing gives a 9-congruent, non-isogenous pair over Q
    auto member = nine_congruent_curve(a, b, P, qt.sign);
    Curve<Rat> e1 = specialize(short_curve_qt(qt.a, qt.b), qt.t0);
    Curve<Rat> e2 = specialize(member, qt.t0);
    check_mod9_pair(e1, e2, 100, 100);
  }
}

TEST_CASE("printed triples are pairwise congruent mod 9 and non-isogenous") {
  for (const auto& tc : triple_cases()) {
    CAPTURE(tc.id);
    REQUIRE(tc.curves.size() == 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) check_mod9_pair(tc.curves[i], tc.curves[j], 100, 100);
  }
}

TEST_CASE("level-9 matrices act on the universal model") {
  auto rep = sl2_action_check();
  for (const auto& f : rep.failures) FAIL_CHECK(f);
  CHECK(rep.ok());
}

TEST_CASE("Hessian pencil factorization splits off the cusp form") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    CAPTURE(to_string(sign));
    auto fac = hessian_pencil_factorization(sign);
    CHECK(!fac.D.is_zero_poly());
    for (const auto& [e, c] : fac.D.terms()) {
      CHECK(e[2] == 0);  // no r
      CHECK(e[3] == 0);  // no s
      CHECK(e[4] + e[5] + e[6] + e[7] == 4);
    }
    // independent numeric spot check of det H(3r F1 - s F2) = f D
    for (auto [c4v, c6v] : {std::pair<long, long>{2, 3}, {1, -2}}) {
      Rat c4(c4v), c6(c6v), r(1), s(2);
      Rat av = Rat(-27) * c4, bv = Rat(-54) * c6;
      auto m = twisted_model(av, bv, sign);
      QPoly g = Rat(3) * r * m.F1 - s * m.F2;
      QPoly dh = det(hessian_matrix(g));
      std::vector<Rat> xyzt{Rat(1), Rat(2), Rat(3), Rat(5)};
      std::vector<Rat> full{c4, c6, r, s, xyzt[0], xyzt[1], xyzt[2], xyzt[3]};
      CHECK(dh.eval(xyzt) == fac.f.eval(full) * fac.D.eval(full));
    }
  }
}

TEST_CASE("tangent matrix conjugates the Hessians into rank-one forms modulo the ideal") {
  auto m = universal_model();
  auto L = lambda_matrix(m);
  const auto& vars = m.F1.vars();
  auto v = [&](const char* n) { return QPoly::variable(vars, n, Rat(1)); };
  QPoly a = v("a"), b = v("b"), c = v("c"), d = v("d");
  QPoly Dq = (a.pow(3) + b.pow(3) + c.pow(3) - Rat(3) * a * b * c) * d;
  QPoly gamma1 = Rat(-18) * d.pow(3);
  QPoly gamma2 = Rat(6) * (a.pow(3) + b.pow(3) + c.pow(3) + Rat(6) * a * b * c);
  std::vector<QPoly> xs{a, b, c, d};

  for (int which : {1, 2}) {
    const QPoly& F = which == 1 ? m.F1 : m.F2;
    const QPoly& gamma = which == 1 ? gamma1 : gamma2;
    auto H = hessian_matrix(F);
    // LHL with L alternating and H symmetric is symmetric: check i <= j
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i; j < 4; ++j) {
        QPoly entry(vars);
        for (size_t k = 0; k < 4; ++k)
          for (size_t l = 0; l < 4; ++l) entry = entry + L[i][k] * H[k][l] * L[l][j];
        QPoly diff = entry - gamma * Dq * xs[i] * xs[j];
        CAPTURE(which);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(cofactor_solve(diff, m.F1, m.F2, 6, Rat(0), Rat(1)).has_value());
      }
  }
}

TEST_CASE("torsion-coordinate models") {
  auto u = torsion_model_universal();
  CHECK(u.F1.is_homogeneous());
  CHECK(u.F2.is_homogeneous());

  CHECK_THROWS_AS(torsion_model(Rat(2), Rat(0), Sign::direct), SingularCurve);
  CHECK_THROWS_AS(torsion_model(Rat(1), Rat(1), Sign::direct), SingularCurve);
  CHECK_THROWS_AS(torsion_model(Rat(2), Rat(8), Sign::reverse), SingularCurve);

  // (1:0:0:1) always lies on the direct model
  auto md = torsion_model(Rat(2), Rat(3), Sign::direct);
  std::vector<Rat> p{Rat(1), Rat(0), Rat(0), Rat(1)};
  CHECK(is_zero(md.F1.eval(p)));
  CHECK(is_zero(md.F2.eval(p)));
}

TEST_CASE("bridge between the torsion and twisted coordinates") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    CAPTURE(to_string(sign));
    auto rep = torsion_bridge(sign);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.det_ok);
    CHECK(rep.span_ok);
    CHECK(rep.basis_invertible);
  }
}

TEST_CASE("forgetful pair is invariant under point scaling and tangent-vector changes") {
  int checked = 0;
  for (uint64_t p : {11ull, 13ull}) {
    for (Sign sign : {Sign::direct, Sign::reverse}) {
      Fp a(p - 1, p), b(1, p), zero(0, p), one(1, p);
      auto m = twisted_model(a, b, sign);
      // enumerate representatives of P^3(F_p)
      std::vector<std::vector<Fp>> pts;
      auto consider = [&](std::vector<Fp> v) {
        if (is_zero(m.F1.eval(v)) && is_zero(m.F2.eval(v))) pts.push_back(std::move(v));
      };
      for (uint64_t y = 0; y < p; ++y)
        for (uint64_t z = 0; z < p; ++z)
          for (uint64_t t = 0; t < p; ++t) consider({one, Fp(y, p), Fp(z, p), Fp(t, p)});
      for (uint64_t z = 0; z < p; ++z)
        for (uint64_t t = 0; t < p; ++t) consider({zero, one, Fp(z, p), Fp(t, p)});
      for (uint64_t t = 0; t < p; ++t) consider({zero, zero, one, Fp(t, p)});
      consider({zero, zero, zero, one});

      for (const auto& P : pts) {
        TangentExpansion<Fp> te = [&]() -> TangentExpansion<Fp> {
          try {
            return tangent_expansion(m, P);
          } catch (const std::domain_error&) {
            return TangentExpansion<Fp>{{}, {}, zero, zero, zero, zero};
          }
        }();
        if (te.P.empty()) continue;
        if (is_zero(te.g1) && is_zero(te.g2)) continue;  // cusp mod p

        // scaling the point leaves (r : s) unchanged projectively
        Fp c(7, p);
        std::vector<Fp> scaled{c * P[0], c * P[1], c * P[2], c * P[3]};
        auto [r1, s1] = forget9_rs(m, P);
        auto [r2, s2] = forget9_rs(m, scaled);
        CHECK(r1 * s2 == s1 * r2);

        // replacing Q by alpha P + beta Q scales both quadratic coefficients by beta^2
        Fp alpha(3, p), beta(2, p), two(2, p);
        std::vector<Fp> q2(4, zero);
        for (size_t i = 0; i < 4; ++i) q2[i] = alpha * P[i] + beta * te.Q[i];
        Fp g1p = quad_coeff(m.F1, P, q2, two);
        Fp g2p = quad_coeff(m.F2, P, q2, two);
        CHECK(g1p == beta * beta * te.g1);
        CHECK(g2p == beta * beta * te.g2);
        ++checked;
        if (checked >= 40) break;
      }
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("catalog lookups") {
  CHECK(all_case_ids().size() == 6);
  CHECK_THROWS_AS(twisted_example_case("triple-1701"), UnknownEquations);
  CHECK_THROWS_AS(triple_case("triple-1701"), UnknownEquations);
  for (const auto& tc : triple_cases()) {
    CHECK(tc.labels.size() == tc.curves.size());
    for (const auto& e : tc.curves) CHECK(!is_zero(invariants(e).disc));
  }
}
