#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ninecong/families3.hpp"
#include "ninecong/nagell.hpp"
#include "ninecong/surfaces.hpp"
#include "ninecong/weierstrass.hpp"

using namespace ninecong;

namespace {

std::mt19937 rng(50923);

const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

QPoly xv(const char* n) { return QPoly::variable(xyz(), n, Rat(1)); }
QPoly xc(const Rat& r) { return QPoly::constant(xyz(), r); }

// homogeneous cubic y^2 z + a1 xyz + a3 y z^2 - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3
QPoly weierstrass_cubic(const Curve<Rat>& e) {
  QPoly x = xv("x"), y = xv("y"), z = xv("z");
  return y * y * z + e.a1 * (x * y * z) + e.a3 * (y * z * z) - x * x * x - e.a2 * (x * x * z) -
         e.a4 * (x * z * z) - e.a6 * z.pow(3);
}

std::vector<std::vector<Rat>> random_gl3() {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    for (auto& row : m)
      for (auto& x : row) x = Rat(d(rng));
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (!is_zero(det)) return m;
  }
}

std::vector<std::vector<Rat>> adjugate3(const std::vector<std::vector<Rat>>& m) {
  auto cof = [&](size_t i, size_t j) -> Rat {
    size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  std::vector<std::vector<Rat>> a(3, std::vector<Rat>(3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) a[i][j] = cof(j, i);
  return a;
}

QPoly substitute_linear(const QPoly& p, const std::vector<std::vector<Rat>>& m) {
  const auto& vars = p.vars();
  std::map<std::string, QPoly> sub;
  for (size_t i = 0; i < vars.size(); ++i) {
    QPoly img(vars);
    for (size_t j = 0; j < vars.size(); ++j)
      img = img + m[i][j] * QPoly::variable(vars, vars[j], Rat(1));
    sub[vars[i]] = img;
  }
  return p.substitute(sub);
}

std::vector<Rat> mat_vec(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

bool good_evidence_parameter(Sign sign, const Rat& t0) {
  auto forward = [&](const Rat& t) -> Rat {
    if (sign == Sign::direct) return Rat(2) * t + Rat(3);
    return (Rat(2) * t - Rat(3)) / (Rat(2) * t + Rat(1));
  };
  auto backward = [&](const Rat& t) -> Rat {
    if (sign == Sign::direct) return (t - Rat(3)) / Rat(2);
    return (t + Rat(3)) / (Rat(2) - Rat(2) * t);
  };
  try {
    specialize(surface(sign), t0);
    reduced_proof_curve(sign, forward(t0));
    reduced_proof_curve(sign, backward(t0));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

TEST_CASE("both surfaces carry the section (0, 0) and are non-singular over Q(T)") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    auto s = surface(sign);
    CHECK(is_zero(s.a4));
    CHECK(is_zero(s.a6));
    Point<RatFun> p{false, RatFun(Rat(0)), RatFun(Rat(0))};
    CHECK(on_curve(s, p));
    CHECK(!is_zero(invariants(s).disc));
  }
}

TEST_CASE("reverse surface fiber at T = 0") {
  auto e = specialize(surface(Sign::reverse), Rat(0));
  CHECK(e.a1 == Rat(-6));
  CHECK(e.a2 == Rat(3));
  CHECK(e.a3 == Rat(-7));
  CHECK(is_zero(e.a4));
  CHECK(is_zero(e.a6));
}

TEST_CASE("section has infinite order: no multiple up to 12 vanishes on a good fiber") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    CAPTURE(to_string(sign));
    auto s = surface(sign);
    std::optional<SectionReport> rep;
    for (long t0 = 2; t0 <= 5 && !rep; ++t0) {
      try {
        rep = section_multiples(s, 12, Rat(t0));
      } catch (const BadSpecialization&) {
      }
    }
    REQUIRE(rep.has_value());
    CHECK(!rep->vanishing_multiple);
    CHECK(rep->infinite_order_certificate);
  }
}

TEST_CASE("substitution identities behind the surface parametrisations hold exactly") {
  auto d = surface_substitution_check(Sign::direct);
  CAPTURE(d.failures.empty() ? "" : d.failures[0]);
  CHECK(d.ok());
  auto r = surface_substitution_check(Sign::reverse);
  CAPTURE(r.failures.empty() ? "" : r.failures[0]);
  CHECK(r.ok());
}

TEST_CASE("plane cubic reduction: Fermat cubic") {
  QPoly x = xv("x"), y = xv("y"), z = xv("z");
  QPoly fermat = x.pow(3) + y.pow(3) + z.pow(3);
  Curve<Rat> e = nagell_reduce(fermat, {Rat(1), Rat(-1), Rat(0)});
  CHECK(j_invariant(e) == Rat(0));
  Curve<Rat> e432{Rat(0), Rat(0), Rat(0), Rat(0), Rat(-432)};
  CHECK(is_isomorphic(e, e432).has_value());
}

TEST_CASE("plane cubic reduction: error cases") {
  QPoly x = xv("x"), y = xv("y"), z = xv("z");
  CHECK_THROWS_AS(nagell_reduce(x.pow(3) + y.pow(3) + z.pow(3), {Rat(1), Rat(1), Rat(1)}),
                  SingularCubic);  // point not on the cubic
  CHECK_THROWS_AS(nagell_reduce(x * y * z, {Rat(1), Rat(0), Rat(0)}),
                  SingularCubic);  // singular point of a reducible cubic
  QPoly nodal = y * y * z - x.pow(3) - x * x * z;
  CHECK_THROWS_AS(nagell_reduce(nodal, {Rat(0), Rat(0), Rat(1)}), SingularCubic);
  CHECK_THROWS_AS(nagell_reduce(x * x * y, {Rat(0), Rat(0), Rat(1)}), std::exception);
}

TEST_CASE("plane cubic reduction recovers Weierstrass curves up to isomorphism") {
  std::vector<Curve<Rat>> curves{
      {Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)},   // 37a1
      {Rat(0), Rat(0), Rat(1), Rat(-7), Rat(6)},   // 5077a1
  };
  for (const auto& e : curves) {
    QPoly cubic = weierstrass_cubic(e);
    std::vector<Rat> origin{Rat(0), Rat(1), Rat(0)};
    Curve<Rat> back = nagell_reduce(cubic, origin);
    CHECK(is_isomorphic(back, e).has_value());
    // the same curve in random projective coordinates
    for (int k = 0; k < 5; ++k) {
      auto m = random_gl3();
      QPoly moved = substitute_linear(cubic, m);
      std::vector<Rat> pt = mat_vec(adjugate3(m), origin);
      Curve<Rat> again = nagell_reduce(moved, pt);
      CHECK(j_invariant(again) == j_invariant(e));
    }
  }
}

TEST_CASE("quadric intersection projection") {
  std::vector<std::string> uvars{"u0", "u1", "u2", "u3"};
  auto uv = [&](const char* n) { return QPoly::variable(uvars, n, Rat(1)); };
  QPoly u0 = uv("u0"), u1 = uv("u1"), u2 = uv("u2"), u3 = uv("u3");

  // (1 : x : x^2 : y) on y^2 = x^3 + 1
  QPoly q1 = u1 * u1 - u0 * u2;
  QPoly q2 = u3 * u3 - u1 * u2 - u0 * u0;
  auto [cubic, pt] = project_quadric_intersection(q1, q2, {Rat(1), Rat(0), Rat(0), Rat(1)});
  Curve<Rat> e = nagell_reduce(cubic, pt);
  CHECK(j_invariant(e) == Rat(0));
  Curve<Rat> target{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
  CHECK(is_isomorphic(e, target).has_value());

  CHECK_THROWS_AS(project_quadric_intersection(q1, q2, {Rat(1), Rat(1), Rat(1), Rat(1)}),
                  DegenerateProjection);
  // reducible pair, singular at the marked point
  CHECK_THROWS_AS(
      project_quadric_intersection(u0 * u1, u0 * u2, {Rat(0), Rat(0), Rat(0), Rat(1)}),
      DegenerateProjection);
}

TEST_CASE("fibers of the surfaces match the reduced parametrising curves by j") {
  for (Sign sign : {Sign::direct, Sign::reverse}) {
    CAPTURE(to_string(sign));
    std::vector<Rat> t0s;
    for (long t = 2; t0s.size() < 3 && t <= 20; ++t)
      if (good_evidence_parameter(sign, Rat(t))) t0s.push_back(Rat(t));
    REQUIRE(t0s.size() == 3);
    auto ev = surface_j_evidence(sign, t0s);
    REQUIRE(ev.size() == 3);
    for (const auto& e : ev) {
      CAPTURE(to_string(e.t0));
      CHECK(e.match);
    }
  }
}

TEST_CASE("three-torsion pencil: Hesse cubic at (t+2)/(t-1) has the j of the t-fiber") {
  QPoly x = xv("x"), y = xv("y"), z = xv("z");
  for (long t : {2, 3, 4, 5, 7}) {
    CAPTURE(t);
    Curve<Rat> e = torsion3_family(Sign::direct, Rat(1), Rat(t));
    Rat mu = Rat(t + 2) / Rat(t - 1);
    QPoly hesse = x.pow(3) + y.pow(3) + z.pow(3) - xc(Rat(3) * mu) * (x * y * z);
    Curve<Rat> h = nagell_reduce(hesse, {Rat(1), Rat(-1), Rat(0)});
    CHECK(j_invariant(h) == j_invariant(e));
  }
}
