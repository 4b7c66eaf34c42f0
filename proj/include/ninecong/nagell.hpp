#ifndef NINECONG_NAGELL_HPP
#define NINECONG_NAGELL_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "unipoly.hpp"
#include "weierstrass.hpp"

namespace ninecong {

class SingularCubic : public std::domain_error {
 public:
  explicit SingularCubic(const std::string& why) : std::domain_error(why) {}
};
class DegenerateProjection : public std::domain_error {
 public:
  explicit DegenerateProjection(const std::string& why) : std::domain_error(why) {}
};

// invertible M with M e_n = P, for moving a marked point to the last coordinate
inline std::vector<std::vector<Rat>> move_point_matrix(const std::vector<Rat>& P) {
  size_t n = P.size();
  size_t k = n;
  for (size_t i = 0; i < n; ++i)
    if (!is_zero(P[i])) {
      k = i;
      break;
    }
  if (k == n) throw std::invalid_argument("move_point_matrix: zero vector");
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  size_t col = 0;
  for (size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    M[i][col++] = Rat(1);
  }
  for (size_t i = 0; i < n; ++i) M[i][n - 1] = P[i];
  return M;
}

// Jacobian of y^2 = quartic(t) via the classical binary-quartic invariants
//   I = 12ae - 3bd + c^2,  J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3,
// giving Y^2 = X^3 - 27 I X - 27 J.
inline Curve<Rat> quartic_jacobian(const UPoly& g) {
  if (g.degree() > 4) throw std::invalid_argument("quartic_jacobian: degree > 4");
  Rat a = g.coeff(4), b = g.coeff(3), c = g.coeff(2), d = g.coeff(1), e = g.coeff(0);
  Rat I = Rat(12) * a * e - Rat(3) * b * d + c * c;
  Rat J = Rat(72) * a * c * e + Rat(9) * b * c * d - Rat(27) * a * d * d - Rat(27) * b * b * e -
          Rat(2) * c * c * c;
  Curve<Rat> E{Rat(0), Rat(0), Rat(0), Rat(-27) * I, Rat(-27) * J};
  if (is_zero(invariants(E).disc)) throw SingularCubic("quartic has a repeated root");
  return E;
}

// Reduce a plane cubic with a marked smooth rational point to Weierstrass form.
// Lines of slope t through the point meet the cubic in two further points;
// their coordinates satisfy y^2 = g(t) for a quartic g, whose Jacobian is the
// desired curve (the curve has a rational point, so it equals its Jacobian).
inline Curve<Rat> nagell_reduce(const QPoly& cubic, const std::vector<Rat>& point) {
  if (cubic.vars().size() != 3 || !cubic.is_homogeneous() || cubic.total_degree() != 3)
    throw std::invalid_argument("nagell_reduce: need a ternary cubic form");
  if (point.size() != 3) throw std::invalid_argument("nagell_reduce: need a projective point");
  if (!is_zero(cubic.eval(point))) throw SingularCubic("marked point not on the cubic");
  bool smooth = false;
  for (size_t i = 0; i < 3; ++i)
    if (!is_zero(cubic.derivative(i).eval(point))) smooth = true;
  if (!smooth) throw SingularCubic("marked point is singular");

  auto M = move_point_matrix(point);
  const auto& vars = cubic.vars();
  std::map<std::string, QPoly> sub;
  for (size_t i = 0; i < 3; ++i) {
    QPoly img(vars);
    for (size_t j = 0; j < 3; ++j)
      img = img + M[i][j] * QPoly::variable(vars, vars[j], Rat(1));
    sub[vars[i]] = img;
  }
  QPoly G = cubic.substitute(sub);  // marked point now at (0:0:1)

  // f(x, y) = G(x, y, 1) = f1 + f2 + f3; f_d(1, t) as univariate polynomials
  std::vector<UPoly> fd(4);
  for (const auto& [e, c] : G.terms()) {
    int d = e[0] + e[1];
    std::vector<Rat> mono(size_t(e[1]) + 1, Rat(0));
    mono.back() = c;
    fd[d] = fd[d] + UPoly(std::move(mono));
  }
  if (!fd[0].is_zero_poly()) throw std::logic_error("nagell_reduce: point left the cubic");
  if (fd[1].is_zero_poly()) throw SingularCubic("marked point is singular");

  UPoly g = fd[2] * fd[2] - Rat(4) * fd[1] * fd[3];
  if (g.is_zero_poly()) throw SingularCubic("cubic is reducible through the marked point");
  return quartic_jacobian(g);
}

// Project a quadric intersection in P^3 from a marked point on it, giving a
// plane cubic with the image of the tangent direction as marked point.
inline std::pair<QPoly, std::vector<Rat>> project_quadric_intersection(
    const QPoly& q1, const QPoly& q2, const std::vector<Rat>& point) {
  for (const QPoly* q : {&q1, &q2}) {
    if (q->vars().size() != 4 || !q->is_homogeneous() || q->total_degree() != 2)
      throw std::invalid_argument("project_quadric_intersection: need quadrics in 4 variables");
    if (!is_zero(q->eval(point)))
      throw DegenerateProjection("marked point not on both quadrics");
  }
  // Jacobian rank 2 at the point
  std::vector<Rat> j1(4), j2(4);
  for (size_t i = 0; i < 4; ++i) {
    j1[i] = q1.derivative(i).eval(point);
    j2[i] = q2.derivative(i).eval(point);
  }
  bool rank2 = false;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (!is_zero(j1[i] * j2[j] - j1[j] * j2[i])) rank2 = true;
  if (!rank2) throw DegenerateProjection("marked point is not smooth on the intersection");

  auto M = move_point_matrix(point);
  const auto& vars = q1.vars();
  std::map<std::string, QPoly> sub;
  for (size_t i = 0; i < 4; ++i) {
    QPoly img(vars);
    for (size_t j = 0; j < 4; ++j)
      img = img + M[i][j] * QPoly::variable(vars, vars[j], Rat(1));
    sub[vars[i]] = img;
  }
  // with the point at (0:0:0:1): q_i = beta_i(x,y,z) w + gamma_i(x,y,z)
  std::vector<std::string> v3{vars[0], vars[1], vars[2]};
  auto strip = [&](const QPoly& p, int wdeg) {
    QPoly out(v3);
    for (const auto& [e, c] : p.terms()) {
      if (e[3] != wdeg) continue;
      out.add_term({e[0], e[1], e[2]}, c);
    }
    return out;
  };
  QPoly Q1 = q1.substitute(sub), Q2 = q2.substitute(sub);
  QPoly b1 = strip(Q1, 1), g1 = strip(Q1, 0);
  QPoly b2 = strip(Q2, 1), g2 = strip(Q2, 0);
  QPoly cubic = b1 * g2 - b2 * g1;
  if (cubic.is_zero_poly()) throw DegenerateProjection("projected image is not a cubic");

  // image of the marked point: the intersection of the planes beta_1 = beta_2 = 0
  auto coeffs = [&](const QPoly& b) {
    std::vector<Rat> c(3, Rat(0));
    for (const auto& [e, cc] : b.terms())
      for (size_t i = 0; i < 3; ++i)
        if (e[i] == 1) c[i] = cc;
    return c;
  };
  auto c1 = coeffs(b1), c2 = coeffs(b2);
  std::vector<Rat> img{c1[1] * c2[2] - c1[2] * c2[1], c1[2] * c2[0] - c1[0] * c2[2],
                       c1[0] * c2[1] - c1[1] * c2[0]};
  if (is_zero(img[0]) && is_zero(img[1]) && is_zero(img[2]))
    throw DegenerateProjection("projection center has a degenerate tangent image");
  if (!is_zero(cubic.eval(img)))
    throw std::logic_error("project_quadric_intersection: image point left the cubic");
  return {cubic, img};
}

}  // namespace ninecong

#endif
