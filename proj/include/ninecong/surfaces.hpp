#ifndef NINECONG_SURFACES_HPP
#define NINECONG_SURFACES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modular9.hpp"
#include "nagell.hpp"
#include "ratfun.hpp"
#include "specialize.hpp"
#include "weierstrass.hpp"

namespace ninecong {

// The two elliptic surfaces parametrising pairs of 9-congruent curves,
// as long Weierstrass equations over Q(T) with the section (0, 0).
inline Curve<RatFun> surface(Sign sign) {
  UPoly T = UPoly::var();
  auto c = [](long k) { return UPoly(Rat(k)); };
  if (sign == Sign::direct) {
    UPoly a1 = c(6) * T * T + c(3) * T + c(2);
    UPoly a2 = -(c(16) * T.pow(4) + c(12) * T.pow(3) + c(9) * T * T + c(6) * T + c(1));
    UPoly a3 = T * T * (T + c(1)) * (c(4) * T.pow(3) + c(9) * T + c(9));
    return Curve<RatFun>{RatFun(a1), RatFun(a2), RatFun(a3), RatFun(), RatFun()};
  }
  UPoly a1 = c(12) * T.pow(3) + c(3) * T * T - c(6);
  UPoly a2 = c(-3) * (T + c(1)) * (T.pow(3) - c(1)) * (c(9) * T * T + c(2) * T + c(1));
  UPoly a3 = (T - c(1)).pow(3) * (T.pow(3) - c(1)) * (c(4) * T.pow(3) - c(3) * T - c(7));
  return Curve<RatFun>{RatFun(a1), RatFun(a2), RatFun(a3), RatFun(), RatFun()};
}

struct SectionReport {
  Rat t0;
  int n_max = 0;
  std::optional<int> vanishing_multiple;  // smallest n <= n_max with n.(0,0) = O
  bool infinite_order_certificate = false;
};

// Computes n.(0,0) on the fiber at T = t0 for n = 1..n_max.  If no multiple
// vanishes for n_max >= 12, the section has infinite order: torsion over Q has
// order at most 12 and specialization at a good fiber is injective on torsion.
inline SectionReport section_multiples(const Curve<RatFun>& s, int n_max, const Rat& t0) {
  Curve<Rat> e = specialize(s, t0);  // throws BadSpecialization on bad fibers
  Point<Rat> p{false, Rat(0), Rat(0)};
  if (!on_curve(e, p)) throw BadSpecialization("(0, 0) is not on the fiber");
  SectionReport rep;
  rep.t0 = t0;
  rep.n_max = n_max;
  Point<Rat> acc = p;
  for (int n = 1; n <= n_max; ++n) {
    if (acc.infinity) {
      rep.vanishing_multiple = n;
      break;
    }
    acc = add(e, acc, p);
  }
  rep.infinite_order_certificate = !rep.vanishing_multiple && n_max >= 12;
  return rep;
}

// The genus-one curves appearing in the birationality proof, with marked
// points, fibred over the parameter T.
//   direct:  plane cubic g0 h1 - g1 h0 in (u, v, w), point (12 : T-6 : -1)
//   reverse: quadric intersection q1 = q2 = 0 in (u, v, w, s), point (2:1:1:0)
namespace proofcurves {

inline const std::vector<std::string>& dvars() {
  static const std::vector<std::string> v{"T", "u", "v", "w", "s"};
  return v;
}

inline QPoly pv(const char* n) { return QPoly::variable(dvars(), n, Rat(1)); }
inline QPoly pc(long k) { return QPoly::constant(dvars(), Rat(k)); }

inline QPoly g0() {
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w");
  return u * u + pc(3) * u * v + pc(3) * v * v + pc(9) * u * w + pc(6) * T * v * w +
         pc(3) * (T * T - pc(12) * T + pc(24)) * w * w;
}
inline QPoly g1() {
  QPoly T = pv("T");
  return T.pow(3) - pc(9) * T * T + pc(36) * T - pc(36);
}
inline QPoly h0() {
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w");
  return v * v * w - (T - pc(1)) * u * w * w + pc(2) * (T - pc(6)) * v * w * w +
         (T * T - pc(24) * T + pc(48)) * w.pow(3);
}
inline QPoly h1() {
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w");
  return u + (T * T - pc(6) * T + pc(12)) * v - pc(3) * (T - pc(2)) * (T - pc(6)) * w;
}
inline QPoly q1() {
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w"), s = pv("s");
  return pc(3) * u * u - u * v - pc(3) * u * w + pc(2) * (pc(3) * T - pc(1)) * u * s -
         pc(6) * v * w - pc(3) * (pc(2) * T - pc(3)) * v * s + pc(2) * w * w -
         pc(3) * T * T * w * s + pc(9) * T * T * s * s;
}
inline QPoly q2() {
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w"), s = pv("s");
  return pc(3) * (T - pc(2)) * u * u + pc(3) * u * v + u * w - pc(2) * v * v -
         pc(6) * (pc(2) * T - pc(3)) * v * w + pc(3) * (pc(6) * T - pc(1)) * v * s +
         pc(9) * T * T * w * s + pc(3) * T.pow(3) * s * s;
}

// substitute T = t0 and keep the listed variables
inline QPoly at(const QPoly& p, const Rat& t0, const std::vector<std::string>& keep) {
  std::map<std::string, QPoly> sub;
  for (const auto& n : p.vars()) {
    if (n == "T")
      sub[n] = QPoly::constant(keep, t0);
    else if (std::find(keep.begin(), keep.end(), n) != keep.end())
      sub[n] = QPoly::variable(keep, n, Rat(1));
    else
      sub[n] = QPoly(keep);  // dropped variable, must not occur in p
  }
  return p.substitute(sub);
}

}  // namespace proofcurves

// verifies the displayed expansions of the twisted-model cubics under the
// birationality substitutions, exactly in Q[T, u, v, w, s]
inline CheckReport surface_substitution_check(Sign sign) {
  using namespace proofcurves;
  CheckReport rep;
  QPoly T = pv("T"), u = pv("u"), v = pv("v"), w = pv("w"), s = pv("s");
  if (sign == Sign::direct) {
    QPoly a = pc(12) * s - pc(3) * w * w;
    QPoly b = u * s + pc(2) * w.pow(3);
    auto m = twisted_model(a, b, Sign::direct);
    std::vector<QPoly> args{pc(6) * v * s - pc(3) * w.pow(3), pc(2) * s * T - w * w, w, pc(1)};
    QPoly lhs1 = m.F1.eval(args), lhs2 = m.F2.eval(args);
    if (!(lhs1 == pc(12) * s * s * (g0() + pc(4) * s * g1())))
      rep.failures.push_back("direct: first cubic expansion mismatch");
    if (!(lhs2 == pc(36) * s * s * (h0() + pc(4) * s * h1())))
      rep.failures.push_back("direct: second cubic expansion mismatch");
  } else {
    QPoly a = pc(3) * u * s - pc(3) * w * w;
    QPoly b = pc(3) * v * s * s - pc(3) * u * w * s + pc(2) * w.pow(3);
    auto m = twisted_model(a, b, Sign::reverse);
    std::vector<QPoly> args{pc(-3) * s * s * T - w * w, s - w, pc(2) * w, pc(1)};
    QPoly lhs1 = m.F1.eval(args), lhs2 = m.F2.eval(args);
    QPoly s3 = pc(9) * s.pow(3);
    if (!(lhs1 == s3 * q1())) rep.failures.push_back("reverse: first cubic expansion mismatch");
    if (!(lhs2 == s3 * (w * q1() - s * q2())))
      rep.failures.push_back("reverse: second cubic expansion mismatch");
  }
  return rep;
}

inline Rat j_invariant(const Curve<Rat>& e) {
  auto v = invariants(e);
  if (is_zero(v.disc)) throw SingularCurve();
  Rat c43 = v.c4 * v.c4 * v.c4;
  return Rat(1728) * c43 / (c43 - v.c6 * v.c6);
}

// Weierstrass reduction of the proof curve at proof-parameter value t
inline Curve<Rat> reduced_proof_curve(Sign sign, const Rat& t) {
  using namespace proofcurves;
  if (sign == Sign::direct) {
    std::vector<std::string> keep{"u", "v", "w"};
    QPoly cubic = at(g0() * h1() - g1() * h0(), t, keep);
    std::vector<Rat> pt{Rat(12), t - Rat(6), Rat(-1)};
    return nagell_reduce(cubic, pt);
  }
  std::vector<std::string> keep{"u", "v", "w", "s"};
  auto [cubic, pt] = project_quadric_intersection(at(q1(), t, keep), at(q2(), t, keep),
                                                 {Rat(2), Rat(1), Rat(1), Rat(0)});
  return nagell_reduce(cubic, pt);
}

struct JEvidence {
  Rat t0;          // surface parameter
  Rat t_proof;     // matched proof-curve parameter
  Rat j_surface, j_reduced;
  bool match = false;
};

// j-equality evidence that the printed surfaces are birational to the proof
// curves: the proof applies T <- 2T+3 (direct) or T <- (2T-3)/(2T+1) (reverse),
// so the proof curve at the substituted parameter has the j of the fiber at T.
// The direction of the substitution is locked by matching at the first point.
inline std::vector<JEvidence> surface_j_evidence(Sign sign, const std::vector<Rat>& t0s) {
  auto surf = surface(sign);
  auto forward = [&](const Rat& t) -> Rat {
    if (sign == Sign::direct) return Rat(2) * t + Rat(3);
    return (Rat(2) * t - Rat(3)) / (Rat(2) * t + Rat(1));
  };
  auto backward = [&](const Rat& t) -> Rat {
    if (sign == Sign::direct) return (t - Rat(3)) / Rat(2);
    return (t + Rat(3)) / (Rat(2) - Rat(2) * t);
  };
  std::optional<bool> use_forward;
  std::vector<JEvidence> out;
  for (const Rat& t0 : t0s) {
    JEvidence ev;
    ev.t0 = t0;
    ev.j_surface = j_invariant(specialize(surf, t0));
    if (!use_forward) {
      Rat tf = forward(t0);
      if (j_invariant(reduced_proof_curve(sign, tf)) == ev.j_surface) use_forward = true;
      else use_forward = false;
    }
    ev.t_proof = *use_forward ? forward(t0) : backward(t0);
    ev.j_reduced = j_invariant(reduced_proof_curve(sign, ev.t_proof));
    ev.match = ev.j_reduced == ev.j_surface;
    out.push_back(ev);
  }
  return out;
}

}  // namespace ninecong

#endif
