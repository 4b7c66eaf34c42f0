#ifndef NINECONG_DIOPHANTINE_HPP
#define NINECONG_DIOPHANTINE_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fp.hpp"
#include "modular9.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace ninecong {

struct SearchResult {
  long height = 0;
  std::vector<std::vector<Rat>> points;  // primitive, first nonzero coordinate positive
  uint64_t scanned = 0;
};

// All primitive integer 4-tuples with max |coordinate| <= H, up to sign,
// lying on both cubics, in lexicographic order.
inline SearchResult search_points(const CubicPair<Rat>& m, long H) {
  if (H < 1) throw std::invalid_argument("search_points: H must be >= 1");
  if (m.F1.vars().size() != 4) throw std::invalid_argument("search_points: need a model in P^3");
  SearchResult res;
  res.height = H;
  std::vector<Rat> v(4);
  std::array<long, 4> c{};
  for (c[0] = -H; c[0] <= H; ++c[0])
    for (c[1] = -H; c[1] <= H; ++c[1])
      for (c[2] = -H; c[2] <= H; ++c[2])
        for (c[3] = -H; c[3] <= H; ++c[3]) {
          long lead = 0;
          for (long x : c)
            if (x != 0) {
              lead = x;
              break;
            }
          if (lead <= 0) continue;  // zero tuple or sign representative
          long g = 0;
          for (long x : c) g = std::gcd(g, x);
          if (g != 1) continue;
          ++res.scanned;
          for (size_t i = 0; i < 4; ++i) v[i] = Rat(c[i]);
          if (is_zero(m.F1.eval(v)) && is_zero(m.F2.eval(v))) res.points.push_back(v);
        }
  return res;
}

// Rescale (a, b) with weights (2, 3): (a, b) -> (a / l^2, b / l^3) for the
// largest l built from primes up to the trial bound, after clearing
// denominators.  The twisted models of the two pairs are isomorphic over Q, so
// solubility questions are unaffected, but small coefficients keep bounded
// p-adic enumeration conclusive.
inline std::pair<Rat, Rat> reduced_curve_pair(const Rat& a, const Rat& b) {
  Int l = Int(a.get_den()) * Int(b.get_den());
  Int an = Int(a.get_num()) * pow_int(l, 2) / Int(a.get_den());
  Int bn = Int(b.get_num()) * pow_int(l, 3) / Int(b.get_den());
  for (uint64_t p = 2; p <= 1000; p = (p == 2 ? 3 : p + 2)) {
    if (!is_prime_u64(p)) continue;
    Int P(static_cast<unsigned long>(p));
    while (true) {
      int va = 0, vb = 0;
      for (Int t = an; an != 0 && t % P == 0 && va < 2; t /= P) ++va;
      for (Int t = bn; bn != 0 && t % P == 0 && vb < 3; t /= P) ++vb;
      if ((an != 0 && va < 2) || (bn != 0 && vb < 3)) break;
      if (an == 0 && bn == 0) break;
      an /= pow_int(P, 2);
      bn /= pow_int(P, 3);
    }
  }
  return {Rat(an), Rat(bn)};
}

enum class LocalVerdict { Soluble, NoPointsToDepth, Undetermined };

struct LocalReport {
  uint64_t p = 0;
  int depth = 0;  // depth of the witness, or the first depth with no classes left
  LocalVerdict verdict = LocalVerdict::Undetermined;
  std::vector<Int> witness;  // for Soluble: smooth point mod p
  uint64_t classes_scanned = 0;
};

namespace detail {

struct ZForm {
  struct Term {
    Int c;
    std::array<int, 4> e;
  };
  std::vector<Term> terms;

  Int eval_mod(const std::array<Int, 4>& x, const Int& mod) const {
    Int acc = 0;
    for (const auto& t : terms) {
      Int v = t.c;
      for (size_t i = 0; i < 4; ++i)
        for (int k = 0; k < t.e[i]; ++k) v = v * x[i] % mod;
      acc = (acc + v) % mod;
    }
    return acc;
  }
};

// clear denominators and divide by content
inline ZForm integral_form(const QPoly& f) {
  Int den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, c.get_den());
  Int content = 0;
  ZForm out;
  for (const auto& [e, c] : f.terms()) {
    Int n = c.get_num() * (den / c.get_den());
    content = gcd(content, n);
    out.terms.push_back({n, {e[0], e[1], e[2], e[3]}});
  }
  if (content > 1)
    for (auto& t : out.terms) t.c /= content;
  return out;
}

inline ZForm reduce_form(const ZForm& f, const Int& mod) {
  ZForm g;
  for (const auto& t : f.terms) {
    Int c = t.c % mod;
    if (c < 0) c += mod;
    if (c != 0) g.terms.push_back({c, t.e});
  }
  return g;
}

inline ZForm zderivative(const ZForm& f, size_t v) {
  ZForm d;
  for (const auto& t : f.terms) {
    if (t.e[v] == 0) continue;
    auto e = t.e;
    e[v] -= 1;
    d.terms.push_back({t.c * t.e[v], e});
  }
  return d;
}

}  // namespace detail

// Bounded-depth test for Q_p-points on the model.  A common zero mod p where
// the Jacobian has rank 2 lifts to Q_p by Hensel's lemma (Soluble).  Remaining
// singular solutions are lifted classwise mod p^2, ..., p^k_max; if no class
// survives to some depth the model has no Q_p-point found to that depth.
inline LocalReport local_solubility(const CubicPair<Rat>& m, uint64_t p, int k_max) {
  if (!is_prime_u64(p) || p > 97) throw std::invalid_argument("local_solubility: need a prime <= 97");
  if (k_max < 1 || k_max > 6) throw std::invalid_argument("local_solubility: need 1 <= k_max <= 6");
  if (m.F1.vars().size() != 4)
    throw std::invalid_argument("local_solubility: need a model in P^3");

  detail::ZForm F1 = detail::integral_form(m.F1), F2 = detail::integral_form(m.F2);

  LocalReport rep;
  rep.p = p;
  Int P(static_cast<unsigned long>(p));
  detail::ZForm f1 = detail::reduce_form(F1, P), f2 = detail::reduce_form(F2, P);
  std::array<detail::ZForm, 4> d1, d2;
  for (size_t i = 0; i < 4; ++i) {
    d1[i] = detail::reduce_form(detail::zderivative(F1, i), P);
    d2[i] = detail::reduce_form(detail::zderivative(F2, i), P);
  }

  // chart representatives of P^3(Z/p): coordinate i is 1, earlier ones 0 mod p
  std::vector<std::array<Int, 4>> singular;
  for (size_t chart = 0; chart < 4; ++chart) {
    size_t nfree = 3 - chart;
    uint64_t total = 1;
    for (size_t i = 0; i < nfree; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      std::array<Int, 4> x{Int(0), Int(0), Int(0), Int(0)};
      x[chart] = 1;
      uint64_t rest = idx;
      for (size_t i = chart + 1; i < 4; ++i) {
        x[i] = Int(static_cast<unsigned long>(rest % p));
        rest /= p;
      }
      ++rep.classes_scanned;
      if (f1.eval_mod(x, P) != 0 || f2.eval_mod(x, P) != 0) continue;
      bool rank2 = false;
      std::array<Int, 4> j1, j2;
      for (size_t i = 0; i < 4; ++i) {
        j1[i] = d1[i].eval_mod(x, P);
        j2[i] = d2[i].eval_mod(x, P);
      }
      for (size_t i = 0; i < 4 && !rank2; ++i)
        for (size_t j = i + 1; j < 4; ++j)
          if ((j1[i] * j2[j] - j1[j] * j2[i]) % P != 0) {
            rank2 = true;
            break;
          }
      if (rank2) {
        rep.verdict = LocalVerdict::Soluble;
        rep.depth = 1;
        rep.witness.assign(x.begin(), x.end());
        return rep;
      }
      singular.push_back(x);
    }
  }

  if (singular.empty()) {
    rep.verdict = LocalVerdict::NoPointsToDepth;
    rep.depth = 1;
    return rep;
  }

  // classwise lifting: each class mod p^k has p^3 children mod p^(k+1), one
  // p-adic digit per non-unit coordinate
  constexpr uint64_t kClassCap = 1u << 21;
  std::vector<std::array<Int, 4>> classes = std::move(singular);
  Int Pk = P;
  for (int k = 2; k <= k_max; ++k) {
    Int Pk1 = Pk * P;
    f1 = detail::reduce_form(F1, Pk1);
    f2 = detail::reduce_form(F2, Pk1);
    std::vector<std::array<Int, 4>> next;
    for (const auto& cls : classes) {
      size_t chart = 0;
      while (cls[chart] != 1) ++chart;
      uint64_t total = 1;
      for (size_t i = 0; i < 3; ++i) total *= p;
      for (uint64_t idx = 0; idx < total; ++idx) {
        std::array<Int, 4> x = cls;
        uint64_t rest = idx;
        for (size_t i = 0; i < 4; ++i) {
          if (i == chart) continue;
          x[i] = x[i] + Int(static_cast<unsigned long>(rest % p)) * Pk;
          rest /= p;
        }
        ++rep.classes_scanned;
        if (f1.eval_mod(x, Pk1) == 0 && f2.eval_mod(x, Pk1) == 0) next.push_back(x);
        if (next.size() > kClassCap) {
          rep.verdict = LocalVerdict::Undetermined;
          rep.depth = k;
          return rep;
        }
      }
    }
    if (next.empty()) {
      rep.verdict = LocalVerdict::NoPointsToDepth;
      rep.depth = k;
      return rep;
    }
    classes = std::move(next);
    Pk = Pk1;
  }
  rep.verdict = LocalVerdict::Undetermined;
  rep.depth = k_max;
  return rep;
}

}  // namespace ninecong

#endif
