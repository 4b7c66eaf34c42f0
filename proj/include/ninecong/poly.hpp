#ifndef NINECONG_POLY_HPP
#define NINECONG_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ninecong {

// Graded lexicographic, leading term first.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(std::string remainder)
      : std::runtime_error("exact_divide: nonzero remainder"), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// Sparse multivariate polynomial over a coefficient ring C.  Values are
// immutable in practice: every operation returns a fresh polynomial.
template <class C>
class Poly {
 public:
  using Exp = std::vector<int>;
  using Terms = std::map<Exp, C, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(const std::vector<std::string>& vars, const C& c) {
    Poly p(vars);
    if (!is_zero(c)) p.terms_[Exp(vars.size(), 0)] = c;
    return p;
  }
  static Poly variable(const std::vector<std::string>& vars, const std::string& name,
                       const C& one) {
    Poly p(vars);
    Exp e(vars.size(), 0);
    e[p.index(name)] = 1;
    p.terms_[e] = one;
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }

  size_t index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("Poly: unknown variable " + name);
    return static_cast<size_t>(it - vars_.begin());
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  int degree_in(size_t v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int de = std::accumulate(e.begin(), e.end(), 0);
      if (d < 0) d = de;
      if (de != d) return false;
    }
    return true;
  }

  void add_term(const Exp& e, const C& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.match(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.match(b);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Poly operator*(const C& s, const Poly& a) {
    Poly r(a.vars_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned e) const {
    if (e == 0) {
      if (terms_.empty()) throw std::invalid_argument("Poly::pow: 0^0");
      C one = terms_.begin()->second / terms_.begin()->second;
      return constant(vars_, one);
    }
    Poly r = *this;
    for (unsigned i = 1; i < e; ++i) r = r * (*this);
    return r;
  }

  Poly derivative(size_t v) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exp d = e;
      d[v] -= 1;
      C coeff = c;
      for (int k = 1; k < e[v]; ++k) coeff = coeff + c;  // c * e[v]
      r.add_term(d, coeff);
    }
    return r;
  }

  // Every variable of *this must be assigned; all images share one variable list.
  Poly substitute(const std::map<std::string, Poly>& assignment) const {
    if (assignment.empty()) throw std::invalid_argument("substitute: empty assignment");
    const std::vector<std::string>& tvars = assignment.begin()->second.vars_;
    std::vector<const Poly*> images(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = assignment.find(vars_[i]);
      if (it == assignment.end())
        throw std::invalid_argument("substitute: missing variable " + vars_[i]);
      if (it->second.vars_ != tvars)
        throw std::invalid_argument("substitute: images over different variable lists");
      images[i] = &it->second;
    }
    Poly r(tvars);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(tvars, c);
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * *images[i];
      r = r + t;
    }
    return r;
  }

  C eval(const std::vector<C>& values) const {
    if (values.size() != vars_.size()) throw std::invalid_argument("eval: arity mismatch");
    bool have = false;
    C acc{};
    for (const auto& [e, c] : terms_) {
      C t = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * values[i];
      acc = have ? acc + t : t;
      have = true;
    }
    if (have) return acc;
    if (!values.empty()) return values[0] - values[0];
    return C{};
  }

  // Coefficient of var^k, as a polynomial with that variable's exponent zeroed.
  Poly coeff_in(size_t v, int k) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != k) continue;
      Exp d = e;
      d[v] = 0;
      r.terms_.emplace(d, c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += coeff_str(c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += "*" + vars_[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  static std::string coeff_str(const C& c) {
    using ninecong::to_string;
    return to_string(c);
  }
  void match(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: variable lists differ");
  }
  std::vector<std::string> vars_;
  Terms terms_;
};

// exact f = q*g; throws NotDivisible with the remainder otherwise.
template <class C>
Poly<C> exact_divide(const Poly<C>& f, const Poly<C>& g) {
  if (g.is_zero_poly()) throw std::invalid_argument("exact_divide: zero divisor");
  Poly<C> q(f.vars()), r = f;
  const auto& glead = *g.terms().begin();
  while (!r.is_zero_poly()) {
    const auto& rlead = *r.terms().begin();
    std::vector<int> e(rlead.first.size());
    bool div = true;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = rlead.first[i] - glead.first[i];
      if (e[i] < 0) div = false;
    }
    if (!div) throw NotDivisible(r.to_string());
    C coeff = rlead.second / glead.second;
    Poly<C> t(f.vars());
    t.add_term(e, coeff);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero_poly();
}

// exact division; throws NotDivisible
template <class C>
Poly<C> operator/(const Poly<C>& f, const Poly<C>& g) {
  return exact_divide(f, g);
}

template <class C>
std::string to_string(const Poly<C>& p) {
  return p.to_string();
}

template <class C>
Poly<C> det(const std::vector<std::vector<Poly<C>>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  const auto& vars = m[0][0].vars();
  Poly<C> acc(vars);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly<C>>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly<C>> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly<C> term = m[0][j] * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// All exponent vectors of total degree d in n variables, in a fixed order.
inline std::vector<std::vector<int>> monomials_of_degree(size_t n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, size_t i, int rem) -> void {
    if (i + 1 == n) {
      e[i] = rem;
      out.push_back(e);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, rem - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

using QPoly = Poly<Rat>;

}  // namespace ninecong

#endif
