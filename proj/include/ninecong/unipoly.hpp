#ifndef NINECONG_UNIPOLY_HPP
#define NINECONG_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ninecong {

// Dense univariate polynomial over Q, coefficient of T^i at index i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const Rat& r) {
    if (!ninecong::is_zero(r)) c_ = {r};
  }
  static UPoly var() { return UPoly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero_poly() const { return c_.empty(); }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const {
    if (c_.empty()) throw std::domain_error("UPoly::lead: zero polynomial");
    return c_.back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const Rat& s, const UPoly& a) { return UPoly(Rat(s)) * a; }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly pow(unsigned e) const {
    UPoly r(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // quotient and remainder
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.c_.empty()) throw std::domain_error("UPoly: division by zero");
    UPoly r = a, q;
    std::vector<Rat> qc(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, Rat(0));
    while (!r.c_.empty() && r.c_.size() >= b.c_.size()) {
      size_t shift = r.c_.size() - b.c_.size();
      Rat f = r.c_.back() / b.c_.back();
      qc[shift] += f;
      for (size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] -= f * b.c_[i];
      r.trim();
    }
    return {UPoly(std::move(qc)), r};
  }

  std::string to_string(const std::string& var = "T") const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (ninecong::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += ninecong::to_string(c_[i]);
      if (i >= 1) s += "*" + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && ninecong::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero_poly(); }
inline std::string to_string(const UPoly& p) { return p.to_string(); }

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero_poly()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero_poly()) return a;
  return (Rat(1) / a.lead()) * a;  // monic
}

inline UPoly uderivative(const UPoly& p) {
  std::vector<Rat> r;
  for (size_t i = 1; i < p.coeffs().size(); ++i) r.push_back(Rat(static_cast<long>(i)) * p.coeffs()[i]);
  return UPoly(std::move(r));
}

}  // namespace ninecong

#endif
