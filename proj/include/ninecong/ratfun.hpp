#ifndef NINECONG_RATFUN_HPP
#define NINECONG_RATFUN_HPP

#include <stdexcept>
#include <string>

#include "unipoly.hpp"

namespace ninecong {

// Element of Q(T), stored as num/den with gcd(num, den) = 1 and den monic.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& r) : num_(r), den_(Rat(1)) {}
  RatFun(UPoly num, UPoly den = UPoly(Rat(1))) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RatFun var() { return RatFun(UPoly::var()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num_.is_zero_poly()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  RatFun pow(unsigned e) const {
    RatFun r(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  bool is_zero_fun() const { return num_.is_zero_poly(); }

  // Evaluate at T = t; throws if the denominator vanishes there.
  Rat eval(const Rat& t) const {
    Rat d = den_.eval(t);
    if (ninecong::is_zero(d)) throw std::domain_error("RatFun: pole at specialization point");
    return num_.eval(t) / d;
  }

  std::string to_string() const {
    if (den_ == UPoly(Rat(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero_poly()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero_poly()) {
      den_ = UPoly(Rat(1));
      return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rat lead = den_.lead();
    num_ = (Rat(1) / lead) * num_;
    den_ = (Rat(1) / lead) * den_;
  }
  UPoly num_, den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero_fun(); }
inline std::string to_string(const RatFun& f) { return f.to_string(); }

}  // namespace ninecong

#endif
