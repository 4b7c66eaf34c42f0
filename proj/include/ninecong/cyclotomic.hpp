#ifndef NINECONG_CYCLOTOMIC_HPP
#define NINECONG_CYCLOTOMIC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ninecong {

// Element of Q[z]/(Phi_m(z)) for m in {3, 9}.
//   m = 3:  z^2 = -z - 1          (coords length 2)
//   m = 9:  z^6 = -z^3 - 1        (coords length 6)
class Cyc {
 public:
  explicit Cyc(int m = 3) : m_(check(m)), c_(deg(m), Rat(0)) {}
  Cyc(int m, const Rat& r) : Cyc(m) { c_[0] = r; }

  static Cyc zeta(int m) {
    Cyc z(m);
    z.c_[1] = 1;
    return z;
  }
  static Cyc zeta_pow(int m, long k) {
    Cyc r(m, Rat(1));
    long e = ((k % m) + m) % m;
    Cyc z = zeta(m);
    for (long i = 0; i < e; ++i) r = r * z;
    return r;
  }

  int modulus() const { return m_; }
  const std::vector<Rat>& coords() const { return c_; }
  Rat& operator[](size_t i) { return c_[i]; }
  const Rat& operator[](size_t i) const { return c_[i]; }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    a.match(b);
    Cyc r(a.m_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    a.match(b);
    Cyc r(a.m_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  Cyc operator-() const {
    Cyc r(m_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    a.match(b);
    size_t n = a.c_.size();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // reduce z^k for k >= n via z^n = -z^{n/2} - 1  (n = 2 or 6)
    for (size_t k = prod.size(); k-- > n;) {
      if (is_zero(prod[k])) continue;
      Rat v = prod[k];
      prod[k] = 0;
      prod[k - n] -= v;
      prod[k - n / 2] -= v;
    }
    Cyc r(a.m_);
    for (size_t i = 0; i < n; ++i) r.c_[i] = prod[i];
    return r;
  }
  friend Cyc operator*(const Rat& s, const Cyc& b) {
    Cyc r(b.m_);
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = s * b.c_[i];
    return r;
  }
  friend bool operator==(const Cyc& a, const Cyc& b) = default;

  Cyc inverse() const;
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  Cyc pow(unsigned long e) const {
    Cyc r(m_, Rat(1)), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

 private:
  static int check(int m) {
    if (m != 3 && m != 9) throw std::invalid_argument("Cyc: m must be 3 or 9");
    return m;
  }
  static size_t deg(int m) { return m == 3 ? 2 : 6; }
  void match(const Cyc& o) const {
    if (m_ != o.m_) throw std::logic_error("Cyc: modulus mismatch");
  }
  int m_;
  std::vector<Rat> c_;
};

inline bool is_zero(const Cyc& x) {
  for (const auto& c : x.coords())
    if (!is_zero(c)) return false;
  return true;
}

inline std::string to_string(const Cyc& x) {
  std::string s = "(";
  const auto& c = x.coords();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c[i]);
  }
  return s + ")";
}

// Inverse by solving the multiplication-matrix linear system over Q.
inline Cyc Cyc::inverse() const {
  if (is_zero(*this)) throw std::domain_error("Cyc: division by zero");
  size_t n = c_.size();
  // columns: this * z^j expressed in the power basis
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1, Rat(0)));
  Cyc zj(m_, Rat(1));
  for (size_t j = 0; j < n; ++j) {
    Cyc col = *this * zj;
    for (size_t i = 0; i < n; ++i) A[i][j] = col.c_[i];
    zj = zj * zeta(m_);
  }
  A[0][n] = 1;
  // Gaussian elimination
  size_t row = 0;
  std::vector<long> pivot_col(n, -1);
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && is_zero(A[p][col])) ++p;
    if (p == n) continue;
    std::swap(A[p], A[row]);
    Rat inv = Rat(1) / A[row][col];
    for (size_t j = col; j <= n; ++j) A[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || is_zero(A[i][col])) continue;
      Rat f = A[i][col];
      for (size_t j = col; j <= n; ++j) A[i][j] -= f * A[row][j];
    }
    pivot_col[row] = static_cast<long>(col);
    ++row;
  }
  Cyc r(m_);
  for (size_t i = 0; i < row; ++i)
    if (pivot_col[i] >= 0) r.c_[static_cast<size_t>(pivot_col[i])] = A[i][n];
  return r;
}

}  // namespace ninecong

#endif
