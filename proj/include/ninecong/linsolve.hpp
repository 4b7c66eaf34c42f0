#ifndef NINECONG_LINSOLVE_HPP
#define NINECONG_LINSOLVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace ninecong {

// Any solution of A x = b over a field K (free variables set to zero), or
// nullopt if the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> A, std::vector<K> b,
                                           const K& zero, const K& one) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  std::vector<K> x(n, zero);
  size_t row = 0;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && is_zero(A[p][col])) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    K inv = one / A[row][col];
    for (size_t j = col; j < n; ++j) A[row][j] = inv * A[row][j];
    b[row] = inv * b[row];
    for (size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(A[i][col])) continue;
      K f = A[i][col];
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    K v = b[r];
    for (size_t j = c + 1; j < n; ++j)
      if (!is_zero(A[r][j])) v = v - A[r][j] * x[j];
    x[c] = v;
  }
  return x;
}

// Homogeneous cofactors (A, B) with g = A*F1 + B*F2, found by exact linear
// algebra on coefficient vectors.  nullopt means no solution within the bound
// (not a proof of non-membership).
template <class C>
std::optional<std::pair<Poly<C>, Poly<C>>> cofactor_solve(const Poly<C>& g, const Poly<C>& f1,
                                                          const Poly<C>& f2, int degree_bound,
                                                          const C& zero, const C& one) {
  if (!g.is_homogeneous() || !f1.is_homogeneous() || !f2.is_homogeneous())
    throw std::invalid_argument("cofactor_solve: inputs must be homogeneous");
  if (g.is_zero_poly()) return std::make_pair(Poly<C>(g.vars()), Poly<C>(g.vars()));
  size_t nv = g.vars().size();
  int dg = g.total_degree();
  int d1 = dg - f1.total_degree();
  int d2 = dg - f2.total_degree();
  if (std::max(d1, d2) > degree_bound)
    throw std::invalid_argument("cofactor_solve: degree bound too small");
  auto mons1 = d1 >= 0 ? monomials_of_degree(nv, d1) : std::vector<std::vector<int>>{};
  auto mons2 = d2 >= 0 ? monomials_of_degree(nv, d2) : std::vector<std::vector<int>>{};
  auto rows = monomials_of_degree(nv, dg);
  std::map<std::vector<int>, size_t> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  size_t ncols = mons1.size() + mons2.size();
  std::vector<std::vector<C>> A(rows.size(), std::vector<C>(ncols, zero));
  std::vector<C> b(rows.size(), zero);
  auto fill = [&](const std::vector<std::vector<int>>& mons, const Poly<C>& f, size_t col0) {
    for (size_t j = 0; j < mons.size(); ++j)
      for (const auto& [e, c] : f.terms()) {
        std::vector<int> sum = e;
        for (size_t i = 0; i < nv; ++i) sum[i] += mons[j][i];
        A[row_index.at(sum)][col0 + j] = A[row_index.at(sum)][col0 + j] + c;
      }
  };
  fill(mons1, f1, 0);
  fill(mons2, f2, mons1.size());
  for (const auto& [e, c] : g.terms()) b[row_index.at(e)] = c;

  auto sol = solve_linear(A, b, zero, one);
  if (!sol) return std::nullopt;
  Poly<C> pa(g.vars()), pb(g.vars());
  for (size_t j = 0; j < mons1.size(); ++j) pa.add_term(mons1[j], (*sol)[j]);
  for (size_t j = 0; j < mons2.size(); ++j) pb.add_term(mons2[j], (*sol)[mons1.size() + j]);
  // the solver can return spurious solutions only if we mis-built the system;
  // re-check the identity
  if (!(pa * f1 + pb * f2 == g)) return std::nullopt;
  return std::make_pair(pa, pb);
}

}  // namespace ninecong

#endif
