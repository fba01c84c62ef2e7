#pragma once

#include "rsl/tensor.hpp"

#include <string>
#include <vector>

namespace rsl {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Underdetermined: return "underdetermined";
    case SolveStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  int rank = 0;
  // particular solution, shape (n, k); zero on free variables
  Matrix<Rational> x;
  // kernel basis vectors of A, each of length n
  std::vector<std::vector<Rational>> kernel;
  // first inconsistent equation (row index into the original system)
  int bad_row = -1;
};

// Reduced row echelon form with pivot tracking.
struct Rref {
  Matrix<Rational> m;
  std::vector<int> pivots;
};

inline Rref rref(Matrix<Rational> m, int ncols_pivot = -1) {
  int R = m.rows(), C = m.cols();
  if (ncols_pivot < 0) ncols_pivot = C;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols_pivot && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        // prefer small entries to keep growth down
        if (m.at(i, c).is_small()) break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < C; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c).inverse();
    for (int j = c; j < C; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    std::vector<int> nz;
    for (int j = c; j < C; ++j)
      if (!m.at(r, j).is_zero()) nz.push_back(j);
    for (int i = 0; i < R; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j : nz) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

// Solve A X = B exactly (A: m x n, B: m x k).
inline SolveResult solve_exact(const Matrix<Rational>& A, const Matrix<Rational>& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_exact: shapes do not conform");
  int m = A.rows(), n = A.cols(), k = B.cols();
  Matrix<Rational> aug({m, n + k});
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < k; ++j) aug.at(i, n + j) = B.at(i, j);
  }
  Rref rr = rref(std::move(aug), n);
  SolveResult res;
  res.rank = static_cast<int>(rr.pivots.size());
  for (int i = res.rank; i < m; ++i)
    for (int j = 0; j < k; ++j)
      if (!rr.m.at(i, n + j).is_zero()) {
        res.status = SolveStatus::Inconsistent;
        res.bad_row = i;
        return res;
      }
  res.x = Matrix<Rational>({n, k});
  for (int r = 0; r < res.rank; ++r)
    for (int j = 0; j < k; ++j) res.x.at(rr.pivots[r], j) = rr.m.at(r, n + j);
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = Rational(1);
    for (int r = 0; r < res.rank; ++r) v[rr.pivots[r]] = -rr.m.at(r, f);
    res.kernel.push_back(std::move(v));
  }
  res.status = res.kernel.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return res;
}

inline SolveResult solve_exact(const Matrix<Rational>& A, const std::vector<Rational>& b) {
  Matrix<Rational> B({static_cast<int>(b.size()), 1}, b);
  return solve_exact(A, B);
}

inline std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& A) {
  Matrix<Rational> B({A.rows(), 0});
  return solve_exact(A, B).kernel;
}

inline int rank(const Matrix<Rational>& A) { return static_cast<int>(rref(A).pivots.size()); }

} // namespace rsl
