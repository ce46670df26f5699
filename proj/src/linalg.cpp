#include "polygroth/linalg.hpp"

#include "polygroth/errors.hpp"

namespace polygroth {

EchelonForm reduced_echelon(const QMat& A, const QVec& b) {
  if (b.size() != A.rows()) throw UsageError("right-hand side length differs from row count");
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  QMat M = A;
  QVec rhs = b;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(r, j));
      std::swap(rhs[p], rhs[r]);
    }
    const Rat inv = 1 / M(r, c);
    for (std::size_t j = c; j < n; ++j) M(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M(i, c) == 0) continue;
      const Rat f = M(i, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  EchelonForm out;
  out.rows = QMat(r, n);
  out.rhs.assign(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out.rows(i, j) = M(i, j);
  out.pivots = std::move(pivots);
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != 0) out.consistent = false;
  return out;
}

LinearSolution gauss_solve(const QMat& A, const QVec& b) {
  const EchelonForm e = reduced_echelon(A, b);
  const std::size_t n = A.cols();
  LinearSolution sol;
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, f);
    sol.nullspace.push_back(std::move(v));
  }
  if (e.consistent) {
    QVec x(n);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rhs[i];
    sol.particular = std::move(x);
  }
  return sol;
}

std::size_t rank(const QMat& A) { return reduced_echelon(A, QVec(A.rows())).pivots.size(); }

QVec AffineParam::point(const QVec& y) const {
  if (y.size() != basis.size()) throw UsageError("parameter length differs from dimension");
  QVec x = origin;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (y[k] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[k] * basis[k][i];
  }
  return x;
}

std::optional<AffineParam> solve_affine(const QMat& A, const QVec& b) {
  LinearSolution s = gauss_solve(A, b);
  if (!s.particular) return std::nullopt;
  return AffineParam{std::move(*s.particular), std::move(s.nullspace)};
}

}  // namespace polygroth
