#pragma once

#include <optional>
#include <vector>

#include "polygroth/rational.hpp"

namespace polygroth {

struct LinearSolution {
  /// One solution of A x = b (free variables set to zero), if any exists.
  std::optional<QVec> particular;
  /// Basis of { x : A x = 0 }.
  std::vector<QVec> nullspace;
};

/// Exact Gauss-Jordan elimination. Throws UsageError if b.size() != A.rows().
LinearSolution gauss_solve(const QMat& A, const QVec& b);

std::size_t rank(const QMat& A);

/// Reduced row echelon form of [A | b]; rows that reduce to zero are dropped.
struct EchelonForm {
  QMat rows;                        // rank x cols
  QVec rhs;                         // rank
  std::vector<std::size_t> pivots;  // pivot column of each row
  bool consistent = true;
};

EchelonForm reduced_echelon(const QMat& A, const QVec& b);

/// Affine parametrization x = origin + basis * y of a solution set.
struct AffineParam {
  QVec origin;
  std::vector<QVec> basis;

  std::size_t dim() const { return basis.size(); }
  QVec point(const QVec& y) const;
};

/// Solution set of A x = b as an affine parametrization, or nullopt if empty.
std::optional<AffineParam> solve_affine(const QMat& A, const QVec& b);

}  // namespace polygroth
