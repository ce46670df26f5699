#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polygroth {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational, always in lowest terms with positive denominator.
/// GMP keeps every arithmetic result canonical; values built from raw
/// numerator/denominator pairs must go through make_rat().
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Rat make_rat(const Int& num, const Int& den);

/// Parses `p`, `-p` or `p/q` (q > 0). Throws UsageError otherwise.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);
std::string to_string(const QVec& v);  // "(a, b, c)"

bool is_integer(const Rat& q);

Rat dot(const QVec& a, const QVec& x);
Rat dot(const IntVec& a, const QVec& x);

QVec to_qvec(const IntVec& a);
bool is_zero(const QVec& v);
bool is_zero(const IntVec& v);

/// Row-major rectangular matrix of rationals.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws UsageError when the rows are ragged or disagree with `cols`.
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Rescales a·x >= b by a positive rational so that a becomes a primitive
/// integer vector. Throws DegenerateConstraintError when a = 0.
std::pair<IntVec, Rat> primitive_normalize(const QVec& a, const Rat& b);

/// Lexicographic comparison helpers used for canonical orderings.
int compare(const IntVec& a, const IntVec& b);
int compare(const QVec& a, const QVec& b);

}  // namespace polygroth
