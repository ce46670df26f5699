#include "polygroth/rational.hpp"

#include <cctype>

#include "polygroth/errors.hpp"
#include "polygroth/limits.hpp"

namespace polygroth {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                        : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw UsageError("malformed rational literal '" + std::string(text) + "'");
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rat(n, d);
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat dot(const QVec& a, const QVec& x) {
  if (a.size() != x.size()) throw UsageError("dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

Rat dot(const IntVec& a, const QVec& x) {
  if (a.size() != x.size()) throw UsageError("dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rat(a[i]) * x[i];
  return s;
}

QVec to_qvec(const IntVec& a) { return QVec(a.begin(), a.end()); }

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::pair<IntVec, Rat> primitive_normalize(const QVec& a, const Rat& b) {
  if (is_zero(a)) throw DegenerateConstraintError("half-space with zero normal vector");
  // Clear denominators, then divide out the content.
  Int lcm_den = 1;
  for (const auto& x : a) lcm_den = lcm(lcm_den, Int(x.get_den()));
  IntVec scaled(a.size());
  Int content = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat v = a[i] * Rat(lcm_den);
    scaled[i] = v.get_num();
    content = gcd(content, scaled[i]);
  }
  for (auto& x : scaled) x /= content;
  Rat factor = make_rat(lcm_den, content);
  Rat nb = b * factor;
  return {std::move(scaled), nb};
}

int compare(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int compare(const QVec& a, const QVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void check_dim(std::size_t dim, const Limits& limits) {
  if (dim > limits.max_dim)
    throw ResourceError("ambient dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(limits.max_dim));
}

void check_rows(std::size_t rows, const Limits& limits) {
  if (rows > limits.max_rows)
    throw ResourceError(std::to_string(rows) + " constraints exceed cap " +
                        std::to_string(limits.max_rows));
}

void check_hyperplanes(std::size_t count, const Limits& limits) {
  if (count > limits.max_hyperplanes)
    throw ResourceError(std::to_string(count) + " hyperplanes exceed cap " +
                        std::to_string(limits.max_hyperplanes));
}

}  // namespace polygroth
