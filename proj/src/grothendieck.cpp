#include "polygroth/grothendieck.hpp"

#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"
#include "polygroth/lp.hpp"

namespace polygroth {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("class coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("class coefficient overflow");
  return r;
}

std::string monomial(std::int64_t c, const char* var, int n, bool first) {
  std::string out;
  if (c < 0) {
    out = first ? "-" : " - ";
  } else if (!first) {
    out = " + ";
  }
  const std::int64_t m = c < 0 ? -c : c;
  if (m != 1) out += std::to_string(m);
  out += var;
  if (n != 1) out += "^" + std::to_string(n);
  return out;
}

}  // namespace

GradedClass GradedClass::u(int n) {
  if (n < 1) throw UsageError("u has degree at least 1");
  GradedClass x;
  x.terms_[n] = {1, 0};
  return x;
}

GradedClass GradedClass::v(int n) {
  if (n < 1) throw UsageError("v has degree at least 1");
  GradedClass x;
  x.terms_[n] = {0, 1};
  return x;
}

GradedClass GradedClass::from_euler(std::size_t n, const EulerPair& e) {
  if (n == 0) return GradedClass(e.chi);
  GradedClass x;
  x.add_term(static_cast<int>(n), e.chi, e.chi_b);
  return x;
}

std::int64_t GradedClass::u_coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? 0 : it->second.first;
}

std::int64_t GradedClass::v_coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? 0 : it->second.second;
}

void GradedClass::add_term(int n, std::int64_t a, std::int64_t b) {
  auto& t = terms_[n];
  t.first = add_checked(t.first, a);
  t.second = add_checked(t.second, b);
  if (t.first == 0 && t.second == 0) terms_.erase(n);
}

std::string GradedClass::render() const {
  std::string out;
  if (c0_ != 0) out = std::to_string(c0_);
  for (const auto& [n, ab] : terms_) {
    if (ab.first != 0) out += monomial(ab.first, "u", n, out.empty());
    if (ab.second != 0) out += monomial(ab.second, "v", n, out.empty());
  }
  return out.empty() ? "0" : out;
}

GradedClass operator+(const GradedClass& x, const GradedClass& y) {
  GradedClass r = x;
  r.c0_ = add_checked(r.c0_, y.c0_);
  for (const auto& [n, ab] : y.terms_) r.add_term(n, ab.first, ab.second);
  return r;
}

GradedClass operator-(const GradedClass& x) { return std::int64_t{-1} * x; }

GradedClass operator-(const GradedClass& x, const GradedClass& y) { return x + (-y); }

GradedClass operator*(std::int64_t k, const GradedClass& x) {
  GradedClass r;
  r.c0_ = mul_checked(k, x.c0_);
  for (const auto& [n, ab] : x.terms_) r.add_term(n, mul_checked(k, ab.first), mul_checked(k, ab.second));
  return r;
}

GradedClass operator*(const GradedClass& x, const GradedClass& y) {
  GradedClass r;
  r.c0_ = mul_checked(x.c0_, y.c0_);
  for (const auto& [n, ab] : y.terms_)
    r.add_term(n, mul_checked(x.c0_, ab.first), mul_checked(x.c0_, ab.second));
  for (const auto& [n, ab] : x.terms_)
    r.add_term(n, mul_checked(y.c0_, ab.first), mul_checked(y.c0_, ab.second));
  // u^i v^j = 0 for i, j >= 1
  for (const auto& [n, ab] : x.terms_)
    for (const auto& [m, cd] : y.terms_)
      r.add_term(n + m, mul_checked(ab.first, cd.first), mul_checked(ab.second, cd.second));
  return r;
}

UngradedClass operator+(const UngradedClass& x, const UngradedClass& y) {
  return {add_checked(x.chi, y.chi), add_checked(x.chi_b, y.chi_b)};
}

UngradedClass operator-(const UngradedClass& x, const UngradedClass& y) {
  return {add_checked(x.chi, -y.chi), add_checked(x.chi_b, -y.chi_b)};
}

UngradedClass operator*(const UngradedClass& x, const UngradedClass& y) {
  return {mul_checked(x.chi, y.chi), mul_checked(x.chi_b, y.chi_b)};
}

GradedClass class_of(const ConstructibleSet& C, const Limits& limits) {
  return GradedClass::from_euler(C.dim(), euler_pair(C, limits));
}

GradedClass class_of_cone(const HPolyhedron& C) {
  for (const auto& r : C.rows())
    if (r.b != 0) throw DomainError("cone rows must have zero right-hand side");
  const std::size_t n = C.dim();
  if (n == 0) return GradedClass(1);
  const auto hs = C.halfspaces();
  bool linear = true;
  for (const auto& h : hs) {
    LpResult r = lp_optimize(hs, h.a, Sense::Maximize);
    if (r.status != LpStatus::Optimal || r.value != 0) {
      linear = false;
      break;
    }
  }
  const int deg = static_cast<int>(n);
  if (!linear) return GradedClass::v(deg);
  QMat A(hs.size(), n);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = hs[i].a[j];
  const std::size_t d = n - rank(A);
  return GradedClass::v(deg) + (d % 2 == 0 ? 1 : -1) * GradedClass::u(deg);
}

GradedClass class_of_polyhedron_closed_form(const HPolyhedron& P) {
  return GradedClass::from_euler(P.dim(), chi_polyhedron_closed_form(P));
}

UngradedClass ungraded(const GradedClass& x) {
  UngradedClass r{x.c0(), x.c0()};
  for (const auto& [n, ab] : x.terms()) {
    r.chi = add_checked(r.chi, ab.first);
    r.chi_b = add_checked(r.chi_b, ab.second);
  }
  return r;
}

}  // namespace polygroth
