#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygroth/constructible.hpp"
#include "polygroth/grothendieck.hpp"
#include "polygroth/limits.hpp"

namespace polygroth {

/// Dense integer polynomial in one variable, no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);  // coeffs[i] of x^i

  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly x() { return IntPoly({0, 1}); }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t eval(std::int64_t x) const;

  /// Quotient by (x - 1). Throws DomainError unless p(1) = 0.
  IntPoly divide_by_x_minus_one() const;

  /// Descending powers, e.g. "L^2 - 2L + 1".
  std::string render(const std::string& var) const;

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<std::int64_t> c_;
};

using LPoly = IntPoly;

/// Element of Z[L,tau]/((L-1)(tau-1)) as a pair (f(L), g(tau)) with
/// f(1) = g(1); L maps to (L, 1) and tau to (1, tau).
class VFClass {
 public:
  VFClass() = default;
  /// Throws InvariantError if f(1) != g(1).
  VFClass(IntPoly f, IntPoly g);

  static VFClass integer(std::int64_t k) { return VFClass(IntPoly::constant(k), IntPoly::constant(k)); }
  static VFClass L() { return VFClass(IntPoly::x(), IntPoly::constant(1)); }
  static VFClass tau() { return VFClass(IntPoly::constant(1), IntPoly::x()); }

  const IntPoly& f() const { return f_; }
  const IntPoly& g() const { return g_; }
  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

  std::string render() const;  // "f=... g=..."

  friend VFClass operator+(const VFClass& x, const VFClass& y) { return VFClass(x.f_ + y.f_, x.g_ + y.g_); }
  friend VFClass operator-(const VFClass& x, const VFClass& y) { return VFClass(x.f_ - y.f_, x.g_ - y.g_); }
  friend VFClass operator*(const VFClass& x, const VFClass& y) { return VFClass(x.f_ * y.f_, x.g_ * y.g_); }
  friend bool operator==(const VFClass&, const VFClass&) = default;

 private:
  IntPoly f_;
  IntPoly g_;
};

/// Substitution v -> (L-1, 0), u -> (0, 1-tau).
VFClass theta_trop(const GradedClass& x);
VFClass theta_trop_class(const ConstructibleSet& C, const Limits& limits = {});

/// trop^-1(body) inside the torus (K*)^n, plus extra_points disjoint points.
struct SemialgDesc {
  std::size_t n = 0;
  ConstructibleSet body;
  std::int64_t extra_points = 0;
};

VFClass semialg_class(const SemialgDesc& s, const Limits& limits = {});

/// tau -> 1: the L-component.
LPoly psi(const VFClass& x);
bool in_kernel_psi(const VFClass& x);

/// y with x = (tau - 1)·y; nullopt unless psi(x) = 0.
std::optional<VFClass> kernel_factor(const VFClass& x);

}  // namespace polygroth
