#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "polygroth/constructible.hpp"
#include "polygroth/euler.hpp"
#include "polygroth/limits.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth {

/// Element of Z[u,v]/(uv): c0 + sum over n >= 1 of a_n u^n + b_n v^n.
class GradedClass {
 public:
  using Coeffs = std::pair<std::int64_t, std::int64_t>;  // (a_n, b_n)

  GradedClass() = default;
  explicit GradedClass(std::int64_t c0) : c0_(c0) {}

  static GradedClass u(int n = 1);
  static GradedClass v(int n = 1);
  /// u + v, the class of a point in R^1.
  static GradedClass sigma() { return u() + v(); }
  /// chi*u^n + chi_b*v^n, or chi in degree 0.
  static GradedClass from_euler(std::size_t n, const EulerPair& e);

  std::int64_t c0() const { return c0_; }
  const std::map<int, Coeffs>& terms() const { return terms_; }
  std::int64_t u_coeff(int n) const;
  std::int64_t v_coeff(int n) const;
  bool is_zero() const { return c0_ == 0 && terms_.empty(); }

  /// e.g. "u^2 + v^2", "1 - u", "0".
  std::string render() const;

  friend GradedClass operator+(const GradedClass& x, const GradedClass& y);
  friend GradedClass operator-(const GradedClass& x, const GradedClass& y);
  friend GradedClass operator-(const GradedClass& x);
  friend GradedClass operator*(const GradedClass& x, const GradedClass& y);
  friend GradedClass operator*(std::int64_t k, const GradedClass& x);
  friend bool operator==(const GradedClass&, const GradedClass&) = default;

 private:
  void add_term(int n, std::int64_t a, std::int64_t b);

  std::int64_t c0_ = 0;
  std::map<int, Coeffs> terms_;
};

/// Element of the product ring Z x Z.
struct UngradedClass {
  std::int64_t chi = 0;
  std::int64_t chi_b = 0;

  friend UngradedClass operator+(const UngradedClass& x, const UngradedClass& y);
  friend UngradedClass operator-(const UngradedClass& x, const UngradedClass& y);
  friend UngradedClass operator*(const UngradedClass& x, const UngradedClass& y);
  friend bool operator==(const UngradedClass&, const UngradedClass&) = default;
};

GradedClass class_of(const ConstructibleSet& C, const Limits& limits = {});

/// Closed form for a cone with apex at the origin (every b = 0).
GradedClass class_of_cone(const HPolyhedron& C);

GradedClass class_of_polyhedron_closed_form(const HPolyhedron& P);

/// Evaluation at (u, v) = (1, 0) and (0, 1).
UngradedClass ungraded(const GradedClass& x);

}  // namespace polygroth
