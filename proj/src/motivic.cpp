#include "polygroth/motivic.hpp"

#include "polygroth/errors.hpp"

namespace polygroth {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("polynomial coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("polynomial coefficient overflow");
  return r;
}

IntPoly power(const IntPoly& p, std::size_t n) {
  IntPoly r = IntPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) r = r * p;
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPoly::eval(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = add_checked(mul_checked(r, x), *it);
  return r;
}

IntPoly IntPoly::divide_by_x_minus_one() const {
  if (eval(1) != 0) throw DomainError("polynomial does not vanish at 1");
  if (c_.empty()) return {};
  // Synthetic division from the top coefficient down.
  std::vector<std::int64_t> q(c_.size() - 1);
  std::int64_t carry = 0;
  for (std::size_t i = c_.size() - 1; i >= 1; --i) {
    carry = add_checked(carry, c_[i]);
    q[i - 1] = carry;
  }
  return IntPoly(std::move(q));
}

std::string IntPoly::render(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const std::int64_t c = c_[k];
    if (c == 0) continue;
    const std::int64_t m = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out = "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m != 1 || k == 0) out += std::to_string(m);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_checked(p.coeff(i), q.coeff(i));
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_checked(p.coeff(i), -q.coeff(i));
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<std::int64_t> r(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = add_checked(r[i + j], mul_checked(p.c_[i], q.c_[j]));
  return IntPoly(std::move(r));
}

VFClass::VFClass(IntPoly f, IntPoly g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.eval(1) != g_.eval(1))
    throw InvariantError("incompatible pair: f(1) = " + std::to_string(f_.eval(1)) +
                         " but g(1) = " + std::to_string(g_.eval(1)));
}

std::string VFClass::render() const { return "f=" + f_.render("L") + " g=" + g_.render("tau"); }

VFClass theta_trop(const GradedClass& x) {
  const IntPoly l_minus_one({-1, 1});
  const IntPoly one_minus_tau({1, -1});
  VFClass r = VFClass::integer(x.c0());
  for (const auto& [n, ab] : x.terms()) {
    const auto k = static_cast<std::size_t>(n);
    r = r + VFClass(IntPoly::constant(ab.second) * power(l_minus_one, k), IntPoly());
    r = r + VFClass(IntPoly(), IntPoly::constant(ab.first) * power(one_minus_tau, k));
  }
  return r;
}

VFClass theta_trop_class(const ConstructibleSet& C, const Limits& limits) {
  return theta_trop(class_of(C, limits));
}

VFClass semialg_class(const SemialgDesc& s, const Limits& limits) {
  if (s.body.dim() != s.n) throw UsageError("body dimension differs from the torus dimension");
  if (s.extra_points < 0) throw UsageError("negative point count");
  return theta_trop_class(s.body, limits) + VFClass::integer(s.extra_points);
}

LPoly psi(const VFClass& x) { return x.f(); }

bool in_kernel_psi(const VFClass& x) { return x.f().is_zero(); }

std::optional<VFClass> kernel_factor(const VFClass& x) {
  if (!in_kernel_psi(x)) return std::nullopt;
  const IntPoly h = x.g().divide_by_x_minus_one();
  return VFClass(IntPoly::constant(h.eval(1)), h);
}

}  // namespace polygroth
