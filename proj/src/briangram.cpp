#include "polygroth/briangram.hpp"

#include "polygroth/errors.hpp"
#include "polygroth/euler.hpp"

namespace polygroth {

SignedPolyCombo BGDecomposition::combo() const {
  SignedPolyCombo f(parent.dim());
  for (const auto& t : terms) f.add(t.cone, t.sign);
  return f;
}

BGDecomposition bg_decompose(const HPolyhedron& P, const Limits& limits) {
  BGDecomposition d;
  d.parent = P;
  if (is_empty(P)) return d;
  d.ell = recession(P).ell;
  for (auto& F : faces(P, limits)) {
    if (!is_relatively_bounded(F)) continue;
    BGTerm t;
    t.sign = (F.dim + d.ell) % 2 == 0 ? 1 : -1;
    t.cone = tangent_cone(F);
    t.face = std::move(F);
    d.terms.push_back(std::move(t));
  }
  return d;
}

bool bg_verify(const BGDecomposition& d, const Limits& limits) {
  return functions_equal(SignedPolyCombo::indicator(d.parent), d.combo(), limits);
}

bool bg_verify(const HPolyhedron& P, const Limits& limits) { return bg_verify(bg_decompose(P, limits), limits); }

namespace {

ConstructibleSet union_of_faces(const HPolyhedron& P, const QVec* viewpoint, const Limits& limits) {
  if (is_empty(P)) throw DomainError("face unions are undefined for the empty polyhedron");
  if (viewpoint && P.contains(*viewpoint))
    throw DomainError("visibility is defined for exterior points only");
  ConstructibleSet u = ConstructibleSet::empty(P.dim());
  for (const auto& F : faces(P, limits)) {
    if (!is_relatively_bounded(F)) continue;
    if (viewpoint && !is_visible(F, *viewpoint)) continue;
    u = u | ConstructibleSet::from_polyhedron(F.as_polyhedron());
  }
  return u;
}

}  // namespace

ConstructibleSet bounded_union(const HPolyhedron& P, const Limits& limits) {
  return union_of_faces(P, nullptr, limits);
}

ConstructibleSet visible_union(const HPolyhedron& P, const QVec& x, const Limits& limits) {
  return union_of_faces(P, &x, limits);
}

std::int64_t bounded_union_chi(const HPolyhedron& P, const Limits& limits) {
  return chi(bounded_union(P, limits), limits);
}

std::int64_t visible_union_chi(const HPolyhedron& P, const QVec& x, const Limits& limits) {
  return chi(visible_union(P, x, limits), limits);
}

}  // namespace polygroth
