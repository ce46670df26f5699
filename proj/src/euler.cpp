#include "polygroth/euler.hpp"

#include <functional>

#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"
#include "polygroth/lp.hpp"

namespace polygroth {

std::int64_t chi(const ConstructibleSet& C, const Limits& limits) {
  const CellComplex cc = cell_complex(C.dim(), hyperplanes_of(C), limits);
  std::int64_t s = 0;
  for (const auto& cell : cc.cells)
    if (C.contains(cell.witness)) s += cell.dim % 2 == 0 ? 1 : -1;
  return s;
}

Rat gamma_star(const ConstructibleSet& C) {
  const std::size_t n = C.dim();
  std::vector<Hyperplane> hs = hyperplanes_of(C);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    hs.push_back(Hyperplane{std::move(e), Rat(0)});
  }
  hs = normalize_arrangement(std::move(hs));

  Rat best = 0;
  std::vector<std::size_t> chosen;
  // n-subsets with independent normals; each meets in exactly one point.
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (chosen.size() == n) {
      QMat A(n, n);
      QVec b(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = hs[chosen[i]].a[j];
        b[i] = hs[chosen[i]].b;
      }
      const QVec x = *gauss_solve(A, b).particular;
      for (const auto& v : x)
        if (Rat(abs(v)) > best) best = abs(v);
      return;
    }
    for (std::size_t k = start; k + (n - chosen.size()) <= hs.size(); ++k) {
      chosen.push_back(k);
      QMat A(chosen.size(), n);
      for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = hs[chosen[i]].a[j];
      if (rank(A) == chosen.size()) pick(k + 1);
      chosen.pop_back();
    }
  };
  if (n > 0) pick(0);
  return best + 1;
}

ConstructibleSet clip_to_box(const ConstructibleSet& C, const Rat& gamma) {
  const std::size_t n = C.dim();
  ConstructibleSet out = C;
  for (std::size_t i = 0; i < n; ++i) {
    QVec e(n);
    e[i] = 1;
    out = out & ConstructibleSet::atom(n, e, Rat(-gamma));
    e[i] = -1;
    out = out & ConstructibleSet::atom(n, e, Rat(-gamma));
  }
  return out;
}

std::int64_t chi_in_box(const ConstructibleSet& C, const Rat& gamma, const Limits& limits) {
  if (gamma <= 0) throw UsageError("box half-width must be positive");
  return chi(clip_to_box(C, gamma), limits);
}

std::int64_t chi_b(const ConstructibleSet& C, const Limits& limits) {
  return chi_in_box(C, gamma_star(C), limits);
}

EulerPair euler_pair(const ConstructibleSet& C, const Limits& limits) {
  return EulerPair{chi(C, limits), chi_b(C, limits)};
}

bool recession_is_linear(const HPolyhedron& P) {
  const RecessionData rd = recession(P);
  const auto cone = rd.rec.halfspaces();
  for (const auto& h : cone) {
    LpResult r = lp_optimize(cone, h.a, Sense::Maximize);
    if (r.status != LpStatus::Optimal || r.value != 0) return false;
  }
  return true;
}

EulerPair chi_polyhedron_closed_form(const HPolyhedron& P) {
  if (is_empty(P)) return {0, 0};
  if (is_bounded(P)) return {1, 1};
  if (recession_is_linear(P)) {
    const int ell = recession(P).ell;
    return {ell % 2 == 0 ? 1 : -1, 1};
  }
  return {0, 1};
}

}  // namespace polygroth
