#include "polygroth/polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"

namespace polygroth {

Row Row::reversed() const {
  Row r;
  r.a.reserve(a.size());
  for (const auto& x : a) r.a.push_back(-x);
  r.b = -b;
  return r;
}

int compare(const Row& lhs, const Row& rhs) {
  if (int c = compare(lhs.a, rhs.a); c != 0) return c;
  const int c = cmp(lhs.b, rhs.b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

Row normalized(std::size_t dim, const QVec& a, const Rat& b) {
  if (a.size() != dim) throw UsageError("constraint length differs from ambient dimension");
  auto [pa, pb] = primitive_normalize(a, b);
  return Row{std::move(pa), std::move(pb)};
}

}  // namespace

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<Row> rows) : dim_(dim) {
  rows_.reserve(rows.size());
  for (const auto& r : rows) rows_.push_back(normalized(dim, to_qvec(r.a), r.b));
}

HPolyhedron::HPolyhedron(std::size_t dim, const std::vector<Halfspace>& rows) : dim_(dim) {
  rows_.reserve(rows.size());
  for (const auto& h : rows) rows_.push_back(normalized(dim, h.a, h.b));
}

HPolyhedron HPolyhedron::box(std::size_t dim, const Rat& lo, const Rat& hi) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    rows.push_back(Row{e, lo});
    e[i] = -1;
    rows.push_back(Row{e, Rat(-hi)});
  }
  return HPolyhedron(dim, std::move(rows));
}

std::vector<Halfspace> HPolyhedron::halfspaces() const {
  std::vector<Halfspace> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.halfspace());
  return out;
}

bool HPolyhedron::contains(const QVec& x) const {
  if (x.size() != dim_) throw UsageError("point dimension differs from ambient dimension");
  return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return r.satisfied_by(x); });
}

bool PolyhedronLess::operator()(const HPolyhedron& lhs, const HPolyhedron& rhs) const {
  if (lhs.dim() != rhs.dim()) return lhs.dim() < rhs.dim();
  const auto& a = lhs.rows();
  const auto& b = rhs.rows();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

struct RelativeInterior {
  std::vector<std::size_t> tight;  // sorted
  QVec point;
};

// Relative-interior point of { rows in `forced` hold with equality, the
// others hold as inequalities }, together with the complete set of rows
// that are tight on the whole region.
std::optional<RelativeInterior> relative_interior(const std::vector<Halfspace>& hs,
                                                  const std::vector<std::size_t>& forced,
                                                  std::size_t n) {
  std::vector<bool> is_eq(hs.size(), false);
  for (auto i : forced) is_eq[i] = true;
  for (;;) {
    std::vector<Halfspace> eqs;
    std::vector<Halfspace> ineqs;
    std::vector<std::size_t> ineq_index;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (is_eq[i]) {
        eqs.push_back(hs[i]);
      } else {
        ineqs.push_back(hs[i]);
        ineq_index.push_back(i);
      }
    }
    SlackResult s = max_uniform_slack(eqs, ineqs, n);
    if (!s.feasible) return std::nullopt;
    auto finish = [&]() {
      RelativeInterior out;
      for (std::size_t i = 0; i < hs.size(); ++i)
        if (is_eq[i]) out.tight.push_back(i);
      out.point = std::move(s.point);
      return out;
    };
    if (ineqs.empty() || s.slack > 0) return finish();
    if (s.slack < 0) return std::nullopt;

    // Slack 0: some inequalities are implicit equalities. Only rows tight at
    // the optimum can be; each is confirmed by maximizing it over the region.
    std::vector<Halfspace> region = ineqs;
    for (const auto& e : eqs) {
      region.push_back(e);
      Halfspace r{e.a, Rat(-e.b)};
      for (auto& x : r.a) x = -x;
      region.push_back(std::move(r));
    }
    bool found = false;
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      if (dot(ineqs[k].a, s.point) != ineqs[k].b) continue;
      LpResult r = lp_optimize(region, ineqs[k].a, Sense::Maximize);
      if (r.status == LpStatus::Optimal && r.value == ineqs[k].b) {
        is_eq[ineq_index[k]] = true;
        found = true;
      }
    }
    if (!found) throw Error("implicit equality detection made no progress");
  }
}

std::size_t rank_of_rows(const std::vector<Row>& rows, const std::vector<std::size_t>& idx,
                         std::size_t n) {
  QMat A(idx.size(), n);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rows[idx[i]].a[j];
  return rank(A);
}

RelativeInterior require_nonempty(const HPolyhedron& P, const char* what) {
  auto ri = relative_interior(P.halfspaces(), {}, P.dim());
  if (!ri) throw DomainError(std::string(what) + " is undefined for the empty polyhedron");
  return std::move(*ri);
}

}  // namespace

bool is_empty(const HPolyhedron& P) {
  return !lp_feasible_point(P.halfspaces(), P.dim()).has_value();
}

int dimension(const HPolyhedron& P) {
  const RelativeInterior ri = require_nonempty(P, "dimension");
  return static_cast<int>(P.dim() - rank_of_rows(P.rows(), ri.tight, P.dim()));
}

bool contains(const HPolyhedron& P, const QVec& x) { return P.contains(x); }

bool is_bounded(const HPolyhedron& P) {
  const auto hs = P.halfspaces();
  if (!lp_feasible_point(hs, P.dim())) return true;
  for (std::size_t j = 0; j < P.dim(); ++j) {
    QVec c(P.dim());
    c[j] = 1;
    if (lp_optimize(hs, c, Sense::Maximize).status == LpStatus::Unbounded) return false;
    if (lp_optimize(hs, c, Sense::Minimize).status == LpStatus::Unbounded) return false;
  }
  return true;
}

HPolyhedron irredundant(const HPolyhedron& P) {
  require_nonempty(P, "irredundant");
  const auto hs = P.halfspaces();
  std::vector<bool> keep(hs.size(), true);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::vector<Halfspace> others;
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (j != i && keep[j]) others.push_back(hs[j]);
    LpResult r = lp_optimize(others, hs[i].a, Sense::Minimize);
    if (r.status == LpStatus::Optimal && r.value >= hs[i].b) keep[i] = false;
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (keep[i]) rows.push_back(P.rows()[i]);
  return HPolyhedron(P.dim(), std::move(rows));
}

std::optional<HPolyhedron> canonical(const HPolyhedron& P) {
  if (is_empty(P)) return std::nullopt;
  const HPolyhedron Q = irredundant(P);
  const std::size_t n = Q.dim();
  const RelativeInterior ri = require_nonempty(Q, "canonical");
  std::vector<bool> is_eq(Q.rows().size(), false);
  for (auto i : ri.tight) is_eq[i] = true;

  // Affine hull in reduced echelon form, each equation as a primitive pair.
  QMat A(ri.tight.size(), n);
  QVec b(ri.tight.size());
  for (std::size_t i = 0; i < ri.tight.size(); ++i) {
    const Row& r = Q.rows()[ri.tight[i]];
    for (std::size_t j = 0; j < n; ++j) A(i, j) = r.a[j];
    b[i] = r.b;
  }
  const EchelonForm hull = reduced_echelon(A, b);

  std::vector<Row> out;
  for (std::size_t i = 0; i < hull.pivots.size(); ++i) {
    auto [a, c] = primitive_normalize(hull.rows.row(i), hull.rhs[i]);
    Row r{std::move(a), std::move(c)};
    out.push_back(r.reversed());
    out.push_back(std::move(r));
  }
  // Inequalities reduced modulo the hull so that pivot coordinates vanish.
  std::vector<Row> ineqs;
  for (std::size_t k = 0; k < Q.rows().size(); ++k) {
    if (is_eq[k]) continue;
    QVec a = to_qvec(Q.rows()[k].a);
    Rat c = Q.rows()[k].b;
    for (std::size_t i = 0; i < hull.pivots.size(); ++i) {
      const Rat f = a[hull.pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[j] -= f * hull.rows(i, j);
      c -= f * hull.rhs[i];
    }
    if (is_zero(a)) continue;  // constant on the hull, hence implied
    auto [pa, pc] = primitive_normalize(a, c);
    ineqs.push_back(Row{std::move(pa), std::move(pc)});
  }
  std::sort(ineqs.begin(), ineqs.end(),
            [](const Row& x, const Row& y) { return compare(x, y) < 0; });
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  out.insert(out.end(), ineqs.begin(), ineqs.end());
  HPolyhedron R = irredundant(HPolyhedron(n, std::move(out)));
  std::vector<Row> rows = R.rows();
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return compare(x, y) < 0; });
  return HPolyhedron(n, std::move(rows));
}

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw UsageError("intersection of polyhedra in different dimensions");
  std::vector<Row> rows = P.rows();
  rows.insert(rows.end(), Q.rows().begin(), Q.rows().end());
  return HPolyhedron(P.dim(), std::move(rows));
}

HPolyhedron product(const HPolyhedron& P, const HPolyhedron& Q) {
  const std::size_t n = P.dim() + Q.dim();
  std::vector<Row> rows;
  for (const auto& r : P.rows()) {
    IntVec a(n);
    std::copy(r.a.begin(), r.a.end(), a.begin());
    rows.push_back(Row{std::move(a), r.b});
  }
  for (const auto& r : Q.rows()) {
    IntVec a(n);
    std::copy(r.a.begin(), r.a.end(), a.begin() + static_cast<std::ptrdiff_t>(P.dim()));
    rows.push_back(Row{std::move(a), r.b});
  }
  return HPolyhedron(n, std::move(rows));
}

HPolyhedron Face::as_polyhedron() const {
  std::vector<Row> rows = parent.rows();
  for (auto i : tight) rows.push_back(parent.rows()[i].reversed());
  return HPolyhedron(parent.dim(), std::move(rows));
}

bool operator==(const Face& lhs, const Face& rhs) {
  return lhs.parent == rhs.parent && lhs.tight == rhs.tight;
}

std::vector<Face> faces(const HPolyhedron& P, const Limits& limits) {
  check_dim(P.dim(), limits);
  check_rows(P.rows().size(), limits);
  const HPolyhedron Q = irredundant(P);
  const std::size_t n = Q.dim();
  const auto hs = Q.halfspaces();

  std::map<std::vector<std::size_t>, QVec> found;
  std::deque<std::vector<std::size_t>> queue;
  {
    auto root = relative_interior(hs, {}, n);
    found.emplace(root->tight, root->point);
    queue.push_back(root->tight);
  }
  // Breadth-first closure: turn one more row into an equality, keep the
  // result if nonempty, and identify it by its complete tight set.
  while (!queue.empty()) {
    const std::vector<std::size_t> tight = std::move(queue.front());
    queue.pop_front();
    std::vector<bool> in(hs.size(), false);
    for (auto i : tight) in[i] = true;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (in[j]) continue;
      std::vector<std::size_t> forced = tight;
      forced.push_back(j);
      auto ri = relative_interior(hs, forced, n);
      if (!ri || found.count(ri->tight)) continue;
      found.emplace(ri->tight, ri->point);
      queue.push_back(ri->tight);
    }
  }

  std::vector<Face> out;
  out.reserve(found.size());
  for (auto& [tight, point] : found) {
    Face f;
    f.parent = Q;
    f.tight = tight;
    f.dim = static_cast<int>(n - rank_of_rows(Q.rows(), tight, n));
    f.witness = point;
    out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.tight < b.tight;
  });
  return out;
}

RecessionData recession(const HPolyhedron& P) {
  require_nonempty(P, "recession");
  RecessionData out;
  std::vector<Row> rows;
  QMat A(P.rows().size(), P.dim());
  for (std::size_t i = 0; i < P.rows().size(); ++i) {
    rows.push_back(Row{P.rows()[i].a, Rat(0)});
    for (std::size_t j = 0; j < P.dim(); ++j) A(i, j) = P.rows()[i].a[j];
  }
  out.rec = HPolyhedron(P.dim(), std::move(rows));
  out.lin_basis = gauss_solve(A, QVec(P.rows().size())).nullspace;
  out.ell = static_cast<int>(out.lin_basis.size());
  return out;
}

bool is_relatively_bounded(const Face& F) {
  const HPolyhedron& P = F.parent;
  std::vector<bool> in(P.rows().size(), false);
  for (auto i : F.tight) in[i] = true;

  // rec(F) = { v : a_i·v = 0 for tight rows, a_i·v >= 0 otherwise }.
  std::vector<Halfspace> cone;
  for (std::size_t i = 0; i < P.rows().size(); ++i) {
    QVec a = to_qvec(P.rows()[i].a);
    cone.push_back(Halfspace{a, Rat(0)});
    if (in[i]) {
      for (auto& x : a) x = -x;
      cone.push_back(Halfspace{std::move(a), Rat(0)});
    }
  }
  // Lin(P) is contained in rec(F).
  const RecessionData rd = recession(P);
  for (const auto& v : rd.lin_basis)
    for (const auto& h : cone)
      if (dot(h.a, v) != 0) return false;
  // rec(F) is contained in Lin(P) iff every row vanishes on rec(F).
  for (std::size_t i = 0; i < P.rows().size(); ++i) {
    if (in[i]) continue;
    LpResult r = lp_optimize(cone, to_qvec(P.rows()[i].a), Sense::Maximize);
    if (r.status != LpStatus::Optimal || r.value != 0) return false;
  }
  return true;
}

HPolyhedron tangent_cone(const Face& F) {
  std::vector<Row> rows;
  for (auto i : F.tight) rows.push_back(F.parent.rows()[i]);
  return HPolyhedron(F.parent.dim(), std::move(rows));
}

bool is_visible(const Face& F, const QVec& x) {
  if (F.parent.contains(x)) throw DomainError("visibility is defined for exterior points only");
  return !tangent_cone(F).contains(x);
}

QVec minimal_face_point(const HPolyhedron& P) {
  const std::size_t n = P.dim();
  const auto hs = P.halfspaces();
  auto current = relative_interior(hs, {}, n);
  if (!current) throw DomainError("minimal face of the empty polyhedron");
  // Descend: any extra row that can be made tight yields a proper face.
  for (bool moved = true; moved;) {
    moved = false;
    std::vector<bool> in(hs.size(), false);
    for (auto i : current->tight) in[i] = true;
    for (std::size_t j = 0; j < hs.size() && !moved; ++j) {
      if (in[j]) continue;
      std::vector<std::size_t> forced = current->tight;
      forced.push_back(j);
      if (auto next = relative_interior(hs, forced, n)) {
        current = std::move(next);
        moved = true;
      }
    }
  }
  // A minimal face is the full affine solution set of its tight rows; take
  // the echelon solution with free coordinates zero.
  QMat A(current->tight.size(), n);
  QVec b(current->tight.size());
  for (std::size_t i = 0; i < current->tight.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = P.rows()[current->tight[i]].a[j];
    b[i] = P.rows()[current->tight[i]].b;
  }
  QVec x = *gauss_solve(A, b).particular;
  if (!P.contains(x)) throw Error("minimal face point left the polyhedron");
  return x;
}

}  // namespace polygroth
