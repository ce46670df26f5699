#include "polygroth/constructible.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"
#include "polygroth/lp.hpp"

namespace polygroth {

bool Atom::holds_at(const QVec& x) const {
  const Rat v = dot(a, x);
  return strict ? v > b : v >= b;
}

namespace {

ExprPtr make_node(Op op, Atom atom = {}, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->atom = std::move(atom);
  e->args = std::move(args);
  return e;
}

ExprPtr combine(Op op, const ExprPtr& lhs, const ExprPtr& rhs) {
  std::vector<ExprPtr> args;
  for (const auto& e : {lhs, rhs}) {
    if (e->op == op) {
      args.insert(args.end(), e->args.begin(), e->args.end());
    } else {
      args.push_back(e);
    }
  }
  return make_node(op, {}, std::move(args));
}

bool eval_expr(const Expr& e, const QVec& x) {
  switch (e.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return e.atom.holds_at(x);
    case Op::Not: return !eval_expr(*e.args[0], x);
    case Op::And:
      return std::all_of(e.args.begin(), e.args.end(), [&](const ExprPtr& a) { return eval_expr(*a, x); });
    case Op::Or:
      return std::any_of(e.args.begin(), e.args.end(), [&](const ExprPtr& a) { return eval_expr(*a, x); });
  }
  return false;
}

ExprPtr map_atoms(const ExprPtr& e, const std::function<Atom(const Atom&)>& fn) {
  switch (e->op) {
    case Op::True:
    case Op::False: return e;
    case Op::Atom: return make_node(Op::Atom, fn(e->atom));
    default: {
      std::vector<ExprPtr> args;
      for (const auto& a : e->args) args.push_back(map_atoms(a, fn));
      return make_node(e->op, {}, std::move(args));
    }
  }
}

Atom normalized_atom(const QVec& a, const Rat& b, bool strict) {
  auto [pa, pb] = primitive_normalize(a, b);
  return Atom{std::move(pa), std::move(pb), strict};
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw UsageError("operands live in different ambient dimensions");
}

}  // namespace

ConstructibleSet::ConstructibleSet(std::size_t dim, ExprPtr expr) : dim_(dim), expr_(std::move(expr)) {
  for (const auto& atom : atoms())
    if (atom.a.size() != dim_) throw UsageError("atom length differs from ambient dimension");
}

ConstructibleSet ConstructibleSet::universe(std::size_t dim) {
  return ConstructibleSet(dim, make_node(Op::True));
}

ConstructibleSet ConstructibleSet::empty(std::size_t dim) {
  return ConstructibleSet(dim, make_node(Op::False));
}

ConstructibleSet ConstructibleSet::atom(std::size_t dim, const QVec& a, const Rat& b, bool strict) {
  if (a.size() != dim) throw UsageError("atom length differs from ambient dimension");
  return ConstructibleSet(dim, make_node(Op::Atom, normalized_atom(a, b, strict)));
}

ConstructibleSet ConstructibleSet::from_polyhedron(const HPolyhedron& P) {
  if (P.rows().empty()) return universe(P.dim());
  std::vector<ExprPtr> args;
  for (const auto& r : P.rows()) args.push_back(make_node(Op::Atom, Atom{r.a, r.b, false}));
  if (args.size() == 1) return ConstructibleSet(P.dim(), args[0]);
  return ConstructibleSet(P.dim(), make_node(Op::And, {}, std::move(args)));
}

bool ConstructibleSet::contains(const QVec& x) const {
  if (x.size() != dim_) throw UsageError("point dimension differs from ambient dimension");
  return eval_expr(*expr_, x);
}

std::vector<Atom> ConstructibleSet::atoms() const {
  std::vector<Atom> out;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (e.op == Op::Atom) {
      if (std::find(out.begin(), out.end(), e.atom) == out.end()) out.push_back(e.atom);
      return;
    }
    for (const auto& a : e.args) walk(*a);
  };
  walk(*expr_);
  return out;
}

ConstructibleSet operator&(const ConstructibleSet& lhs, const ConstructibleSet& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_);
  return ConstructibleSet(lhs.dim_, combine(Op::And, lhs.expr_, rhs.expr_));
}

ConstructibleSet operator|(const ConstructibleSet& lhs, const ConstructibleSet& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_);
  return ConstructibleSet(lhs.dim_, combine(Op::Or, lhs.expr_, rhs.expr_));
}

ConstructibleSet operator!(const ConstructibleSet& s) {
  return ConstructibleSet(s.dim_, make_node(Op::Not, {}, {s.expr_}));
}

ConstructibleSet difference(const ConstructibleSet& A, const ConstructibleSet& B) { return A & !B; }

bool eval_point(const ConstructibleSet& C, const QVec& x) { return C.contains(x); }

ConstructibleSet product(const ConstructibleSet& C, const ConstructibleSet& D) {
  const std::size_t m = C.dim();
  const std::size_t n = m + D.dim();
  auto left = map_atoms(C.expr(), [&](const Atom& at) {
    Atom out{IntVec(n), at.b, at.strict};
    std::copy(at.a.begin(), at.a.end(), out.a.begin());
    return out;
  });
  auto right = map_atoms(D.expr(), [&](const Atom& at) {
    Atom out{IntVec(n), at.b, at.strict};
    std::copy(at.a.begin(), at.a.end(), out.a.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
  });
  return ConstructibleSet(n, combine(Op::And, left, right));
}

ConstructibleSet translate(const ConstructibleSet& C, const QVec& t) {
  if (t.size() != C.dim()) throw UsageError("translation vector has the wrong length");
  return ConstructibleSet(C.dim(), map_atoms(C.expr(), [&](const Atom& at) {
                            return Atom{at.a, Rat(at.b + dot(at.a, t)), at.strict};
                          }));
}

ConstructibleSet linear_image(const ConstructibleSet& C, const QMat& M) {
  const std::size_t n = C.dim();
  if (M.rows() != n || M.cols() != n) throw UsageError("matrix must be square of the ambient size");
  // Columns of M^-1.
  std::vector<QVec> inv_cols;
  for (std::size_t j = 0; j < n; ++j) {
    QVec e(n);
    e[j] = 1;
    LinearSolution s = gauss_solve(M, e);
    if (!s.particular || !s.nullspace.empty()) throw DomainError("matrix is singular");
    inv_cols.push_back(std::move(*s.particular));
  }
  return ConstructibleSet(n, map_atoms(C.expr(), [&](const Atom& at) {
                            QVec a(n);
                            for (std::size_t j = 0; j < n; ++j) a[j] = dot(at.a, inv_cols[j]);
                            return normalized_atom(a, at.b, at.strict);
                          }));
}

int Hyperplane::side(const QVec& x) const {
  const int c = cmp(dot(a, x), b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::pair<Hyperplane, int> oriented(const IntVec& a, const Rat& b) {
  for (const auto& x : a) {
    if (x == 0) continue;
    if (x > 0) return {Hyperplane{a, b}, 1};
    IntVec na;
    for (const auto& y : a) na.push_back(-y);
    return {Hyperplane{std::move(na), Rat(-b)}, -1};
  }
  throw DegenerateConstraintError("hyperplane with zero normal vector");
}

std::vector<Hyperplane> normalize_arrangement(std::vector<Hyperplane> hs) {
  for (auto& h : hs) {
    auto [pa, pb] = primitive_normalize(to_qvec(h.a), h.b);
    h = oriented(pa, pb).first;
  }
  std::sort(hs.begin(), hs.end(), [](const Hyperplane& x, const Hyperplane& y) {
    if (int c = compare(x.a, y.a); c != 0) return c < 0;
    return x.b < y.b;
  });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<Hyperplane> hyperplanes_of(const ConstructibleSet& C) {
  std::vector<Hyperplane> hs;
  for (const auto& at : C.atoms()) hs.push_back(oriented(at.a, at.b).first);
  return normalize_arrangement(std::move(hs));
}

namespace {

class CellEnumerator {
 public:
  CellEnumerator(std::size_t n, const std::vector<Hyperplane>& hs, std::vector<Cell>& out)
      : n_(n), hs_(hs), out_(out) {}

  void run() {
    std::vector<int> signs;
    dfs(0, {}, {}, QVec(n_), signs);
  }

 private:
  std::vector<QVec> directions(const std::vector<Halfspace>& eqs) const {
    QMat A(eqs.size(), n_);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j) A(i, j) = eqs[i].a[j];
    return gauss_solve(A, QVec(eqs.size())).nullspace;
  }

  // Point p + eps*d (d oriented by `dir`) still strictly inside every
  // constraint of `strict`.
  static QVec nudge(const QVec& p, const QVec& d, int dir, const std::vector<Halfspace>& strict) {
    Rat eps = 1;
    for (const auto& h : strict) {
      const Rat c = dir * dot(h.a, d);
      if (c >= 0) continue;
      const Rat bound = (dot(h.a, p) - h.b) / (-c) / 2;
      if (bound < eps) eps = bound;
    }
    QVec x = p;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += dir * eps * d[i];
    return x;
  }

  void dfs(std::size_t k, std::vector<Halfspace> eqs, std::vector<Halfspace> strict, const QVec& w,
           std::vector<int>& signs) {
    if (k == hs_.size()) {
      Cell c;
      c.signs = signs;
      c.witness = w;
      c.dim = static_cast<int>(directions(eqs).size());
      out_.push_back(std::move(c));
      return;
    }
    const Hyperplane& h = hs_[k];
    const Halfspace pos{to_qvec(h.a), h.b};
    Halfspace neg{pos.a, Rat(-h.b)};
    for (auto& x : neg.a) x = -x;

    auto descend = [&](int s, const QVec& witness) {
      auto e = eqs;
      auto st = strict;
      if (s == 0) e.push_back(pos);
      if (s > 0) st.push_back(pos);
      if (s < 0) st.push_back(neg);
      signs.push_back(s);
      dfs(k + 1, std::move(e), std::move(st), witness, signs);
      signs.pop_back();
    };

    const int s = h.side(w);
    QVec d;
    for (const auto& v : directions(eqs)) {
      const Rat ad = dot(pos.a, v);
      if (ad != 0) {
        d = v;
        if (ad < 0)
          for (auto& x : d) x = -x;
        break;
      }
    }
    if (d.empty()) {  // constant on the cell's affine hull
      descend(s, w);
      return;
    }
    QVec z;
    if (s == 0) {
      z = w;
    } else {
      auto e = eqs;
      e.push_back(pos);
      SlackResult r = max_uniform_slack(e, strict, n_);
      if (r.feasible && r.slack > 0) z = std::move(r.point);
    }
    if (z.empty()) {  // the hyperplane misses the cell
      descend(s, w);
      return;
    }
    descend(-1, s < 0 ? w : nudge(z, d, -1, strict));
    descend(0, z);
    descend(1, s > 0 ? w : nudge(z, d, 1, strict));
  }

  std::size_t n_;
  const std::vector<Hyperplane>& hs_;
  std::vector<Cell>& out_;
};

}  // namespace

CellComplex cell_complex(std::size_t dim, std::vector<Hyperplane> hyperplanes, const Limits& limits) {
  check_dim(dim, limits);
  for (const auto& h : hyperplanes)
    if (h.a.size() != dim) throw UsageError("hyperplane length differs from ambient dimension");
  CellComplex cc;
  cc.dim = dim;
  cc.hyperplanes = normalize_arrangement(std::move(hyperplanes));
  check_hyperplanes(cc.hyperplanes.size(), limits);
  CellEnumerator(dim, cc.hyperplanes, cc.cells).run();
  return cc;
}

SignedPolyCombo SignedPolyCombo::indicator(const HPolyhedron& P) {
  SignedPolyCombo f(P.dim());
  f.add(P, 1);
  return f;
}

void SignedPolyCombo::add(const HPolyhedron& P, const Int& c) {
  require_same_dim(P.dim(), dim_);
  if (c == 0) return;
  if (auto key = canonical(P)) add_canonical(*key, c);
}

void SignedPolyCombo::add_canonical(const HPolyhedron& key, const Int& c) {
  auto [it, inserted] = terms_.try_emplace(key, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Int SignedPolyCombo::eval(const QVec& x) const {
  Int s = 0;
  for (const auto& [P, c] : terms_)
    if (P.contains(x)) s += c;
  return s;
}

std::vector<Hyperplane> SignedPolyCombo::hyperplanes() const {
  std::vector<Hyperplane> hs;
  for (const auto& [P, c] : terms_)
    for (const auto& r : P.rows()) hs.push_back(oriented(r.a, r.b).first);
  return normalize_arrangement(std::move(hs));
}

SignedPolyCombo& SignedPolyCombo::operator+=(const SignedPolyCombo& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [P, c] : other.terms_) add_canonical(P, c);
  return *this;
}

SignedPolyCombo& SignedPolyCombo::operator-=(const SignedPolyCombo& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [P, c] : other.terms_) add_canonical(P, Int(-c));
  return *this;
}

SignedPolyCombo operator*(const Int& c, const SignedPolyCombo& f) {
  SignedPolyCombo out(f.dim_);
  if (c == 0) return out;
  for (const auto& [P, k] : f.terms_) out.terms_.emplace(P, Int(c * k));
  return out;
}

namespace {

// Multilinear polynomial in the indicators of closed atoms: each monomial
// is a sorted set of atom indices, standing for the intersection.
using Monomial = std::vector<std::size_t>;
using IndicatorPoly = std::map<Monomial, Int>;

void accumulate(IndicatorPoly& p, const Monomial& m, const Int& c) {
  auto [it, inserted] = p.try_emplace(m, 0);
  it->second += c;
  if (it->second == 0) p.erase(it);
}

IndicatorPoly poly_mul(const IndicatorPoly& f, const IndicatorPoly& g) {
  IndicatorPoly out;
  for (const auto& [m1, c1] : f) {
    for (const auto& [m2, c2] : g) {
      Monomial m;
      std::set_union(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      accumulate(out, m, c1 * c2);
    }
  }
  return out;
}

IndicatorPoly poly_one_minus(const IndicatorPoly& f) {
  IndicatorPoly out{{Monomial{}, Int(1)}};
  for (const auto& [m, c] : f) accumulate(out, m, Int(-c));
  return out;
}

class ComboBuilder {
 public:
  IndicatorPoly build(const Expr& e) {
    switch (e.op) {
      case Op::True: return {{Monomial{}, Int(1)}};
      case Op::False: return {};
      case Op::Atom: {
        if (!e.atom.strict) return {{Monomial{index_of(e.atom.a, e.atom.b)}, Int(1)}};
        IntVec na;
        for (const auto& x : e.atom.a) na.push_back(-x);
        return poly_one_minus({{Monomial{index_of(na, Rat(-e.atom.b))}, Int(1)}});
      }
      case Op::Not: return poly_one_minus(build(*e.args[0]));
      case Op::And: {
        IndicatorPoly p = build(*e.args[0]);
        for (std::size_t i = 1; i < e.args.size(); ++i) p = poly_mul(p, build(*e.args[i]));
        return p;
      }
      case Op::Or: {
        // f | g = f + g - fg
        IndicatorPoly p = build(*e.args[0]);
        for (std::size_t i = 1; i < e.args.size(); ++i) {
          IndicatorPoly g = build(*e.args[i]);
          IndicatorPoly fg = poly_mul(p, g);
          for (const auto& [m, c] : g) accumulate(p, m, c);
          for (const auto& [m, c] : fg) accumulate(p, m, Int(-c));
        }
        return p;
      }
    }
    return {};
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::size_t index_of(const IntVec& a, const Rat& b) {
    Row r{a, b};
    auto it = std::find(rows_.begin(), rows_.end(), r);
    if (it != rows_.end()) return static_cast<std::size_t>(it - rows_.begin());
    rows_.push_back(std::move(r));
    return rows_.size() - 1;
  }

  std::vector<Row> rows_;
};

}  // namespace

SignedPolyCombo to_signed_combo(const ConstructibleSet& C) {
  ComboBuilder builder;
  const IndicatorPoly p = builder.build(*C.expr());
  SignedPolyCombo out(C.dim());
  for (const auto& [m, c] : p) {
    std::vector<Row> rows;
    for (auto i : m) rows.push_back(builder.rows()[i]);
    out.add(HPolyhedron(C.dim(), std::move(rows)), c);
  }
  return out;
}

namespace {

std::vector<QVec> sample_points(std::size_t n) {
  std::mt19937 rng(20240531);
  std::uniform_int_distribution<int> num(-12, 12);
  std::vector<QVec> pts;
  for (int k = 0; k < 16; ++k) {
    QVec x(n);
    for (auto& v : x) v = make_rat(num(rng), 2);
    pts.push_back(std::move(x));
  }
  return pts;
}

}  // namespace

bool functions_equal(const SignedPolyCombo& f, const SignedPolyCombo& g, const Limits& limits) {
  require_same_dim(f.dim(), g.dim());
  for (const auto& x : sample_points(f.dim()))
    if (f.eval(x) != g.eval(x)) return false;
  auto hs = f.hyperplanes();
  auto hg = g.hyperplanes();
  hs.insert(hs.end(), hg.begin(), hg.end());
  const CellComplex cc = cell_complex(f.dim(), std::move(hs), limits);
  for (const auto& cell : cc.cells)
    if (f.eval(cell.witness) != g.eval(cell.witness)) return false;
  return true;
}

bool sets_equal(const ConstructibleSet& C, const ConstructibleSet& D, const Limits& limits) {
  require_same_dim(C.dim(), D.dim());
  auto hs = hyperplanes_of(C);
  auto hd = hyperplanes_of(D);
  hs.insert(hs.end(), hd.begin(), hd.end());
  const CellComplex cc = cell_complex(C.dim(), std::move(hs), limits);
  for (const auto& cell : cc.cells)
    if (C.contains(cell.witness) != D.contains(cell.witness)) return false;
  return true;
}

}  // namespace polygroth
