#include "polygroth/lp.hpp"

#include <algorithm>
#include <limits>

#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"

namespace polygroth {

namespace {

// Dictionary-form simplex (Chvatal). Variable ids: 0..n-1 are the free
// decision variables, n..n+m-1 the slacks s_i = a_i·x - b_i >= 0, and n+m
// the phase-one auxiliary. Every basic variable is an affine function of
// the nonbasic ones; free variables are pivoted into the basis first and
// never take part in ratio tests afterwards.
class Dictionary {
 public:
  Dictionary(std::span<const Halfspace> rows, std::size_t n) : n_(n), m_(rows.size()) {
    nonbasic_.resize(n);
    for (std::size_t j = 0; j < n; ++j) nonbasic_[j] = j;
    dead_.assign(n, false);
    rows_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows[i].a.size() != n) throw UsageError("constraint length differs from objective length");
      Row r;
      r.var = n + i;
      r.constant = -rows[i].b;
      r.coef = rows[i].a;
      rows_.push_back(std::move(r));
    }
  }

  /// Returns false if the constraints are infeasible.
  bool make_feasible() {
    eliminate_free_variables();
    bool needs_phase_one = false;
    for (const auto& r : rows_)
      if (restricted(r) && r.constant < 0) needs_phase_one = true;
    if (!needs_phase_one) return true;

    const std::size_t aux = n_ + m_;
    nonbasic_.push_back(aux);
    dead_.push_back(false);
    for (auto& r : rows_) r.coef.push_back(restricted(r) ? Rat(1) : Rat(0));
    const std::size_t aux_pos = nonbasic_.size() - 1;
    obj_const_ = 0;
    obj_.assign(nonbasic_.size(), Rat(0));
    obj_[aux_pos] = -1;

    std::size_t leave = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!restricted(rows_[i])) continue;
      if (leave == rows_.size() || rows_[i].constant < rows_[leave].constant) leave = i;
    }
    pivot(leave, aux_pos);
    if (run() != LpStatus::Optimal) throw Error("phase one of the simplex cannot be unbounded");
    if (obj_const_ < 0) return false;

    // Drive a degenerate auxiliary out of the basis.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].var != aux) continue;
      std::size_t best = nonbasic_.size();
      for (std::size_t p = 0; p < nonbasic_.size(); ++p) {
        if (dead_[p] || rows_[i].coef[p] == 0) continue;
        if (best == nonbasic_.size() || nonbasic_[p] < nonbasic_[best]) best = p;
      }
      if (best == nonbasic_.size()) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, best);
      }
      break;
    }
    const auto pos = static_cast<std::size_t>(
        std::find(nonbasic_.begin(), nonbasic_.end(), aux) - nonbasic_.begin());
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(pos));
    dead_.erase(dead_.begin() + static_cast<std::ptrdiff_t>(pos));
    for (auto& r : rows_) r.coef.erase(r.coef.begin() + static_cast<std::ptrdiff_t>(pos));
    return true;
  }

  /// Maximizes c·x from a feasible dictionary.
  LpStatus maximize(const QVec& c) {
    obj_const_ = 0;
    obj_.assign(nonbasic_.size(), Rat(0));
    for (const auto& r : rows_) {
      if (restricted(r) || c[r.var] == 0) continue;
      obj_const_ += c[r.var] * r.constant;
      for (std::size_t p = 0; p < nonbasic_.size(); ++p) obj_[p] += c[r.var] * r.coef[p];
    }
    for (std::size_t p = 0; p < nonbasic_.size(); ++p) {
      if (nonbasic_[p] < n_) {
        obj_[p] += c[nonbasic_[p]];
        if (dead_[p] && obj_[p] != 0) return LpStatus::Unbounded;
      }
    }
    return run();
  }

  const Rat& objective_value() const { return obj_const_; }

  QVec point() const {
    QVec x(n_);
    for (const auto& r : rows_)
      if (r.var < n_) x[r.var] = r.constant;
    return x;
  }

 private:
  struct Row {
    std::size_t var = 0;
    Rat constant;
    std::vector<Rat> coef;  // indexed by nonbasic position
  };

  bool restricted(const Row& r) const { return r.var >= n_; }

  void eliminate_free_variables() {
    for (std::size_t j = 0; j < n_; ++j) {
      const auto pos = static_cast<std::size_t>(
          std::find(nonbasic_.begin(), nonbasic_.end(), j) - nonbasic_.begin());
      std::size_t best = rows_.size();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!restricted(rows_[i]) || rows_[i].coef[pos] == 0) continue;
        if (best == rows_.size() || rows_[i].var < rows_[best].var) best = i;
      }
      if (best == rows_.size()) {
        dead_[pos] = true;
      } else {
        pivot(best, pos);
      }
    }
  }

  // Bland's rule: lowest-index improving variable enters, ties in the
  // ratio test go to the lowest-index basic variable.
  LpStatus run() {
    for (;;) {
      std::size_t enter = nonbasic_.size();
      for (std::size_t p = 0; p < nonbasic_.size(); ++p) {
        if (dead_[p] || obj_[p] <= 0) continue;
        if (enter == nonbasic_.size() || nonbasic_[p] < nonbasic_[enter]) enter = p;
      }
      if (enter == nonbasic_.size()) return LpStatus::Optimal;

      std::size_t leave = rows_.size();
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& r = rows_[i];
        if (!restricted(r) || r.coef[enter] >= 0) continue;
        Rat ratio = r.constant / -r.coef[enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && r.var < rows_[leave].var)) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Row& piv = rows_[r];
    const Rat d = piv.coef[e];
    const Rat neg_inv = -1 / d;
    const std::size_t leaving = piv.var;
    piv.var = nonbasic_[e];
    piv.constant *= neg_inv;
    for (std::size_t p = 0; p < piv.coef.size(); ++p) {
      if (p == e) {
        piv.coef[p] = 1 / d;
      } else if (piv.coef[p] != 0) {
        piv.coef[p] *= neg_inv;
      }
    }
    nonbasic_[e] = leaving;

    auto substitute = [&](Rat& constant, std::vector<Rat>& coef) {
      const Rat t = coef[e];
      if (t == 0) return;
      constant += t * piv.constant;
      for (std::size_t p = 0; p < coef.size(); ++p) {
        if (p == e) {
          coef[p] = t * piv.coef[p];
        } else if (piv.coef[p] != 0) {
          coef[p] += t * piv.coef[p];
        }
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) substitute(rows_[i].constant, rows_[i].coef);
    if (!obj_.empty()) substitute(obj_const_, obj_);
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<Row> rows_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> dead_;
  Rat obj_const_;
  std::vector<Rat> obj_;
};

}  // namespace

LpResult lp_optimize(std::span<const Halfspace> constraints, const QVec& objective,
                     Sense sense) {
  const std::size_t n = objective.size();
  Dictionary dict(constraints, n);
  LpResult out;
  if (!dict.make_feasible()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  QVec c = objective;
  if (sense == Sense::Minimize)
    for (auto& x : c) x = -x;
  out.status = dict.maximize(c);
  if (out.status == LpStatus::Optimal) {
    out.value = sense == Sense::Minimize ? Rat(-dict.objective_value()) : dict.objective_value();
    out.point = dict.point();
  }
  return out;
}

std::optional<QVec> lp_feasible_point(std::span<const Halfspace> constraints, std::size_t dim) {
  LpResult r = lp_optimize(constraints, QVec(dim), Sense::Maximize);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return std::move(r.point);
}

SlackResult max_uniform_slack(std::span<const Halfspace> equalities,
                              std::span<const Halfspace> inequalities, std::size_t dim) {
  QMat A(equalities.size(), dim);
  QVec b(equalities.size());
  for (std::size_t i = 0; i < equalities.size(); ++i) {
    if (equalities[i].a.size() != dim) throw UsageError("constraint length differs from dimension");
    for (std::size_t j = 0; j < dim; ++j) A(i, j) = equalities[i].a[j];
    b[i] = equalities[i].b;
  }
  SlackResult out;
  auto param = solve_affine(A, b);
  if (!param) return out;
  out.feasible = true;

  const std::size_t k = param->dim();
  std::vector<Halfspace> rows;
  rows.reserve(inequalities.size() + 1);
  for (const auto& h : inequalities) {
    if (h.a.size() != dim) throw UsageError("constraint length differs from dimension");
    Halfspace r;
    r.a.resize(k + 1);
    for (std::size_t c = 0; c < k; ++c) r.a[c] = dot(h.a, param->basis[c]);
    r.a[k] = -1;
    r.b = h.b - dot(h.a, param->origin);
    rows.push_back(std::move(r));
  }
  Halfspace cap;
  cap.a.assign(k + 1, Rat(0));
  cap.a[k] = -1;
  cap.b = -1;
  rows.push_back(std::move(cap));

  QVec objective(k + 1);
  objective[k] = 1;
  LpResult lp = lp_optimize(rows, objective, Sense::Maximize);
  if (lp.status != LpStatus::Optimal) throw Error("uniform-slack program must have an optimum");
  out.slack = lp.value;
  QVec y(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(k));
  out.point = param->point(y);
  return out;
}

}  // namespace polygroth
