#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polygroth/rational.hpp"

namespace polygroth {

/// The closed half-space { x : a·x >= b }.
struct Halfspace {
  QVec a;
  Rat b;
};

enum class Sense { Maximize, Minimize };
enum class LpStatus { Infeasible, Unbounded, Optimal };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;   // meaningful for Optimal only
  QVec point;  // attaining point for Optimal
};

/// Exact simplex over free variables x in Q^n subject to a_i·x >= b_i.
/// Pivoting follows Bland's rule, so it terminates on degenerate input;
/// unboundedness is reported from the ray found in the ratio test.
/// n is taken from objective.size(); a row of another length is a UsageError.
LpResult lp_optimize(std::span<const Halfspace> constraints, const QVec& objective,
                     Sense sense);

/// Some point satisfying every constraint, or nullopt.
std::optional<QVec> lp_feasible_point(std::span<const Halfspace> constraints,
                                      std::size_t dim);

/// Largest uniform slack: maximize t <= 1 subject to the equalities and
/// a_i·x - t >= b_i for every inequality. `feasible` is false only when the
/// equality system is inconsistent. The inequalities are satisfiable iff
/// slack >= 0 and satisfiable strictly iff slack > 0.
struct SlackResult {
  bool feasible = false;
  Rat slack;
  QVec point;
};

SlackResult max_uniform_slack(std::span<const Halfspace> equalities,
                              std::span<const Halfspace> inequalities, std::size_t dim);

}  // namespace polygroth
