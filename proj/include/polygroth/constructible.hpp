#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "polygroth/limits.hpp"
#include "polygroth/polyhedron.hpp"
#include "polygroth/rational.hpp"

namespace polygroth {

/// a·x >= b, or a·x > b when strict. `a` is primitive.
struct Atom {
  IntVec a;
  Rat b;
  bool strict = false;

  bool holds_at(const QVec& x) const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Op { True, False, Atom, Not, And, Or };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op = Op::True;
  Atom atom;                  // Op::Atom only
  std::vector<ExprPtr> args;  // one for Not, two or more for And/Or
};

/// Boolean combination of half-space atoms in a fixed ambient R^n.
class ConstructibleSet {
 public:
  ConstructibleSet() : ConstructibleSet(universe(0)) {}
  ConstructibleSet(std::size_t dim, ExprPtr expr);

  static ConstructibleSet universe(std::size_t dim);
  static ConstructibleSet empty(std::size_t dim);
  /// Normalizes (a, b); throws DegenerateConstraintError when a = 0.
  static ConstructibleSet atom(std::size_t dim, const QVec& a, const Rat& b, bool strict = false);
  static ConstructibleSet from_polyhedron(const HPolyhedron& P);

  std::size_t dim() const { return dim_; }
  const ExprPtr& expr() const { return expr_; }

  bool contains(const QVec& x) const;
  /// Distinct atoms in order of first occurrence.
  std::vector<Atom> atoms() const;

  friend ConstructibleSet operator&(const ConstructibleSet& lhs, const ConstructibleSet& rhs);
  friend ConstructibleSet operator|(const ConstructibleSet& lhs, const ConstructibleSet& rhs);
  friend ConstructibleSet operator!(const ConstructibleSet& s);

 private:
  std::size_t dim_ = 0;
  ExprPtr expr_;
};

/// A AND NOT B.
ConstructibleSet difference(const ConstructibleSet& A, const ConstructibleSet& B);
bool eval_point(const ConstructibleSet& C, const QVec& x);

/// C x D in R^(m+n).
ConstructibleSet product(const ConstructibleSet& C, const ConstructibleSet& D);
/// C + t.
ConstructibleSet translate(const ConstructibleSet& C, const QVec& t);
/// { M x : x in C } for an invertible rational matrix M.
ConstructibleSet linear_image(const ConstructibleSet& C, const QMat& M);

/// Hyperplane a·x = b, oriented so that the first nonzero entry of a is
/// positive.
struct Hyperplane {
  IntVec a;
  Rat b;

  /// -1, 0 or 1 according to the sign of a·x - b.
  int side(const QVec& x) const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Oriented hyperplane of a (normalized) constraint together with the
/// factor f = ±1 such that a·x - b = f (h.a·x - h.b).
std::pair<Hyperplane, int> oriented(const IntVec& a, const Rat& b);

/// Sorted, deduplicated hyperplanes.
std::vector<Hyperplane> normalize_arrangement(std::vector<Hyperplane> hs);
std::vector<Hyperplane> hyperplanes_of(const ConstructibleSet& C);

struct Cell {
  std::vector<int> signs;  // one of -1, 0, 1 per hyperplane
  QVec witness;
  int dim = 0;
};

struct CellComplex {
  std::size_t dim = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Cell> cells;  // lexicographic in signs with - < 0 < +
};

/// All nonempty sign cells of the arrangement. The hyperplanes are
/// normalized first; the cap applies to the normalized count.
CellComplex cell_complex(std::size_t dim, std::vector<Hyperplane> hyperplanes,
                         const Limits& limits = {});

/// Formal integer combination of closed polyhedra, keyed by canonical form.
class SignedPolyCombo {
 public:
  using Terms = std::map<HPolyhedron, Int, PolyhedronLess>;

  explicit SignedPolyCombo(std::size_t dim = 0) : dim_(dim) {}

  static SignedPolyCombo indicator(const HPolyhedron& P);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }

  /// Adds c·1_P; empty P and zero c are ignored.
  void add(const HPolyhedron& P, const Int& c);
  Int eval(const QVec& x) const;
  std::vector<Hyperplane> hyperplanes() const;

  SignedPolyCombo& operator+=(const SignedPolyCombo& other);
  SignedPolyCombo& operator-=(const SignedPolyCombo& other);
  friend SignedPolyCombo operator+(SignedPolyCombo lhs, const SignedPolyCombo& rhs) {
    return lhs += rhs;
  }
  friend SignedPolyCombo operator-(SignedPolyCombo lhs, const SignedPolyCombo& rhs) {
    return lhs -= rhs;
  }
  friend SignedPolyCombo operator*(const Int& c, const SignedPolyCombo& f);

 private:
  void add_canonical(const HPolyhedron& key, const Int& c);

  std::size_t dim_;
  Terms terms_;
};

/// Indicator of C as a combination of closed polyhedra (inclusion-exclusion
/// over closed atoms, with x > b rewritten as the complement of -x >= -b).
SignedPolyCombo to_signed_combo(const ConstructibleSet& C);

/// Exact pointwise equality, decided on the cells of the joint arrangement.
bool functions_equal(const SignedPolyCombo& f, const SignedPolyCombo& g, const Limits& limits = {});
bool sets_equal(const ConstructibleSet& C, const ConstructibleSet& D, const Limits& limits = {});

}  // namespace polygroth
