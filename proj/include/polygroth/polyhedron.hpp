#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "polygroth/limits.hpp"
#include "polygroth/lp.hpp"
#include "polygroth/rational.hpp"

namespace polygroth {

/// One constraint a·x >= b with a primitive integer vector.
struct Row {
  IntVec a;
  Rat b;

  Halfspace halfspace() const { return {to_qvec(a), b}; }
  Row reversed() const;  // -a·x >= -b
  bool satisfied_by(const QVec& x) const { return dot(a, x) >= b; }
  bool tight_at(const QVec& x) const { return dot(a, x) == b; }

  friend bool operator==(const Row&, const Row&) = default;
};

/// Lexicographic on (a, b).
int compare(const Row& lhs, const Row& rhs);

/// Rational polyhedron { x in R^n : a·x >= b for every row }. No rows
/// denotes R^n. Rows are primitive-normalized on construction.
class HPolyhedron {
 public:
  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {}
  HPolyhedron(std::size_t dim, std::vector<Row> rows);
  HPolyhedron(std::size_t dim, const std::vector<Halfspace>& rows);

  static HPolyhedron whole_space(std::size_t dim) { return HPolyhedron(dim); }
  /// The box [lo, hi]^n.
  static HPolyhedron box(std::size_t dim, const Rat& lo, const Rat& hi);

  std::size_t dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<Halfspace> halfspaces() const;

  bool contains(const QVec& x) const;

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Row> rows_;
};

/// Total order on the structural representation (dim, then rows).
struct PolyhedronLess {
  bool operator()(const HPolyhedron& lhs, const HPolyhedron& rhs) const;
};

bool is_empty(const HPolyhedron& P);
/// Affine dimension. Throws DomainError on the empty set.
int dimension(const HPolyhedron& P);
bool contains(const HPolyhedron& P, const QVec& x);
bool is_bounded(const HPolyhedron& P);

/// Equivalent description in which no row can be dropped. Throws
/// DomainError on the empty set.
HPolyhedron irredundant(const HPolyhedron& P);

/// Canonical description: equal sets give identical representations.
/// nullopt for the empty set.
std::optional<HPolyhedron> canonical(const HPolyhedron& P);

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q);
HPolyhedron product(const HPolyhedron& P, const HPolyhedron& Q);

/// A nonempty face of an irredundant parent, identified by the complete set
/// of parent rows that are tight on it.
struct Face {
  HPolyhedron parent;
  std::vector<std::size_t> tight;
  int dim = 0;
  QVec witness;  // relative-interior point

  /// The closed face as a polyhedron (tight rows turned into equalities).
  HPolyhedron as_polyhedron() const;
};

bool operator==(const Face& lhs, const Face& rhs);

/// All nonempty faces including P, sorted by (dim, tight set). The faces'
/// parent is irredundant(P). Throws DomainError on the empty set.
std::vector<Face> faces(const HPolyhedron& P, const Limits& limits = {});

struct RecessionData {
  HPolyhedron rec;
  std::vector<QVec> lin_basis;
  int ell = 0;
};

/// Throws DomainError on the empty set.
RecessionData recession(const HPolyhedron& P);

/// rec(F) == Lin(parent).
bool is_relatively_bounded(const Face& F);

/// T_F P, cut out by the parent rows tight on F.
HPolyhedron tangent_cone(const Face& F);

/// x must lie outside the parent (DomainError otherwise).
bool is_visible(const Face& F, const QVec& x);

/// A point of the minimal face. Throws DomainError on the empty set.
QVec minimal_face_point(const HPolyhedron& P);

}  // namespace polygroth
