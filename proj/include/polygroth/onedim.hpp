#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygroth/constructible.hpp"
#include "polygroth/rational.hpp"

namespace polygroth {

/// Subgroup of Q: all of Q, or c·Z for a positive rational c.
class SubgroupQ {
 public:
  static SubgroupQ divisible() { return SubgroupQ(); }
  /// Throws UsageError unless c > 0.
  static SubgroupQ cyclic(const Rat& c);

  bool is_divisible() const { return !generator_; }
  const std::optional<Rat>& generator() const { return generator_; }
  bool contains(const Rat& x) const;
  std::string render() const;  // "Q" or "c*Z"

 private:
  std::optional<Rat> generator_;
};

/// Open interval; nullopt endpoints are -inf (lo) and +inf (hi).
struct OpenInterval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  bool contains(const Rat& x) const;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Disjoint union of points and maximal open intervals, both sorted.
struct OneDimCanonical {
  std::vector<Rat> points;
  std::vector<OpenInterval> intervals;

  bool contains(const Rat& x) const;
  /// Interval endpoints and points, sorted and unique.
  std::vector<Rat> candidate_points() const;
  std::string render() const;
  friend bool operator==(const OneDimCanonical&, const OneDimCanonical&) = default;
};

/// Throws UsageError unless C lives in R^1.
OneDimCanonical canonicalize(const ConstructibleSet& C);

/// The local weight in {-2, ..., 2}: 2 at isolated points, -2 at isolated
/// points of the complement, ±1 at one-sided boundary points (+ when the
/// point belongs to the set), 0 elsewhere.
int weight(const OneDimCanonical& C, const Rat& x);

/// Sum of weights over the points of the subgroup. Weights vanish away from
/// the candidate points, so the sum is finite.
std::int64_t chi_gamma(const OneDimCanonical& C, const SubgroupQ& gamma);
std::int64_t chi_gamma(const ConstructibleSet& C, const SubgroupQ& gamma);

}  // namespace polygroth
