#include "polygroth/onedim.hpp"

#include <algorithm>

#include "polygroth/errors.hpp"

namespace polygroth {

SubgroupQ SubgroupQ::cyclic(const Rat& c) {
  if (c <= 0) throw UsageError("subgroup generator must be positive");
  SubgroupQ g;
  g.generator_ = c;
  return g;
}

bool SubgroupQ::contains(const Rat& x) const {
  if (!generator_) return true;
  return is_integer(Rat(x / *generator_));
}

std::string SubgroupQ::render() const {
  if (!generator_) return "Q";
  return to_string(*generator_) + "*Z";
}

bool OpenInterval::contains(const Rat& x) const {
  return (!lo || *lo < x) && (!hi || x < *hi);
}

bool OneDimCanonical::contains(const Rat& x) const {
  if (std::binary_search(points.begin(), points.end(), x)) return true;
  return std::any_of(intervals.begin(), intervals.end(), [&](const OpenInterval& I) { return I.contains(x); });
}

std::vector<Rat> OneDimCanonical::candidate_points() const {
  std::vector<Rat> out = points;
  for (const auto& I : intervals) {
    if (I.lo) out.push_back(*I.lo);
    if (I.hi) out.push_back(*I.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string OneDimCanonical::render() const {
  // Pieces ordered by left end, -inf first.
  std::vector<std::pair<std::optional<Rat>, std::string>> parts;
  for (const auto& p : points) parts.emplace_back(p, "{" + to_string(p) + "}");
  for (const auto& I : intervals)
    parts.emplace_back(I.lo, "(" + (I.lo ? to_string(*I.lo) : std::string("-inf")) + ", " +
                                 (I.hi ? to_string(*I.hi) : std::string("inf")) + ")");
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (!x.first || !y.first) return !x.first && y.first;
    return *x.first < *y.first;
  });
  if (parts.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " u " : "") + parts[i].second;
  return out;
}

OneDimCanonical canonicalize(const ConstructibleSet& C) {
  if (C.dim() != 1) throw UsageError("one-dimensional invariants need a set in R^1");
  std::vector<Rat> cuts;
  for (const auto& at : C.atoms()) cuts.push_back(at.b / Rat(at.a[0]));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Pieces in order: segment 0, cut 0, segment 1, ..., cut k-1, segment k.
  const std::size_t k = cuts.size();
  auto segment_sample = [&](std::size_t i) -> Rat {
    if (k == 0) return 0;
    if (i == 0) return cuts[0] - 1;
    if (i == k) return cuts[k - 1] + 1;
    return (cuts[i - 1] + cuts[i]) / 2;
  };
  std::vector<bool> in(2 * k + 1);
  for (std::size_t i = 0; i <= k; ++i) in[2 * i] = C.contains({segment_sample(i)});
  for (std::size_t i = 0; i < k; ++i) in[2 * i + 1] = C.contains({cuts[i]});

  OneDimCanonical out;
  for (std::size_t s = 0; s < in.size();) {
    if (!in[s]) {
      ++s;
      continue;
    }
    std::size_t e = s;
    while (e + 1 < in.size() && in[e + 1]) ++e;
    // Maximal run of pieces s..e.
    if (s == e && s % 2 == 1) {
      out.points.push_back(cuts[s / 2]);
    } else {
      const std::size_t first_seg = s % 2 == 0 ? s : s + 1;
      const std::size_t last_seg = e % 2 == 0 ? e : e - 1;
      OpenInterval I;
      if (first_seg > 0) I.lo = cuts[first_seg / 2 - 1];
      if (last_seg / 2 < k) I.hi = cuts[last_seg / 2];
      out.intervals.push_back(I);
      if (s % 2 == 1) out.points.push_back(cuts[s / 2]);
      if (e % 2 == 1) out.points.push_back(cuts[e / 2]);
    }
    s = e + 1;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

int weight(const OneDimCanonical& C, const Rat& x) {
  const bool m = std::binary_search(C.points.begin(), C.points.end(), x) ||
                 std::any_of(C.intervals.begin(), C.intervals.end(),
                             [&](const OpenInterval& I) { return I.contains(x); });
  bool left = false;
  bool right = false;
  for (const auto& I : C.intervals) {
    if ((!I.lo || *I.lo < x) && (!I.hi || x <= *I.hi)) left = true;
    if ((!I.lo || *I.lo <= x) && (!I.hi || x < *I.hi)) right = true;
  }
  const int sides = int(left) + int(right);
  if (m) return sides == 0 ? 2 : (sides == 1 ? 1 : 0);
  return sides == 2 ? -2 : (sides == 1 ? -1 : 0);
}

std::int64_t chi_gamma(const OneDimCanonical& C, const SubgroupQ& gamma) {
  std::int64_t s = 0;
  for (const auto& x : C.candidate_points())
    if (gamma.contains(x)) s += weight(C, x);
  return s;
}

std::int64_t chi_gamma(const ConstructibleSet& C, const SubgroupQ& gamma) {
  return chi_gamma(canonicalize(C), gamma);
}

}  // namespace polygroth
