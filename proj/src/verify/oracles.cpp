#include "polygroth/verify/oracles.hpp"

#include <set>

#include "polygroth/errors.hpp"
#include "polygroth/lp.hpp"

namespace polygroth::verify {

namespace {

bool strictly_feasible(const std::vector<Halfspace>& eqs, const std::vector<Halfspace>& ineqs, std::size_t n) {
  const SlackResult r = max_uniform_slack(eqs, ineqs, n);
  return r.feasible && r.slack > 0;
}

}  // namespace

std::vector<std::vector<int>> brute_force_sign_vectors(std::size_t dim, const std::vector<Hyperplane>& hs) {
  const std::size_t k = hs.size();
  if (k > 12) throw ResourceError("brute-force enumeration limited to 12 hyperplanes");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  std::vector<std::vector<int>> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> signs(k);
    std::size_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      signs[i] = static_cast<int>(c % 3) - 1;
      c /= 3;
    }
    std::vector<Halfspace> eqs;
    std::vector<Halfspace> ineqs;
    for (std::size_t i = 0; i < k; ++i) {
      const QVec a = to_qvec(hs[i].a);
      if (signs[i] == 0) {
        eqs.push_back({a, hs[i].b});
      } else if (signs[i] > 0) {
        ineqs.push_back({a, hs[i].b});
      } else {
        QVec na = a;
        for (auto& x : na) x = -x;
        ineqs.push_back({na, -hs[i].b});
      }
    }
    if (strictly_feasible(eqs, ineqs, dim)) out.push_back(signs);
  }
  return out;
}

std::size_t brute_force_face_count(const HPolyhedron& P) {
  if (is_empty(P)) return 0;
  const HPolyhedron Q = irredundant(P);
  const auto& rows = Q.rows();
  if (rows.size() > 16) throw ResourceError("brute-force face count limited to 16 rows");
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rows.size()); ++mask) {
    std::vector<Halfspace> eqs;
    std::vector<Halfspace> ineqs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (mask >> i & 1) {
        eqs.push_back(rows[i].halfspace());
      } else {
        ineqs.push_back(rows[i].halfspace());
      }
    }
    if (strictly_feasible(eqs, ineqs, Q.dim())) ++count;
  }
  return count;
}

std::int64_t chi_b_by_closure(const ConstructibleSet& C, const Limits& limits) {
  const CellComplex cx = cell_complex(C.dim(), hyperplanes_of(C), limits);
  std::int64_t total = 0;
  for (const Cell& s : cx.cells) {
    if (!C.contains(s.witness)) continue;
    for (const Cell& t : cx.cells) {
      bool below = true;
      for (std::size_t i = 0; i < s.signs.size() && below; ++i) below = t.signs[i] == 0 || t.signs[i] == s.signs[i];
      if (below) total += (s.dim - t.dim) % 2 == 0 ? 1 : -1;
    }
  }
  return total;
}

Bivariate reduce_mixed(Bivariate p) {
  for (;;) {
    auto it = p.begin();
    while (it != p.end() && (it->first.first == 0 || it->first.second == 0 || it->second == 0)) ++it;
    if (it == p.end()) break;
    const auto [i, j] = it->first;
    const std::int64_t c = it->second;
    p.erase(it);
    p[{i, j - 1}] += c;
    p[{i - 1, j}] += c;
    p[{i - 1, j - 1}] -= c;
  }
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

VFClass to_pair(const Bivariate& p) {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g;
  for (const auto& [e, c] : p) {
    const auto [i, j] = e;
    if (f.size() <= static_cast<std::size_t>(i)) f.resize(i + 1, 0);
    if (g.size() <= static_cast<std::size_t>(j)) g.resize(j + 1, 0);
    f[i] += c;
    g[j] += c;
  }
  return VFClass(IntPoly(f), IntPoly(g));
}

Bivariate bivariate_mul(const Bivariate& p, const Bivariate& q) {
  Bivariate r;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

}  // namespace polygroth::verify
