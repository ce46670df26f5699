#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polygroth/constructible.hpp"
#include "polygroth/limits.hpp"
#include "polygroth/motivic.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth::verify {

/// Every sign vector in {-1,0,1}^k realized by the arrangement, found by
/// testing all 3^k candidates with an LP. Lexicographic order.
std::vector<std::vector<int>> brute_force_sign_vectors(std::size_t dim, const std::vector<Hyperplane>& hs);

/// Number of nonempty faces, found by forcing every subset of the rows of
/// irredundant(P) to equality and deduplicating on the full tight set.
std::size_t brute_force_face_count(const HPolyhedron& P);

/// chi_b from C's own arrangement without clipping: each cell s inside C
/// contributes the sum over the cells t in its closure of (-1)^(dim s - dim t).
std::int64_t chi_b_by_closure(const ConstructibleSet& C, const Limits& limits = {});

/// Polynomial in L and tau, keyed by exponent pair.
using Bivariate = std::map<std::pair<int, int>, std::int64_t>;

/// Normal form modulo (L-1)(tau-1) by rewriting L*tau -> L + tau - 1 until
/// no mixed monomial remains.
Bivariate reduce_mixed(Bivariate p);

/// Image of a bivariate polynomial in the pair model.
VFClass to_pair(const Bivariate& p);

Bivariate bivariate_mul(const Bivariate& p, const Bivariate& q);

}  // namespace polygroth::verify
