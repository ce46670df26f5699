#pragma once

#include <string>
#include <string_view>

#include "polygroth/constructible.hpp"
#include "polygroth/motivic.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth {

/// `dim n; <expr>` with atoms such as `2x1 - 3x2 >= 5/2` or `x1 > 0`,
/// connectives `!`, `&`, `\`, `|` (tightest first), parentheses, and the
/// constants `true` and `false`. Throws ParseError.
ConstructibleSet parse_constructible(std::string_view text);

/// One `a1 ... an >= b` row per line (or per `;`), `#` comments. Input that
/// starts with `dim` is read as an expression and must be a conjunction of
/// closed atoms.
HPolyhedron parse_polyhedron(std::string_view text);

/// `torus n;` followed by at most one expression over atoms
/// `val(t^q * x1^k ...) >= val(...)` (or a rational constant on either
/// side) and any number of `point;` statements. Non-monomial arguments of
/// `val` raise UnsupportedError.
SemialgDesc parse_semialg(std::string_view text);

std::string render_linear(const IntVec& a);  // "2x1 - x3"
std::string render_atom(const Atom& atom);
std::string render_expr(const Expr& e);
std::string render_constructible(const ConstructibleSet& C);
std::string render_row(const Row& r);  // "1 0 -2 >= 1/2"
std::string render_polyhedron(const HPolyhedron& P);
std::string render_semialg(const SemialgDesc& s);

/// Structural equality of expression trees.
bool same_expression(const Expr& x, const Expr& y);

}  // namespace polygroth
