#pragma once

#include <optional>

#include "pfol/poly.hpp"

namespace pfol {

// Exact-division attempt via leading-term trial division (graded-lex); empty
// when `divisor` does not divide `dividend`.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);
MultiPoly divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);
bool divides(const MultiPoly& f, const MultiPoly& g);

// pseudo remainder of a by b with respect to v: lc_v(b)^(deg a - deg b + 1) a mod b
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

// gcd of the coefficients of f seen as a polynomial in v
MultiPoly content_in(const MultiPoly& f, Var v);
MultiPoly primitive_part_in(const MultiPoly& f, Var v);

// Greatest common divisor, computed by content/primitive-part recursion with
// a subresultant polynomial remainder sequence. Result is monic with respect
// to the graded-lex leading coefficient.
MultiPoly gcd_multivariate(const MultiPoly& f, const MultiPoly& g);

// f divided by gcd(f, all first partials); monic
MultiPoly squarefree_part(const MultiPoly& f);

// f == c * g for some nonzero scalar c
bool proportional(const MultiPoly& f, const MultiPoly& g);

// Determinant of the Sylvester matrix of f and g in `v` (rows of f first,
// coefficients in descending powers), by fraction-free elimination. Both
// inputs must have positive degree in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v);

// Sylvester determinant without the positive-degree precondition:
// deg_v g == 0 yields g^(deg_v f). Used by the pencil candidate search.
MultiPoly resultant_relaxed(const MultiPoly& f, const MultiPoly& g, Var v);

}  // namespace pfol
