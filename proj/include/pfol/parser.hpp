#pragma once

#include <utility>

#include "pfol/rational_function.hpp"

namespace pfol {

// 1-form A dx + B dy, stored as the coefficient pair (A, B).
struct OneForm {
    MultiPoly A, B;

    const FieldSpec& field() const { return A.field(); }
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
    std::string to_string() const;
};

// Grammar (whitespace-insensitive): integers, rationals `a/b`, the field
// generator `t`, variables `x` and `y`, operators + - * ^, parentheses and
// unary minus. `^` takes a nonnegative integer literal; multiplication is
// always explicit. Errors carry the byte offset.
MultiPoly parse_poly(const std::string& text, const FieldSpec& field = FieldSpec());

// sum of `<coef> dx` / `<coef> dy` terms, e.g. "(4*x - 9*x^2 + y^2) dy - (6*y - 12*x*y) dx"
OneForm parse_one_form(const std::string& text, const FieldSpec& field = FieldSpec());

// a degree-zero polynomial expression
Scalar parse_scalar(const std::string& text, const FieldSpec& field = FieldSpec());

// `<poly>` or `<poly> / <poly>`
RationalFunction parse_rational_function(const std::string& text,
                                         const FieldSpec& field = FieldSpec());

// grammar variant over Q in which `t` is a polynomial variable rather than
// the field generator (used for minimal polynomials)
MultiPoly parse_poly_t_variable(const std::string& text);

}  // namespace pfol
