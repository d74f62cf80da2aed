#pragma once

#include <optional>

#include "pfol/parser.hpp"

namespace pfol {

// Parsed pencil file. Source strings are kept verbatim so reports can show
// the document exactly as written.
struct PencilDocument {
    FieldSpec field;
    std::string omega_src, eta_src;
    OneForm omega, eta;
    std::optional<std::string> label;
    std::vector<std::pair<std::string, MultiPoly>> curves;
    std::optional<std::string> first_integral_src;
    std::optional<RationalFunction> first_integral;
    std::optional<std::string> expect_tangency_src;
    std::optional<MultiPoly> expect_tangency;
    std::optional<bool> expect_flat;
};

// Line-oriented key/value document with sections [field], [pencil], [curves]
// and [expect]; values are quoted expression strings. Offsets in errors are
// 1-based line numbers.
PencilDocument parse_pencil_file(const std::string& text);

// canonical re-emission; round-trip stable through parse_pencil_file
std::string print_pencil_file(const PencilDocument& doc, bool include_expect = true);

// minimal polynomial "t^2 - u*t - v" of the field generator
FieldSpec parse_minimal_polynomial(const std::string& text);
std::string minimal_polynomial_string(const FieldSpec& f);

std::string one_form_to_string(const OneForm& w);

}  // namespace pfol
