#include "pfol/poly.hpp"

namespace pfol {

namespace {

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (Var v : kAllVars) {
        std::uint32_t k = m[v];
        if (k == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace

// Canonical form: terms in graded-lex descending order; rational coefficients
// carry their sign in the joining operator, quadratic-field coefficients are
// always parenthesized and joined with '+'. The output reparses to the same
// polynomial.
std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = monomial_to_string(m);
        if (c.is_rational()) {
            const Rat& r = c.rational_part();
            bool neg = r < 0;
            Rat av = neg ? Rat(-r) : r;
            if (first) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (mono.empty()) {
                s += rat_to_string(av);
            } else if (av == 1) {
                s += mono;
            } else {
                s += rat_to_string(av) + "*" + mono;
            }
        } else {
            if (!first) s += " + ";
            s += "(" + c.to_string() + ")";
            if (!mono.empty()) s += "*" + mono;
        }
        first = false;
    }
    return s;
}

}  // namespace pfol
