#include "pfol/foliation.hpp"

namespace pfol {

namespace {

// u^m p(1/u, v/u): x^i y^j -> u^(m-i-j) v^j, with (u, v) in the (x, y) slots
MultiPoly flip_chart2(const MultiPoly& p, long m) {
    MultiPoly out(p.field());
    for (const auto& [mono, c] : p.terms()) {
        long i = mono[Var::X], j = mono[Var::Y];
        Monomial t;
        t[Var::X] = static_cast<std::uint32_t>(m - i - j);
        t[Var::Y] = static_cast<std::uint32_t>(j);
        out.add_term(t, c);
    }
    return out;
}

// w^m p(s/w, 1/w): x^i y^j -> s^i w^(m-i-j), with (s, w) in the (x, y) slots
MultiPoly flip_chart3(const MultiPoly& p, long m) {
    MultiPoly out(p.field());
    for (const auto& [mono, c] : p.terms()) {
        long i = mono[Var::X], j = mono[Var::Y];
        Monomial t;
        t[Var::X] = static_cast<std::uint32_t>(i);
        t[Var::Y] = static_cast<std::uint32_t>(m - i - j);
        out.add_term(t, c);
    }
    return out;
}

}  // namespace

ChartPair to_chart2(const MultiPoly& A, const MultiPoly& B) {
    // x = 1/u, y = v/u: u^(m+2) (A dx + B dy) = (-At - v Bt) du + u Bt dv
    const FieldSpec& field = A.field();
    long m = std::max(A.degree(), B.degree());
    MultiPoly at = flip_chart2(A, m);
    MultiPoly bt = flip_chart2(B, m);
    MultiPoly u = MultiPoly::variable(field, Var::X);
    MultiPoly v = MultiPoly::variable(field, Var::Y);
    return ChartPair{-at - v * bt, u * bt};
}

ChartPair to_chart3(const MultiPoly& A, const MultiPoly& B) {
    // x = s/w, y = 1/w: w^(m+2) (A dx + B dy) = w At ds + (-s At - Bt) dw
    const FieldSpec& field = A.field();
    long m = std::max(A.degree(), B.degree());
    MultiPoly at = flip_chart3(A, m);
    MultiPoly bt = flip_chart3(B, m);
    MultiPoly s = MultiPoly::variable(field, Var::X);
    MultiPoly w = MultiPoly::variable(field, Var::Y);
    return ChartPair{w * at, -s * at - bt};
}

}  // namespace pfol
