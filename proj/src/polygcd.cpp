#include "pfol/polyfn.hpp"

namespace pfol {

std::optional<MultiPoly> try_divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
    if (divisor.is_zero()) throw MathError("DivisionByZero", "division by the zero polynomial");
    MultiPoly q(dividend.field());
    MultiPoly r = dividend;
    const Monomial& lm = divisor.leading_monomial();
    const Scalar lc_inv = divisor.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!lm.divides(rm)) return std::nullopt;
        MultiPoly t = MultiPoly::term(r.leading_coefficient() * lc_inv, rm / lm);
        q += t;
        r -= t * divisor;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
    auto q = try_divide_exact(dividend, divisor);
    if (!q)
        throw MathError("InexactDivision",
                        divisor.to_string() + " does not divide " + dividend.to_string());
    return *q;
}

bool divides(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g.is_zero();
    if (g.is_zero()) return true;
    return try_divide_exact(g, f).has_value();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    long db = b.degree_in(v);
    if (b.is_zero() || db < 0) throw MathError("DivisionByZero", "pseudo remainder by zero");
    MultiPoly d = b.leading_coefficient_in(v);
    MultiPoly r = a;
    long e = a.degree_in(v) - db + 1;
    if (e < 0) e = 0;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        MultiPoly lr = r.leading_coefficient_in(v);
        long k = r.degree_in(v) - db;
        MultiPoly shift = MultiPoly::term(Scalar::one(b.field()), Monomial::var(v, static_cast<std::uint32_t>(k)));
        r = d * r - lr * shift * b;
        --e;
    }
    for (; e > 0; --e) r = d * r;
    return r;
}

MultiPoly content_in(const MultiPoly& f, Var v) {
    if (f.is_zero()) return f;
    MultiPoly c(f.field());
    bool started = false;
    for (const auto& [k, coeff] : f.coefficients_in(v)) {
        if (!started) {
            c = coeff;
            started = true;
        } else {
            c = gcd_multivariate(c, coeff);
        }
        if (c.is_constant()) break;
    }
    return c.monic();
}

MultiPoly primitive_part_in(const MultiPoly& f, Var v) {
    if (f.is_zero()) return f;
    return divide_exact(f, content_in(f, v));
}

namespace {

// subresultant PRS on primitive inputs, both of positive degree in v
MultiPoly prs_gcd(MultiPoly a, MultiPoly b, Var v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    const FieldSpec& field = a.field();
    MultiPoly g = MultiPoly::constant(Scalar::one(field));
    MultiPoly h = g;
    while (true) {
        long delta = a.degree_in(v) - b.degree_in(v);
        MultiPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return primitive_part_in(b, v);
        if (r.degree_in(v) == 0) return MultiPoly::constant(Scalar::one(field));
        a = b;
        MultiPoly divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        b = divide_exact(r, divisor);
        g = a.leading_coefficient_in(v);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            MultiPoly num = g;
            for (long i = 1; i < delta; ++i) num *= g;
            MultiPoly den = h;
            for (long i = 2; i < delta; ++i) den *= h;
            h = divide_exact(num, den);
        }
    }
}

}  // namespace

MultiPoly gcd_multivariate(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw MathError("ZeroPolynomial", "gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const FieldSpec field = f.field() == g.field() ? f.field()
                            : f.field().is_rationals() ? g.field()
                                                       : f.field();
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(Scalar::one(field));

    // main variable: first canonical variable either polynomial uses
    Var v = Var::X;
    bool found = false;
    for (Var cand : kAllVars) {
        if (f.degree_in(cand) > 0 || g.degree_in(cand) > 0) {
            v = cand;
            found = true;
            break;
        }
    }
    if (!found) return MultiPoly::constant(Scalar::one(field));

    if (f.degree_in(v) == 0) return gcd_multivariate(f, content_in(g, v)).monic();
    if (g.degree_in(v) == 0) return gcd_multivariate(content_in(f, v), g).monic();

    MultiPoly cf = content_in(f, v);
    MultiPoly cg = content_in(g, v);
    MultiPoly c = cf.is_constant() || cg.is_constant()
                      ? MultiPoly::constant(Scalar::one(field))
                      : gcd_multivariate(cf, cg);
    MultiPoly part = prs_gcd(divide_exact(f, cf), divide_exact(g, cg), v);
    return (c * part).monic();
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw MathError("ZeroPolynomial", "squarefree part of zero");
    if (f.is_constant()) return MultiPoly::constant(Scalar::one(f.field()));
    MultiPoly g = f;
    for (Var v : f.support_vars()) g = gcd_multivariate(g, f.derivative(v));
    return divide_exact(f, g).monic();
}

bool proportional(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (!(f.leading_monomial() == g.leading_monomial())) return false;
    Scalar c = f.leading_coefficient() / g.leading_coefficient();
    return f == g * c;
}

}  // namespace pfol
