#include "pfol/surfaces.hpp"

namespace pfol {

TorusSpec TorusSpec::quadratic(const Rat& u, const Rat& v) {
    TorusSpec t;
    t.generic = false;
    t.tau_field = FieldSpec::quadratic(u, v);
    if (!t.tau_field.imaginary())
        throw MathError("RealQuadraticTau",
                        "tau with discriminant " + rat_to_string(t.tau_field.discriminant()) +
                            " >= 0 is not an elliptic lattice parameter");
    return t;
}

EndomorphismAlgebra endomorphism_algebra(const TorusSpec& t) {
    EndomorphismAlgebra e;
    if (t.generic) {
        e.is_rational_field = true;
        e.field = FieldSpec::rationals();
    } else {
        e.is_rational_field = false;
        e.field = t.tau_field;
    }
    return e;
}

bool ip_linear_torus_membership(const TorusSpec& t, const Scalar& alpha) {
    if (alpha.is_rational()) return true;  // Q embeds in both answers
    if (t.generic) return false;
    if (alpha.field() == t.tau_field) return true;
    throw MathError("FieldMismatch",
                    "alpha lies in a quadratic field different from Q(tau)");
}

HopfSpec::HopfSpec(Scalar a_, Scalar b_, Scalar lambda_, long r_)
    : a(std::move(a_)), b(std::move(b_)), lambda(std::move(lambda_)), r(r_) {
    if (r < 1) throw MathError("InvalidHopfSpec", "r must be a positive integer");
    if (a.is_zero() || b.is_zero())
        throw MathError("InvalidHopfSpec", "a and b must be nonzero");
    if (!lambda.is_zero() && !(a == b.pow(r)))
        throw MathError("InvalidHopfSpec", "lambda != 0 requires a = b^r exactly");
}

HopfIterate hopf_iterate(const HopfSpec& h, long n) {
    const FieldSpec& K = h.a.field();
    MultiPoly x = MultiPoly::variable(K, Var::X);
    MultiPoly y = MultiPoly::variable(K, Var::Y);
    if (n >= 0) {
        MultiPoly fx = x * h.a + y.pow(h.r) * h.lambda;
        MultiPoly fy = y * h.b;
        MultiPoly cx = x, cy = y;
        for (long i = 0; i < n; ++i) {
            MultiPoly nx = cx.substitute_xy(fx, fy);
            MultiPoly ny = cy.substitute_xy(fx, fy);
            cx = std::move(nx);
            cy = std::move(ny);
        }
        return {cx, cy};
    }
    // inverse map: (x, y) -> ((x - lambda (y/b)^r)/a, y/b)
    MultiPoly gx = (x - y.pow(h.r) * (h.lambda / h.b.pow(h.r))) * h.a.inverse();
    MultiPoly gy = y * h.b.inverse();
    MultiPoly cx = x, cy = y;
    for (long i = 0; i < -n; ++i) {
        MultiPoly nx = cx.substitute_xy(gx, gy);
        MultiPoly ny = cy.substitute_xy(gx, gy);
        cx = std::move(nx);
        cy = std::move(ny);
    }
    return {cx, cy};
}

HopfIterate hopf_closed_form(const HopfSpec& h, long n) {
    const FieldSpec& K = h.a.field();
    MultiPoly x = MultiPoly::variable(K, Var::X);
    MultiPoly y = MultiPoly::variable(K, Var::Y);
    Scalar an = h.a.pow(n);
    Scalar an1 = h.a.pow(n - 1);
    Scalar bn = h.b.pow(n);
    MultiPoly fx = x * an + y.pow(h.r) * (h.lambda * Scalar::of(K, n) * an1);
    MultiPoly fy = y * bn;
    return {fx, fy};
}

bool hopf_closed_form_check(const HopfSpec& h, long n) {
    HopfIterate it = hopf_iterate(h, n);
    HopfIterate cf = hopf_closed_form(h, n);
    return it.x == cf.x && it.y == cf.y;
}

HopfSectionMeets hopf_section_meets(const HopfSpec& h, const std::optional<Scalar>& alpha,
                                    long N) {
    if (N < 1) throw MathError("InvalidArgument", "N must be at least 1");
    const FieldSpec& K = h.a.field();
    const Scalar one = Scalar::one(K);
    HopfSectionMeets out;
    for (long n = 1; n <= N; ++n) {
        if (alpha && !alpha->is_zero()) {
            // x = (b^n - 1)/alpha, x' = (b^n - 1)/(a^n alpha) - n lambda / a
            Scalar bn1 = h.b.pow(n) - one;
            out.x_values.push_back(bn1 / *alpha);
            out.companion.push_back(bn1 / (h.a.pow(n) * *alpha) -
                                    h.lambda * Scalar::of(K, n) / h.a);
        } else {
            // x = a^(-n) - n lambda / a, paired with y = b^n
            out.x_values.push_back(h.a.pow(-n) - h.lambda * Scalar::of(K, n) / h.a);
            out.companion.push_back(h.b.pow(n));
        }
    }
    out.all_distinct = true;
    for (std::size_t i = 0; i < out.x_values.size() && out.all_distinct; ++i)
        for (std::size_t j = i + 1; j < out.x_values.size(); ++j)
            if (out.x_values[i] == out.x_values[j]) {
                out.all_distinct = false;
                break;
            }
    return out;
}

}  // namespace pfol
