#include "pfol/ideals.hpp"

namespace pfol {

namespace {

// order of vanishing at x = 0 of a nonzero univariate polynomial in x
long ord_x(const MultiPoly& b) {
    long o = -1;
    for (const auto& [m, c] : b.terms()) {
        long k = static_cast<long>(m[Var::X]);
        if (o < 0 || k < o) o = k;
    }
    return o;
}

// both f and g vanish at the origin and share no component through it
long fulton_origin(MultiPoly f, MultiPoly g) {
    const FieldSpec& field = f.field();
    const Scalar zero = Scalar::zero(field);
    const MultiPoly y = MultiPoly::variable(field, Var::Y);
    long total = 0;
    while (true) {
        if (!f.evaluate(zero, zero).is_zero() || !g.evaluate(zero, zero).is_zero()) return total;
        MultiPoly a = f.substitute(Var::Y, zero);
        MultiPoly b = g.substitute(Var::Y, zero);
        if (a.is_zero() && b.is_zero())
            throw MathError("InternalError", "shared y-axis component escaped the gcd check");
        if (a.is_zero()) {
            // f = y * f1, and I(y, g) = ord_x g(x, 0)
            total += ord_x(b);
            f = divide_exact(f, y);
            continue;
        }
        if (b.is_zero()) {
            total += ord_x(a);
            g = divide_exact(g, y);
            continue;
        }
        long r = a.degree_in(Var::X);
        long s = b.degree_in(Var::X);
        if (r > s) {
            std::swap(f, g);
            std::swap(a, b);
            std::swap(r, s);
        }
        Scalar c = b.leading_coefficient_in(Var::X).as_constant() /
                   a.leading_coefficient_in(Var::X).as_constant();
        MultiPoly shift = MultiPoly::term(c, Monomial::var(Var::X, static_cast<std::uint32_t>(s - r)));
        g = g - shift * f;
        if (g.is_zero())
            throw MathError("InternalError", "reduction produced zero despite coprime inputs");
    }
}

}  // namespace

Multiplicity fulton_multiplicity(const MultiPoly& f, const MultiPoly& g, const Point& p) {
    const FieldSpec& field = f.field();
    const MultiPoly x_shift = MultiPoly::variable(field, Var::X) + MultiPoly::constant(p.x);
    const MultiPoly y_shift = MultiPoly::variable(field, Var::Y) + MultiPoly::constant(p.y);
    MultiPoly ft = f.substitute(Var::X, x_shift).substitute(Var::Y, y_shift);
    MultiPoly gt = g.substitute(Var::X, x_shift).substitute(Var::Y, y_shift);

    const Scalar zero = Scalar::zero(field);
    bool f0 = ft.is_zero() || ft.evaluate(zero, zero).is_zero();
    bool g0 = gt.is_zero() || gt.evaluate(zero, zero).is_zero();
    if (!f0 || !g0) return Multiplicity::of(0);

    if (ft.is_zero() || gt.is_zero()) return Multiplicity::inf();
    MultiPoly h = gcd_multivariate(ft, gt);
    if (!h.is_constant() && h.evaluate(zero, zero).is_zero()) return Multiplicity::inf();

    return Multiplicity::of(fulton_origin(std::move(ft), std::move(gt)));
}

}  // namespace pfol
