#include "pfol/pencil.hpp"

namespace pfol {

Pencil::Pencil(OneForm omega, OneForm eta) : omega_(std::move(omega)), eta_(std::move(eta)) {
    if (!(omega_.field() == eta_.field()) &&
        !omega_.field().is_rationals() && !eta_.field().is_rationals())
        throw MathError("FieldMismatch", "pencil forms over distinct quadratic fields");
    for (const MultiPoly* p : {&omega_.A, &omega_.B, &eta_.A, &eta_.B})
        if (p->degree_in(Var::Alpha) > 0 || p->degree_in(Var::T) > 0)
            throw MathError("ForeignVariable", "pencil coefficients must involve only x and y");
    tangency_ = omega_.A * eta_.B - omega_.B * eta_.A;
    if (tangency_.is_zero())
        throw MathError("ProportionalForms",
                        "omega and eta are proportional; the pencil is degenerate");
    auto om = normalize(omega_);
    auto et = normalize(eta_);
    degree_ = std::max(om.first.degree(), et.first.degree());
}

std::pair<AffineFoliation, MultiPoly> Pencil::member(const std::optional<Scalar>& alpha) const {
    if (!alpha) return normalize(eta_);
    MultiPoly a = omega_.A + eta_.A * *alpha;
    MultiPoly b = omega_.B + eta_.B * *alpha;
    return normalize(a, b);
}

MultiPoly Pencil::generic_A() const {
    return omega_.A + eta_.A * MultiPoly::variable(field(), Var::Alpha);
}

MultiPoly Pencil::generic_B() const {
    return omega_.B + eta_.B * MultiPoly::variable(field(), Var::Alpha);
}

CurvatureData curvature(const Pencil& pencil) {
    const MultiPoly& A = pencil.omega().A;
    const MultiPoly& B = pencil.omega().B;
    const MultiPoly& C = pencil.eta().A;
    const MultiPoly& D = pencil.eta().B;
    const MultiPoly& T = pencil.tangency_polynomial();

    MultiPoly r1 = B.derivative(Var::X) - A.derivative(Var::Y);
    MultiPoly r2 = D.derivative(Var::X) - C.derivative(Var::Y);
    // Cramer on  p B - q A = r1,  p D - q C = r2;  the determinant is T
    MultiPoly np = A * r2 - C * r1;
    MultiPoly nq = B * r2 - D * r1;

    // curvature numerator of q_x - p_y over the common denominator T^2
    MultiPoly numerator = T * (nq.derivative(Var::X) - np.derivative(Var::Y)) -
                          nq * T.derivative(Var::X) + np * T.derivative(Var::Y);

    CurvatureData out{RationalFunction(np, T), RationalFunction(nq, T),
                      RationalFunction(numerator, T * T), numerator.is_zero()};
    return out;
}

bool is_flat(const Pencil& pencil) {
    const MultiPoly& A = pencil.omega().A;
    const MultiPoly& B = pencil.omega().B;
    const MultiPoly& C = pencil.eta().A;
    const MultiPoly& D = pencil.eta().B;
    const MultiPoly& T = pencil.tangency_polynomial();
    MultiPoly r1 = B.derivative(Var::X) - A.derivative(Var::Y);
    MultiPoly r2 = D.derivative(Var::X) - C.derivative(Var::Y);
    MultiPoly np = A * r2 - C * r1;
    MultiPoly nq = B * r2 - D * r1;
    MultiPoly numerator = T * (nq.derivative(Var::X) - np.derivative(Var::Y)) -
                          nq * T.derivative(Var::X) + np * T.derivative(Var::Y);
    return numerator.is_zero();
}

bool form_invariant(const OneForm& w, const MultiPoly& f) {
    if (f.is_constant()) throw MathError("ConstantCurve", "invariance of a constant polynomial");
    return divides(f, w.B * f.derivative(Var::X) - w.A * f.derivative(Var::Y));
}

DeltaInvarianceReport delta_component_invariance(const Pencil& pencil,
                                                 const std::vector<MultiPoly>& factors) {
    const MultiPoly& T = pencil.tangency_polynomial();
    DeltaInvarianceReport report;
    MultiPoly product = MultiPoly::constant(Scalar::one(pencil.field()));
    bool all = true;
    for (const MultiPoly& f : factors) {
        if (!divides(f, T))
            throw MathError("FactorDoesNotDivideTangency",
                            f.to_string() + " does not divide the tangency polynomial");
        DeltaFactorVerdict v;
        v.factor = f;
        // form-level checks: invariance for two members extends to the whole
        // pencil by linearity of f | (B f_x - A f_y) in (A, B)
        v.invariant_omega = form_invariant(pencil.omega(), f);
        v.invariant_eta = form_invariant(pencil.eta(), f);
        v.invariant = v.invariant_omega && v.invariant_eta;
        all = all && v.invariant;
        product *= f;
        report.factors.push_back(std::move(v));
    }
    report.covers_squarefree_part =
        !factors.empty() && proportional(product, squarefree_part(T));
    report.delta_invariant = all && report.covers_squarefree_part;
    return report;
}

namespace {

std::optional<Point> find_point_on_curve(const MultiPoly& g, const MultiPoly& avoid) {
    const FieldSpec& field = g.field();
    std::vector<Rat> samples;
    for (long n = 0; n <= 8; ++n) {
        samples.push_back(Rat(n));
        if (n > 0) samples.push_back(Rat(-n));
    }
    samples.push_back(make_rat(1, 2));
    samples.push_back(make_rat(-1, 2));
    samples.push_back(make_rat(1, 3));
    auto admissible = [&](const Point& p) {
        return !avoid.evaluate(p.x, p.y).is_zero() && g.evaluate(p.x, p.y).is_zero();
    };
    for (const Rat& xr : samples) {
        Scalar x0 = Scalar::of(field, xr);
        MultiPoly gy = g.substitute(Var::X, x0);
        if (gy.is_zero()) {
            // the whole line x = x0 lies on the curve
            for (const Rat& yr : samples) {
                Point p(x0, Scalar::of(field, yr));
                if (admissible(p)) return p;
            }
            continue;
        }
        if (gy.is_constant()) continue;
        if (gy.degree_in(Var::Y) == 0) continue;
        for (const Scalar& y0 : rational_roots(gy, Var::Y)) {
            Point p(x0, y0);
            if (admissible(p)) return p;
        }
    }
    // curves with no y-dependence at sampled x: sweep x-roots directly
    if (g.degree_in(Var::Y) == 0 && g.degree_in(Var::X) > 0) {
        for (const Scalar& x0 : rational_roots(g, Var::X)) {
            for (const Rat& yr : samples) {
                Point p(x0, Scalar::of(field, yr));
                if (admissible(p)) return p;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Scalar> is_fiber_component(const MultiPoly& g, const RationalFunction& fi,
                                         const Point& at) {
    if (fi.num().is_constant() && fi.den().is_constant())
        throw MathError("ConstantFirstIntegral", "first integral must be nonconstant");
    if (!g.evaluate(at.x, at.y).is_zero())
        throw MathError("PointNotOnCurve", at.to_string() + " is not on the component");
    Scalar denom = fi.den().evaluate(at.x, at.y);
    if (denom.is_zero())
        throw MathError("PoleAtPoint", "first integral is indeterminate at " + at.to_string());
    Scalar c = fi.num().evaluate(at.x, at.y) / denom;
    MultiPoly level = fi.num() - fi.den() * c;
    if (divides(g, level)) return c;
    return std::nullopt;
}

std::optional<Scalar> is_fiber_component(const MultiPoly& g, const RationalFunction& fi) {
    if (g.is_constant())
        throw MathError("ConstantCurve", "fiber test on a constant polynomial");
    auto p = find_point_on_curve(g, fi.den());
    if (!p)
        throw MathError("NoRationalPointFound",
                        "no K-rational point found on the component off the indeterminacy set");
    return is_fiber_component(g, fi, *p);
}

}  // namespace pfol
