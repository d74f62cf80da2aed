#include "pfol/foliation.hpp"

namespace pfol {

namespace {

MultiPoly homogeneous_part(const MultiPoly& p, long m) {
    MultiPoly out(p.field());
    for (const auto& [mono, c] : p.terms())
        if (static_cast<long>(mono.total_degree()) == m) out.add_term(mono, c);
    return out;
}

}  // namespace

MultiPoly AffineFoliation::apply_vector_field(const MultiPoly& f) const {
    return B_ * f.derivative(Var::X) - A_ * f.derivative(Var::Y);
}

bool AffineFoliation::is_singular_at(const Point& p) const {
    return A_.evaluate(p.x, p.y).is_zero() && B_.evaluate(p.x, p.y).is_zero();
}

long projective_degree_of_pair(const MultiPoly& A, const MultiPoly& B) {
    long m = std::max(A.degree(), B.degree());
    const FieldSpec& field = A.field();
    MultiPoly pm = homogeneous_part(B, m);
    MultiPoly qm = homogeneous_part(-A, m);
    MultiPoly radial = MultiPoly::variable(field, Var::Y) * pm -
                       MultiPoly::variable(field, Var::X) * qm;
    return radial.is_zero() ? m - 1 : m;
}

std::pair<AffineFoliation, MultiPoly> normalize(const MultiPoly& A, const MultiPoly& B) {
    if (A.is_zero() && B.is_zero())
        throw MathError("ZeroForm", "the zero 1-form does not define a foliation");
    for (const MultiPoly* p : {&A, &B})
        if (p->degree_in(Var::Alpha) > 0 || p->degree_in(Var::T) > 0)
            throw MathError("ForeignVariable", "foliation coefficients must involve only x and y");
    MultiPoly a = A, b = B, factor = MultiPoly::constant(Scalar::one(A.field()));
    if (!A.is_zero() && !B.is_zero()) {
        factor = gcd_multivariate(A, B);
        if (!factor.is_constant()) {
            a = divide_exact(A, factor);
            b = divide_exact(B, factor);
        } else {
            factor = MultiPoly::constant(Scalar::one(A.field()));
        }
    } else if (A.is_zero()) {
        factor = B.monic();
        b = MultiPoly::constant(Scalar::one(A.field()));
    } else {
        factor = A.monic();
        a = MultiPoly::constant(Scalar::one(A.field()));
    }
    // canonical scalar: unit leading coefficient on the graded-lex larger part
    GradedLexGreater gt;
    const MultiPoly* lead = &b;
    if (b.is_zero() || (!a.is_zero() && gt(a.leading_monomial(), b.leading_monomial())))
        lead = &a;
    Scalar inv = lead->leading_coefficient().inverse();
    a = a * inv;
    b = b * inv;
    long d = projective_degree_of_pair(a, b);
    return {AffineFoliation(std::move(a), std::move(b), d), factor};
}

std::pair<AffineFoliation, MultiPoly> normalize(const OneForm& w) { return normalize(w.A, w.B); }

Multiplicity milnor_number(const AffineFoliation& f, const Point& p) {
    return fulton_multiplicity(f.B(), -f.A(), p);
}

Scalar baum_bott_nondegenerate(const AffineFoliation& f, const Point& p) {
    MultiPoly P = f.P();
    MultiPoly Q = f.Q();
    Scalar pxx = P.derivative(Var::X).evaluate(p.x, p.y);
    Scalar pxy = P.derivative(Var::Y).evaluate(p.x, p.y);
    Scalar qyx = Q.derivative(Var::X).evaluate(p.x, p.y);
    Scalar qyy = Q.derivative(Var::Y).evaluate(p.x, p.y);
    Scalar det = pxx * qyy - pxy * qyx;
    if (det.is_zero())
        throw MathError("DegenerateSingularity",
                        "vanishing Jacobian determinant at " + p.to_string());
    Scalar tr = pxx + qyy;
    return tr * tr / det;
}

bool is_invariant(const AffineFoliation& fol, const MultiPoly& f) {
    if (f.is_constant()) throw MathError("ConstantCurve", "invariance of a constant polynomial");
    return divides(f, fol.apply_vector_field(f));
}

Multiplicity tangency_index(const AffineFoliation& fol, const MultiPoly& f, const Point& p) {
    if (is_invariant(fol, f))
        throw MathError("InvariantCurve", "tangency index along an invariant curve");
    return fulton_multiplicity(f, fol.apply_vector_field(f), p);
}

long tangency_total(const AffineFoliation& fol, const MultiPoly& f,
                    const std::vector<Point>& points) {
    long total = 0;
    for (const Point& p : points) {
        Multiplicity m = tangency_index(fol, f, p);
        if (m.infinite)
            throw MathError("InvariantComponent",
                            "an invariant component of the curve passes through " + p.to_string());
        total += m.value;
    }
    return total;
}

GlobalRelations global_relations(long foliation_degree, long curve_degree, bool invariant) {
    long d = foliation_degree;
    long k = curve_degree;
    GlobalRelations r;
    r.curve_degree = k;
    r.normal_dot_curve = k * (d + 2);
    r.tangent_dot_curve = k * (1 - d);
    r.self_intersection = k * k;
    r.invariant = invariant;
    r.tangency = k * k - k * (1 - d);
    r.gsv_total = k * (d + 2) - k * k;
    r.chi_smooth = 3 * k - k * k;
    return r;
}

GlobalRelations global_relations(const AffineFoliation& fol, long curve_degree, bool invariant) {
    return global_relations(fol.degree(), curve_degree, invariant);
}

namespace {

// coefficient list of a polynomial in t, as scalars, up to `order`
std::vector<Scalar> series_coefficients(const MultiPoly& p, long order) {
    std::vector<Scalar> out(static_cast<std::size_t>(order), Scalar::zero(p.field()));
    for (const auto& [m, c] : p.terms()) {
        if (m[Var::X] > 0 || m[Var::Y] > 0 || m[Var::Alpha] > 0)
            throw MathError("InternalError", "series with leftover variables");
        long k = m[Var::T];
        if (k < order) out[static_cast<std::size_t>(k)] = c;
    }
    return out;
}

long series_order(const std::vector<Scalar>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<long>(i);
    return -1;  // zero to the computed precision
}

}  // namespace

long gsv_smooth_branch(const AffineFoliation& fol, const MultiPoly& f, const MultiPoly& branch_x,
                       const MultiPoly& branch_y, const Point& p, long order) {
    if (!is_invariant(fol, f))
        throw MathError("NonInvariantCurve", "GSV index requires an invariant curve");
    const FieldSpec& field = fol.field();
    const Scalar zero = Scalar::zero(field);
    Scalar x0 = branch_x.substitute(Var::T, zero).as_constant();
    Scalar y0 = branch_y.substitute(Var::T, zero).as_constant();
    if (!(x0 == p.x) || !(y0 == p.y))
        throw MathError("BranchNotAtPoint", "branch does not start at " + p.to_string());
    MultiPoly dx = branch_x.derivative(Var::T).truncate_in(Var::T, order);
    MultiPoly dy = branch_y.derivative(Var::T).truncate_in(Var::T, order);
    auto dxc = series_coefficients(dx, order);
    auto dyc = series_coefficients(dy, order);
    if (dxc[0].is_zero() && dyc[0].is_zero())
        throw MathError("NonSmoothBranch", "branch derivative vanishes at t = 0");

    auto compose = [&](const MultiPoly& g) {
        return g.substitute(Var::X, branch_x).substitute(Var::Y, branch_y).truncate_in(Var::T, order);
    };
    auto pc = series_coefficients(compose(fol.P()), order);
    auto qc = series_coefficients(compose(fol.Q()), order);

    // solve c * gamma'_e = Y_e by series division on the unit-order component
    const std::vector<Scalar>& den = dxc[0].is_zero() ? dyc : dxc;
    const std::vector<Scalar>& num = dxc[0].is_zero() ? qc : pc;
    const std::vector<Scalar>& other_num = dxc[0].is_zero() ? pc : qc;
    const std::vector<Scalar>& other_den = dxc[0].is_zero() ? dxc : dyc;

    std::vector<Scalar> c(static_cast<std::size_t>(order), Scalar::zero(field));
    Scalar d0inv = den[0].inverse();
    for (long n = 0; n < order; ++n) {
        Scalar acc = num[static_cast<std::size_t>(n)];
        for (long i = 0; i < n; ++i)
            acc -= c[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(n - i)];
        c[static_cast<std::size_t>(n)] = acc * d0inv;
    }
    // consistency on the second component: other_num == c * other_den
    for (long n = 0; n < order; ++n) {
        Scalar acc = other_num[static_cast<std::size_t>(n)];
        for (long i = 0; i <= n; ++i)
            acc -= c[static_cast<std::size_t>(i)] * other_den[static_cast<std::size_t>(n - i)];
        if (!acc.is_zero())
            throw MathError("InconsistentTangency",
                            "no scalar series matches both components at order " +
                                std::to_string(n));
    }
    long ord = series_order(c);
    if (ord < 0)
        throw MathError("InsufficientOrder",
                        "tangential part vanishes to the computed order; raise the order");
    return ord;
}

}  // namespace pfol
