#include <algorithm>

#include "pfol/holonomy.hpp"

namespace pfol {

namespace {

// partial fractions of num/den with den = prod (x - c_j)^(m_j): solve the
// linear system matching coefficients of num = sum e_jk den / (x - c_j)^k
std::vector<PolePrincipalPart> principal_parts(const MultiPoly& num, const MultiPoly& den,
                                               const std::vector<std::pair<Scalar, long>>& roots) {
    const FieldSpec& K = num.field();
    std::vector<MultiPoly> cofactors;
    std::vector<std::pair<std::size_t, long>> index;  // (root index, k)
    for (std::size_t j = 0; j < roots.size(); ++j) {
        MultiPoly lin = MultiPoly::variable(K, Var::X) - MultiPoly::constant(roots[j].first);
        MultiPoly reduced = den;
        for (long k = 1; k <= roots[j].second; ++k) {
            reduced = divide_exact(reduced, lin);
            cofactors.push_back(reduced);
            index.emplace_back(j, k);
        }
    }
    const std::size_t n = cofactors.size();
    long maxdeg = den.degree_in(Var::X);
    // rows: coefficient of x^r, columns: unknown e_(j,k)
    std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(maxdeg),
                                         std::vector<Scalar>(n + 1, Scalar::zero(K)));
    for (std::size_t col = 0; col < n; ++col)
        for (const auto& [deg, coeff] : cofactors[col].coefficients_in(Var::X))
            mat[static_cast<std::size_t>(deg)][col] = coeff.as_constant();
    for (const auto& [deg, coeff] : num.coefficients_in(Var::X))
        mat[static_cast<std::size_t>(deg)][n] = coeff.as_constant();

    // Gaussian elimination
    std::size_t rows = mat.size();
    std::size_t rank_row = 0;
    std::vector<long> pivot_of_col(n, -1);
    for (std::size_t col = 0; col < n && rank_row < rows; ++col) {
        std::size_t piv = rank_row;
        while (piv < rows && mat[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[rank_row]);
        Scalar inv = mat[rank_row][col].inverse();
        for (std::size_t c = col; c <= n; ++c) mat[rank_row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank_row || mat[r][col].is_zero()) continue;
            Scalar f = mat[r][col];
            for (std::size_t c = col; c <= n; ++c) mat[r][c] -= f * mat[rank_row][c];
        }
        pivot_of_col[col] = static_cast<long>(rank_row);
        ++rank_row;
    }
    std::vector<Scalar> solution(n, Scalar::zero(K));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] >= 0)
            solution[col] = mat[static_cast<std::size_t>(pivot_of_col[col])][n];

    std::vector<PolePrincipalPart> parts(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
        parts[j].location = roots[j].first;
        parts[j].order = roots[j].second;
        parts[j].coefficients.assign(static_cast<std::size_t>(roots[j].second), Scalar::zero(K));
    }
    for (std::size_t col = 0; col < n; ++col) {
        auto [j, k] = index[col];
        parts[j].coefficients[static_cast<std::size_t>(k - 1)] = solution[col];
    }
    return parts;
}

// residue at infinity of a(x) dx: substitute x = 1/s and read off the 1/s
// coefficient of -a(1/s)/s^2
Scalar residue_at_infinity_of(const MultiPoly& num, const MultiPoly& den) {
    const FieldSpec& K = num.field();
    long N = num.degree_in(Var::X);
    long D = den.degree_in(Var::X);
    long want = N - D + 1;  // coefficient of s^want in num*(s)/den*(s)
    if (want < 0) return Scalar::zero(K);
    auto reversed = [&](const MultiPoly& p, long deg) {
        std::vector<Scalar> c(static_cast<std::size_t>(deg + want + 2), Scalar::zero(K));
        for (const auto& [k, coeff] : p.coefficients_in(Var::X)) {
            long idx = deg - k;
            if (idx < static_cast<long>(c.size())) c[static_cast<std::size_t>(idx)] = coeff.as_constant();
        }
        return c;
    };
    std::vector<Scalar> nc = reversed(num, N);
    std::vector<Scalar> dc = reversed(den, D);
    // Taylor division to order `want`
    std::vector<Scalar> q(static_cast<std::size_t>(want + 1), Scalar::zero(K));
    Scalar d0inv = dc[0].inverse();
    for (long n = 0; n <= want; ++n) {
        Scalar acc = nc[static_cast<std::size_t>(n)];
        for (long i = 0; i < n; ++i) acc -= q[static_cast<std::size_t>(i)] * dc[static_cast<std::size_t>(n - i)];
        q[static_cast<std::size_t>(n)] = acc * d0inv;
    }
    return -q[static_cast<std::size_t>(want)];
}

}  // namespace

RiccatiPencil riccati_normal_form(const Pencil& pencil) {
    const FieldSpec& K = pencil.field();
    const MultiPoly& C = pencil.eta().A;
    const MultiPoly& D = pencil.eta().B;
    if (!D.is_zero() || C.is_zero())
        throw MathError("NotAFibration", "eta must define the fibration dx = 0");

    const MultiPoly& A = pencil.omega().A;
    const MultiPoly& B = pencil.omega().B;
    if (B.is_zero())
        throw MathError("NotAFibration", "omega must be transverse to the fibration");

    if (!is_flat(pencil))
        throw MathError("NotFlat", "the pencil is not flat");

    // the section member dy = 0 sits at the parameter with A + shift * C = 0;
    // working coordinates use alpha' = alpha - shift
    Scalar shift = Scalar::zero(K);
    if (!A.is_zero()) {
        if (!proportional(A, C))
            throw MathError("NotAFibration",
                            "no member of the pencil defines the section foliation dy = 0");
        shift = -(A.leading_coefficient() / C.leading_coefficient());
    }

    // P(x, y) = C / B as a reduced rational function
    RationalFunction P(C, B);
    if (P.den().degree_in(Var::Y) > 0)
        throw MathError("NotAFibration",
                        "the residual coefficient has a pole in y; not in Riccati normal form");
    long dy = P.num().degree_in(Var::Y);
    if (dy > 2)
        throw MathError("DegYTooLarge", "residual coefficient has y-degree " + std::to_string(dy));

    auto ycoeffs = P.num().coefficients_in(Var::Y);
    MultiPoly ref = ycoeffs.rbegin()->second;  // coefficient of the top y-power
    std::vector<Scalar> p2(static_cast<std::size_t>(dy) + 1, Scalar::zero(K));
    for (long i = 0; i <= dy; ++i) {
        auto it = ycoeffs.find(i);
        if (it == ycoeffs.end()) continue;
        auto q = try_divide_exact(it->second, ref);
        if (!q || !q->is_constant())
            throw MathError("NotFlat",
                            "residual coefficient does not factor as a(x) * p2(y)");
        p2[static_cast<std::size_t>(i)] = q->as_constant();
    }

    RiccatiPencil out;
    out.field = K;
    out.alpha_shift = shift;
    RationalFunction a(ref, P.den());

    if (dy == 0) {
        out.kind = RiccatiKind::Affine;
        out.lambda = Scalar::one(K);
        out.y_normalization = "none (p2 constant)";
    } else if (dy == 1) {
        // p2 = y - r after the shift y -> y - r; the scale folds into a
        Scalar r = -p2[0];
        out.kind = RiccatiKind::Multiplicative;
        out.y_normalization = r.is_zero() ? "none" : "y -> y - (" + r.to_string() + ")";
    } else {
        // p2 = y^2 + p2[1] y + p2[0]
        MultiPoly p2poly = MultiPoly::variable(K, Var::Y) * MultiPoly::variable(K, Var::Y) +
                           MultiPoly::variable(K, Var::Y) * p2[1] + MultiPoly::constant(p2[0]);
        auto roots = roots_with_multiplicity(p2poly, Var::Y);
        long total = 0;
        for (const auto& [r, m] : roots) total += m;
        if (total < 2)
            throw MathError("NonSplitP2",
                            "p2 has no K-rational root data: " + p2poly.to_string());
        if (roots.size() == 1) {
            // double root r: y -> 1/(y - r) sends it to infinity; a picks up -1
            out.kind = RiccatiKind::Affine;
            out.lambda = Scalar::one(K);
            a = a * RationalFunction::from_poly(MultiPoly::constant(-Scalar::one(K)));
            out.y_normalization = "y -> 1/(y - (" + roots[0].first.to_string() + "))";
        } else {
            Scalar r1 = roots[0].first, r2 = roots[1].first;
            if (Scalar::compare(r2, r1) < 0) std::swap(r1, r2);
            out.kind = RiccatiKind::Multiplicative;
            a = a * RationalFunction::from_poly(MultiPoly::constant(r1 - r2));
            out.y_normalization =
                "y -> (y - (" + r1.to_string() + "))/(y - (" + r2.to_string() + "))";
        }
    }

    if (a.den().degree_in(Var::Y) > 0 || a.num().degree_in(Var::Y) > 0)
        throw MathError("InternalError", "a(x) kept a y-dependence");

    // polynomial part and proper remainder
    MultiPoly num = a.num();
    MultiPoly den = a.den();
    MultiPoly poly_part = MultiPoly::zero(K);
    if (num.degree_in(Var::X) >= den.degree_in(Var::X) && den.degree_in(Var::X) >= 0) {
        MultiPoly rem = num;
        long dd = den.degree_in(Var::X);
        Scalar lc_inv = den.leading_coefficient_in(Var::X).as_constant().inverse();
        while (!rem.is_zero() && rem.degree_in(Var::X) >= dd) {
            long k = rem.degree_in(Var::X) - dd;
            Scalar c = rem.leading_coefficient_in(Var::X).as_constant() * lc_inv;
            MultiPoly t = MultiPoly::term(c, Monomial::var(Var::X, static_cast<std::uint32_t>(k)));
            poly_part += t;
            rem -= t * den;
        }
        num = rem;
    }

    auto roots = den.degree_in(Var::X) > 0
                     ? roots_with_multiplicity(den, Var::X)
                     : std::vector<std::pair<Scalar, long>>{};
    long covered = 0;
    for (const auto& [r, m] : roots) covered += m;
    if (covered != den.degree_in(Var::X))
        throw MathError("IrrationalPoles",
                        "denominator of a(x) does not split over the field: " + den.to_string());

    out.a = a;
    out.polynomial_part = poly_part;
    if (!num.is_zero() && !roots.empty()) out.poles = principal_parts(num, den, roots);
    // degenerate principal parts (zero residual numerator) keep pole slots
    if (num.is_zero()) out.poles.clear();

    out.residue_at_infinity = residue_at_infinity_of(a.num(), a.den());
    Scalar sum = out.residue_at_infinity;
    for (const auto& p : out.poles) sum += p.residue();
    if (!sum.is_zero())
        throw MathError("InternalError", "residues of a(x) dx do not sum to zero");
    return out;
}

HolonomyPresentation holonomy_generators(const RiccatiPencil& r) {
    return holonomy_generators(r, {});
}

HolonomyPresentation holonomy_generators(const RiccatiPencil& r,
                                         const std::vector<Scalar>& twists) {
    if (!twists.empty() && twists.size() != r.poles.size())
        throw MathError("TwistCountMismatch", "one twist per pole expected");
    HolonomyPresentation h;
    h.kind = r.kind;
    h.field = r.field;
    const Scalar zero = Scalar::zero(r.field);
    for (std::size_t j = 0; j < r.poles.size(); ++j) {
        const Scalar& res = r.poles[j].residue();
        const Scalar twist = twists.empty() ? zero : twists[j];
        if (r.kind == RiccatiKind::Multiplicative) {
            // transport around a positive loop at c_j multiplies by
            // exp(-2 pi i alpha' res); alpha' = alpha - shift
            MultiplicativeGenerator g;
            g.pole = r.poles[j].location;
            g.mu = -res;
            g.nu = res * r.alpha_shift + twist;
            h.multiplicative.push_back(std::move(g));
        } else {
            AffineGenerator g;
            g.pole = r.poles[j].location;
            g.lambda = Scalar::one(r.field);
            g.a = ScaledPeriod(-(r.lambda * res));
            g.b = ScaledPeriod(r.lambda * res * r.alpha_shift + twist);
            h.affine.push_back(std::move(g));
        }
    }
    return h;
}

}  // namespace pfol
