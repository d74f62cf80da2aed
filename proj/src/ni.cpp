#include <algorithm>

#include "pfol/pencil.hpp"

namespace pfol {

namespace {

MultiPoly gcd_zero_aware(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero()) return f;
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    return gcd_multivariate(f, g);
}

// alpha with base + alpha * dir == 0, when the pair is proportional
std::optional<Scalar> vanishing_parameter(const MultiPoly& base, const MultiPoly& dir) {
    if (dir.is_zero()) return std::nullopt;
    if (base.is_zero()) return Scalar::zero(dir.field());
    if (!proportional(base, dir)) return std::nullopt;
    return -(base.leading_coefficient() / dir.leading_coefficient());
}

void push_unique(std::vector<Scalar>& v, const Scalar& s) {
    for (const Scalar& x : v)
        if (x == s) return;
    v.push_back(s);
}

}  // namespace

NiReport ni_set(const Pencil& pencil) {
    const FieldSpec& K = pencil.field();
    const MultiPoly& A = pencil.omega().A;
    const MultiPoly& B = pencil.omega().B;
    const MultiPoly& C = pencil.eta().A;
    const MultiPoly& D = pencil.eta().B;

    MultiPoly s1 = gcd_zero_aware(A, C);
    MultiPoly s2 = gcd_zero_aware(B, D);
    if (!s1.is_zero() && !s2.is_zero()) {
        MultiPoly shared = gcd_zero_aware(s1, s2);
        if (!shared.is_constant())
            throw MathError("DegeneratePencil",
                            "every member shares the factor " + shared.to_string());
    }

    MultiPoly F = pencil.generic_A();
    MultiPoly G = pencil.generic_B();

    std::vector<Scalar> candidates;
    if (auto a0 = vanishing_parameter(A, C)) push_unique(candidates, *a0);
    if (auto a0 = vanishing_parameter(B, D)) push_unique(candidates, *a0);

    std::vector<MultiPoly> content_polys;
    for (Var v : {Var::Y, Var::X}) {
        Var other = v == Var::Y ? Var::X : Var::Y;
        if (F.degree_in(v) < 1 || G.degree_in(v) < 1) continue;
        MultiPoly r = resultant(F, G, v);
        if (r.is_zero())
            throw MathError("DegeneratePencil", "resultant vanishes identically");
        MultiPoly cp = content_in(r, other);
        // strip any leftover dependence on the geometric variables; only the
        // pure-alpha content can force the whole resultant to vanish
        if (cp.degree_in(other) > 0) continue;
        if (cp.degree_in(Var::Alpha) > 0) content_polys.push_back(cp);
    }

    std::vector<MultiPoly> unresolved;
    NiReport report;

    for (const MultiPoly& cp : content_polys) {
        MultiPoly rest = cp;
        for (const auto& [root, mult] : roots_with_multiplicity(cp, Var::Alpha)) {
            push_unique(candidates, root);
            MultiPoly lin = MultiPoly::variable(K, Var::Alpha) - MultiPoly::constant(root);
            for (long i = 0; i < mult; ++i) rest = divide_exact(rest, lin);
        }
        if (rest.degree_in(Var::Alpha) > 0) {
            MultiPoly sf = squarefree_part(rest);
            bool seen = false;
            for (const MultiPoly& u : unresolved)
                if (proportional(u, sf)) seen = true;
            if (!seen) unresolved.push_back(sf);
        }
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });

    for (const Scalar& alpha : candidates) {
        auto [fol, factor] = pencil.member(alpha);
        (void)fol;
        if (factor.is_constant()) continue;
        NiEntry e;
        e.alpha = alpha;
        e.factor = factor;
        e.verified = true;
        report.entries.push_back(std::move(e));
    }

    {
        auto [fol, factor] = pencil.member(std::nullopt);
        (void)fol;
        if (!factor.is_constant()) {
            NiEntry e;
            e.at_infinity = true;
            e.factor = factor;
            e.verified = true;
            report.entries.push_back(std::move(e));
        }
    }

    // candidates that live in a quadratic extension of Q: verify there
    for (const MultiPoly& sf : unresolved) {
        if (K.is_rationals() && sf.degree_in(Var::Alpha) == 2) {
            auto coeffs = sf.coefficients_in(Var::Alpha);
            Rat a2 = coeffs[2].as_constant().rational_part();
            Rat a1 = coeffs.count(1) ? coeffs[1].as_constant().rational_part() : Rat(0);
            Rat a0 = coeffs.count(0) ? coeffs[0].as_constant().rational_part() : Rat(0);
            FieldSpec ext = FieldSpec::quadratic(-a1 / a2, -a0 / a2);
            Scalar theta = Scalar::generator(ext);
            MultiPoly Fe = F.lift_to(ext).substitute(Var::Alpha, theta);
            MultiPoly Ge = G.lift_to(ext).substitute(Var::Alpha, theta);
            MultiPoly g = gcd_zero_aware(Fe, Ge);
            if (!g.is_constant()) {
                NiEntry e;
                e.alpha_minpoly = sf;
                e.factor = g;
                e.verified = true;
                report.entries.push_back(std::move(e));
            }
            continue;
        }
        report.unresolved.push_back(sf);
    }

    // reduced chart-2 generators, so radial tops do not inject spurious
    // powers of u into the chart tangency polynomial
    auto reduce2 = [](const MultiPoly& a, const MultiPoly& b) {
        ChartPair cp = to_chart2(a, b);
        auto [f, factor] = normalize(cp.A, cp.B);
        (void)factor;
        return OneForm{f.A(), f.B()};
    };
    OneForm w2 = reduce2(A, B);
    OneForm e2 = reduce2(C, D);
    MultiPoly t2 = w2.A * e2.B - w2.B * e2.A;
    long mult = 0;
    if (!t2.is_zero()) {
        mult = t2.degree_in(Var::X);
        for (const auto& [m, c] : t2.terms())
            mult = std::min(mult, static_cast<long>(m[Var::X]));
    }
    report.line_at_infinity_multiplicity = mult;
    return report;
}

}  // namespace pfol
