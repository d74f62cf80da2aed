#include "pfol/holonomy.hpp"

namespace pfol {

namespace {

void check_alpha_field(const FieldSpec& K, const Scalar& alpha) {
    if (!alpha.field().is_rationals() && !(alpha.field() == K) && !K.is_rationals())
        throw MathError("AlphaOutsideField", "alpha lies outside the presentation field");
    if (K.is_rationals() && !alpha.field().is_rationals() && !alpha.is_rational())
        throw MathError("AlphaOutsideField", "alpha lies outside the presentation field");
}

}  // namespace

FinitenessCertificate group_is_finite(const HolonomyPresentation& h, const Scalar& alpha) {
    check_alpha_field(h.field, alpha);
    FinitenessCertificate cert;
    if (h.kind == RiccatiKind::Multiplicative) {
        for (std::size_t j = 0; j < h.multiplicative.size(); ++j) {
            const auto& g = h.multiplicative[j];
            Scalar rot = g.mu * alpha + g.nu;
            if (!rot.is_rational()) {
                cert.finite = false;
                cert.failing_generator = j;
                cert.reason = "rotation number " + rot.to_string() + " of generator " +
                              std::to_string(j) + " is irrational";
                return cert;
            }
        }
        cert.finite = true;
        cert.reason = "every rotation number mu_j alpha + nu_j is rational";
        return cert;
    }
    // affine case: finite iff all multipliers are roots of unity, pure
    // translations vanish, and the fixed points coincide
    std::optional<ScaledPeriod> fixed;
    std::optional<std::size_t> fixed_from;
    for (std::size_t j = 0; j < h.affine.size(); ++j) {
        const auto& g = h.affine[j];
        if (!root_of_unity_order(g.lambda)) {
            cert.finite = false;
            cert.failing_generator = j;
            cert.reason = "multiplier of generator " + std::to_string(j) +
                          " is not a root of unity";
            return cert;
        }
        ScaledPeriod translation = g.a.scaled(alpha) + g.b;
        if (g.lambda.is_one()) {
            if (!translation.is_zero()) {
                cert.finite = false;
                cert.failing_generator = j;
                cert.reason = "generator " + std::to_string(j) +
                              " is a nonzero translation at this alpha";
                return cert;
            }
            continue;
        }
        ScaledPeriod fp = translation.divided(Scalar::one(h.field) - g.lambda);
        if (!fixed) {
            fixed = fp;
            fixed_from = j;
        } else if (!(*fixed == fp)) {
            cert.finite = false;
            cert.failing_generator = j;
            cert.reason = "generators " + std::to_string(*fixed_from) + " and " +
                          std::to_string(j) + " have distinct fixed points";
            return cert;
        }
    }
    cert.finite = true;
    cert.reason = "roots of unity with a common fixed point and no residual translation";
    return cert;
}

IpClassification classify_ip(const HolonomyPresentation& h) {
    IpClassification out;
    const Scalar zero = Scalar::zero(h.field);
    if (h.kind == RiccatiKind::Multiplicative) {
        std::optional<std::size_t> first_nonzero;
        for (std::size_t j = 0; j < h.multiplicative.size(); ++j) {
            if (!h.multiplicative[j].mu.is_zero()) {
                first_nonzero = j;
                break;
            }
        }
        if (!first_nonzero) {
            for (const auto& g : h.multiplicative) {
                if (!g.nu.is_rational()) {
                    out.verdict = IpClassification::Verdict::Finite;
                    out.reason = "a constant generator has irrational rotation number " +
                                 g.nu.to_string();
                    return out;
                }
            }
            out.verdict = IpClassification::Verdict::AllOfIS;
            out.reason = "all exponents are alpha-independent and rational";
            return out;
        }
        const auto& g1 = h.multiplicative[*first_nonzero];
        for (std::size_t j = 0; j < h.multiplicative.size(); ++j) {
            const auto& g = h.multiplicative[j];
            if (g.mu.is_zero()) {
                if (!g.nu.is_rational()) {
                    out.verdict = IpClassification::Verdict::Finite;
                    out.reason = "generator " + std::to_string(j) +
                                 " rotates by the fixed irrational " + g.nu.to_string();
                    return out;
                }
                continue;
            }
            Scalar ratio = g.mu / g1.mu;
            if (!ratio.is_rational()) {
                out.verdict = IpClassification::Verdict::Finite;
                out.reason = "exponent ratio mu_" + std::to_string(j) + "/mu_" +
                             std::to_string(*first_nonzero) + " = " + ratio.to_string() +
                             " is irrational";
                return out;
            }
            // coset compatibility: nu_j - (mu_j/mu_1) nu_1 must be rational
            Scalar kappa = g.nu - ratio * g1.nu;
            if (!kappa.is_rational()) {
                out.verdict = IpClassification::Verdict::Finite;
                out.reason = "no base point makes every exponent rational (generator " +
                             std::to_string(j) + ")";
                return out;
            }
        }
        out.verdict = IpClassification::Verdict::QCoset;
        out.lambda = g1.mu.inverse();
        out.beta = -(g1.nu / g1.mu);
        out.reason = "commensurable exponents with a rational base point";
        return out;
    }

    // affine: intersect the linear conditions coefA * alpha + coefB = 0
    bool all_alpha = true;
    std::optional<Scalar> point;
    bool empty = false;
    auto add_condition = [&](const Scalar& ca, const Scalar& cb) {
        if (empty) return;
        if (ca.is_zero()) {
            if (!cb.is_zero()) empty = true;
            return;
        }
        Scalar a0 = -(cb / ca);
        if (!point) {
            all_alpha = false;
            point = a0;
        } else if (!(*point == a0)) {
            empty = true;
        }
    };
    for (const auto& g : h.affine) {
        if (!root_of_unity_order(g.lambda)) {
            out.verdict = IpClassification::Verdict::Finite;
            out.reason = "a multiplier is not a root of unity; no parameter gives a finite group";
            return out;
        }
        if (g.lambda.is_one()) add_condition(g.a.coefficient, g.b.coefficient);
    }
    const Scalar one = Scalar::one(h.field);
    for (std::size_t i = 0; i < h.affine.size(); ++i) {
        for (std::size_t j = i + 1; j < h.affine.size(); ++j) {
            const auto& gi = h.affine[i];
            const auto& gj = h.affine[j];
            if (gi.lambda.is_one() || gj.lambda.is_one()) continue;
            // (a_i alpha + b_i)(1 - lambda_j) = (a_j alpha + b_j)(1 - lambda_i)
            Scalar ca = gi.a.coefficient * (one - gj.lambda) - gj.a.coefficient * (one - gi.lambda);
            Scalar cb = gi.b.coefficient * (one - gj.lambda) - gj.b.coefficient * (one - gi.lambda);
            add_condition(ca, cb);
        }
    }
    if (empty) {
        out.verdict = IpClassification::Verdict::Finite;
        out.reason = "the finiteness conditions are inconsistent";
        return out;
    }
    if (all_alpha) {
        out.verdict = IpClassification::Verdict::AllOfIS;
        out.reason = "the finiteness conditions hold identically in alpha";
        return out;
    }
    out.verdict = IpClassification::Verdict::Finite;
    out.witnesses.push_back(*point);
    out.reason = "the finiteness conditions pin down a single parameter";
    return out;
}

SideConditionsReport side_conditions_report(const Pencil& pencil, const Scalar& alpha,
                                            const std::vector<MultiPoly>& components) {
    auto [member, factor] = pencil.member(alpha);
    if (!factor.is_constant())
        throw MathError("AlphaNotInIS",
                        "the member has non-isolated singularities (factor " + factor.to_string() +
                            ")");
    SideConditionsReport report{alpha, member.degree(), {}, {}};
    for (const MultiPoly& c : components) {
        ComponentZReport cz;
        cz.component = c;
        cz.degree = c.degree();
        cz.z_total = global_relations(member, cz.degree, true).gsv_total;
        cz.z_at_least_one = cz.z_total >= 1;
        report.components.push_back(std::move(cz));
    }
    const FieldSpec& K = pencil.field();
    for (const auto& sp : singular_points_krational(member)) {
        SingularityReport sr;
        sr.chart = sp.chart;
        sr.point = sp.point;
        sr.nondegenerate = sp.nondegenerate;
        if (!sp.nondegenerate) {
            sr.verdict = "unknown";
            sr.note = "degenerate singularity; eigenvalue test not applicable";
            report.singularities.push_back(std::move(sr));
            continue;
        }
        // eigenvalue ratio r solves det r^2 - (tr^2 - 2 det) r + det = 0
        AffineFoliation chart_member = member;
        if (sp.chart != 1) {
            ChartPair cp = sp.chart == 2 ? to_chart2(member.A(), member.B())
                                         : to_chart3(member.A(), member.B());
            chart_member = normalize(cp.A, cp.B).first;
        }
        MultiPoly P = chart_member.P();
        MultiPoly Q = chart_member.Q();
        Scalar j11 = P.derivative(Var::X).evaluate(sp.point.x, sp.point.y);
        Scalar j12 = P.derivative(Var::Y).evaluate(sp.point.x, sp.point.y);
        Scalar j21 = Q.derivative(Var::X).evaluate(sp.point.x, sp.point.y);
        Scalar j22 = Q.derivative(Var::Y).evaluate(sp.point.x, sp.point.y);
        Scalar tr = j11 + j22;
        Scalar det = j11 * j22 - j12 * j21;
        MultiPoly z = MultiPoly::variable(K, Var::Y);
        MultiPoly quad = z * z * det - z * (tr * tr - det - det) + MultiPoly::constant(det);
        auto ratios = rational_roots(quad, Var::Y);
        if (ratios.empty()) {
            sr.verdict = "unknown";
            sr.note = "eigenvalue ratio lies outside the coefficient field";
        } else {
            Scalar r = ratios.front();
            sr.eigenvalue_ratio = r;
            if (r.is_rational() && r.rational_part() < 0) {
                sr.verdict = "holds";
                Rat q = -r.rational_part();
                sr.note = "ratio " + r.to_string() + "; local model x^" + q.get_num().get_str() +
                          " y^" + q.get_den().get_str();
            } else if (r.is_rational()) {
                sr.verdict = "likely";
                sr.note = "resonant rational ratio " + r.to_string();
            } else {
                sr.verdict = "unknown";
                sr.note = "irrational ratio " + r.to_string();
            }
        }
        report.singularities.push_back(std::move(sr));
    }
    return report;
}

}  // namespace pfol
