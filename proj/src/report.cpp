#include "pfol/report.hpp"

namespace pfol {

std::string emit_report(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const CurvatureData& c) {
    Json j;
    j["flat"] = c.flat;
    j["theta_p"] = c.p.to_string();
    j["theta_q"] = c.q.to_string();
    j["curvature"] = c.curvature.to_string();
    return j;
}

Json to_json(const NiReport& r) {
    Json j;
    Json entries = Json::array();
    for (const NiEntry& e : r.entries) {
        Json je;
        if (e.at_infinity) je["alpha"] = "inf";
        else if (e.alpha) je["alpha"] = e.alpha->to_string();
        else if (e.alpha_minpoly) je["alpha_minpoly"] = e.alpha_minpoly->to_string();
        if (e.factor) je["factor"] = e.factor->to_string();
        je["verified"] = e.verified;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    Json unresolved = Json::array();
    for (const MultiPoly& p : r.unresolved) unresolved.push_back(p.to_string());
    j["unresolved_candidates"] = std::move(unresolved);
    j["line_at_infinity_multiplicity"] = r.line_at_infinity_multiplicity;
    return j;
}

Json to_json(const DeltaInvarianceReport& r) {
    Json j;
    Json factors = Json::array();
    for (const auto& f : r.factors) {
        Json jf;
        jf["factor"] = f.factor.to_string();
        jf["invariant_omega"] = f.invariant_omega;
        jf["invariant_eta"] = f.invariant_eta;
        jf["invariant"] = f.invariant;
        factors.push_back(std::move(jf));
    }
    j["factors"] = std::move(factors);
    j["covers_squarefree_part"] = r.covers_squarefree_part;
    j["delta_invariant"] = r.delta_invariant;
    return j;
}

Json to_json(const RiccatiPencil& r) {
    Json j;
    j["kind"] = r.kind == RiccatiKind::Multiplicative ? "multiplicative" : "affine";
    if (r.kind == RiccatiKind::Affine) j["lambda"] = r.lambda.to_string();
    j["a"] = r.a.to_string();
    j["polynomial_part"] = r.polynomial_part.to_string();
    Json poles = Json::array();
    for (const auto& p : r.poles) {
        Json jp;
        jp["location"] = p.location.to_string();
        jp["order"] = p.order;
        Json coeffs = Json::array();
        for (const Scalar& c : p.coefficients) coeffs.push_back(c.to_string());
        jp["principal_part"] = std::move(coeffs);
        jp["residue"] = p.residue().to_string();
        poles.push_back(std::move(jp));
    }
    j["poles"] = std::move(poles);
    j["residue_at_infinity"] = r.residue_at_infinity.to_string();
    j["alpha_shift"] = r.alpha_shift.to_string();
    j["y_normalization"] = r.y_normalization;
    return j;
}

Json to_json(const HolonomyPresentation& h) {
    Json j;
    j["kind"] = h.kind == RiccatiKind::Multiplicative ? "multiplicative" : "affine";
    Json gens = Json::array();
    if (h.kind == RiccatiKind::Multiplicative) {
        for (const auto& g : h.multiplicative) {
            Json jg;
            jg["pole"] = g.pole.to_string();
            jg["mu"] = g.mu.to_string();
            jg["nu"] = g.nu.to_string();
            jg["map"] = "z -> exp(2*pi*i*((" + g.mu.to_string() + ")*alpha + (" +
                        g.nu.to_string() + "))) * z";
            gens.push_back(std::move(jg));
        }
    } else {
        for (const auto& g : h.affine) {
            Json jg;
            jg["pole"] = g.pole.to_string();
            jg["lambda"] = g.lambda.to_string();
            jg["a"] = g.a.to_string();
            jg["b"] = g.b.to_string();
            jg["map"] = "z -> (" + g.lambda.to_string() + ")*z + (" + g.a.to_string() +
                        ")*alpha + (" + g.b.to_string() + ")";
            gens.push_back(std::move(jg));
        }
    }
    j["generators"] = std::move(gens);
    return j;
}

Json to_json(const IpClassification& c) {
    Json j;
    switch (c.verdict) {
        case IpClassification::Verdict::Finite: j["verdict"] = "Finite"; break;
        case IpClassification::Verdict::AllOfIS: j["verdict"] = "AllOfIS"; break;
        case IpClassification::Verdict::QCoset: j["verdict"] = "QCoset"; break;
    }
    if (c.lambda) j["lambda"] = c.lambda->to_string();
    if (c.beta) j["beta"] = c.beta->to_string();
    if (!c.witnesses.empty()) {
        Json w = Json::array();
        for (const Scalar& s : c.witnesses) w.push_back(s.to_string());
        j["witnesses"] = std::move(w);
    }
    j["reason"] = c.reason;
    return j;
}

Json to_json(const SideConditionsReport& r) {
    Json j;
    j["alpha"] = r.alpha.to_string();
    j["member_degree"] = r.member_degree;
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json jc;
        jc["component"] = c.component.to_string();
        jc["degree"] = c.degree;
        jc["z_total"] = c.z_total;
        jc["z_at_least_one"] = c.z_at_least_one;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    Json sings = Json::array();
    for (const auto& s : r.singularities) {
        Json js;
        js["chart"] = s.chart;
        js["point"] = s.point.to_string();
        js["nondegenerate"] = s.nondegenerate;
        if (s.eigenvalue_ratio) js["eigenvalue_ratio"] = s.eigenvalue_ratio->to_string();
        js["verdict"] = s.verdict;
        js["note"] = s.note;
        sings.push_back(std::move(js));
    }
    j["singularities"] = std::move(sings);
    return j;
}

Json to_json(const HopfSectionMeets& m) {
    Json j;
    Json xs = Json::array();
    for (const Scalar& s : m.x_values) xs.push_back(s.to_string());
    j["x_values"] = std::move(xs);
    Json cs = Json::array();
    for (const Scalar& s : m.companion) cs.push_back(s.to_string());
    j["companion_values"] = std::move(cs);
    j["all_distinct"] = m.all_distinct;
    return j;
}

}  // namespace pfol
