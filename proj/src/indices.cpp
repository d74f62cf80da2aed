#include <algorithm>

#include "pfol/foliation.hpp"

namespace pfol {

namespace {

struct ChartFoliations {
    AffineFoliation chart1, chart2, chart3;
};

ChartFoliations all_charts(const AffineFoliation& f) {
    ChartPair c2 = to_chart2(f.A(), f.B());
    ChartPair c3 = to_chart3(f.A(), f.B());
    return ChartFoliations{f, normalize(c2.A, c2.B).first, normalize(c3.A, c3.B).first};
}

// staircase count of <P, Q> over the chart plane
Multiplicity chart_dimension(const AffineFoliation& f) {
    auto basis = buchberger({f.P(), f.Q()}, {Var::X, Var::Y});
    return quotient_dimension(basis);
}

// count of singularities with u != 0, by inverting u with a fresh variable
Multiplicity chart_dimension_off_axis(const AffineFoliation& f) {
    const FieldSpec& field = f.field();
    MultiPoly saturator = MultiPoly::constant(Scalar::one(field)) -
                          MultiPoly::variable(field, Var::X) *
                              MultiPoly::variable(field, Var::Alpha);
    auto basis = buchberger({f.P(), f.Q(), saturator}, {Var::X, Var::Y, Var::Alpha});
    return quotient_dimension(basis);
}

}  // namespace

Multiplicity milnor_total(const AffineFoliation& f) {
    ChartFoliations charts = all_charts(f);
    Multiplicity m1 = chart_dimension(charts.chart1);
    Multiplicity m2_all = chart_dimension(charts.chart2);
    Multiplicity m2_off = chart_dimension_off_axis(charts.chart2);
    if (m1.infinite || m2_all.infinite || m2_off.infinite)
        throw MathError("NonIsolatedSingularities", "the singular scheme contains a curve");
    Multiplicity m3 = milnor_number(charts.chart3, Point(Scalar::zero(f.field()), Scalar::zero(f.field())));
    if (m3.infinite)
        throw MathError("NonIsolatedSingularities", "the singular scheme contains a curve");
    return Multiplicity::of(m1.value + (m2_all.value - m2_off.value) + m3.value);
}

std::vector<ProjectiveSingularPoint> singular_points_krational(const AffineFoliation& f) {
    ChartFoliations charts = all_charts(f);
    const Scalar zero = Scalar::zero(f.field());
    std::vector<ProjectiveSingularPoint> out;

    auto classify = [](const AffineFoliation& chart, const Point& p) {
        Multiplicity m = milnor_number(chart, p);
        bool nondeg = false;
        if (!m.infinite && m.value == 1) {
            nondeg = true;  // multiplicity one is exactly the nondegenerate case
        }
        return std::pair<Multiplicity, bool>(m, nondeg);
    };

    for (const Point& p : common_zeros_krational(charts.chart1.P(), charts.chart1.Q())) {
        auto [m, nd] = classify(charts.chart1, p);
        out.push_back({1, p, m, nd});
    }
    for (const Point& p : common_zeros_krational(charts.chart2.P(), charts.chart2.Q())) {
        if (!p.x.is_zero()) continue;  // u != 0 already counted in chart 1
        auto [m, nd] = classify(charts.chart2, p);
        out.push_back({2, p, m, nd});
    }
    Point origin(zero, zero);
    if (charts.chart3.is_singular_at(origin)) {
        auto [m, nd] = classify(charts.chart3, origin);
        out.push_back({3, origin, m, nd});
    }
    return out;
}

Scalar baum_bott_total(const AffineFoliation& f) {
    long d = f.degree();
    Scalar total = Scalar::of(f.field(), (d + 2) * (d + 2));

    // When the K-rational nondegenerate points exhaust the singular scheme,
    // cross-check the closed form against the sum of local residues.
    Multiplicity count = milnor_total(f);
    auto points = singular_points_krational(f);
    long accounted = 0;
    bool all_nondegenerate = true;
    for (const auto& sp : points) {
        if (sp.milnor.infinite) throw MathError("NonIsolatedSingularities", "singular curve");
        accounted += sp.milnor.value;
        all_nondegenerate = all_nondegenerate && sp.nondegenerate;
    }
    if (all_nondegenerate && accounted == count.value) {
        ChartFoliations charts = all_charts(f);
        Scalar sum = Scalar::zero(f.field());
        for (const auto& sp : points) {
            const AffineFoliation& chart =
                sp.chart == 1 ? charts.chart1 : sp.chart == 2 ? charts.chart2 : charts.chart3;
            sum += baum_bott_nondegenerate(chart, sp.point);
        }
        if (!(sum == total))
            throw MathError("InternalError",
                            "local Baum-Bott residues do not sum to the global value");
    }
    return total;
}

Scalar baum_bott_at(const AffineFoliation& f, const Point& p) {
    Multiplicity mp = milnor_number(f, p);
    if (mp.infinite) throw MathError("NonIsolatedSingularities", "singular curve through the point");
    if (mp.value == 0)
        throw MathError("NotSingular", "Baum-Bott index at a regular point");
    if (mp.value == 1) return baum_bott_nondegenerate(f, p);

    // degenerate: recover from the global total when everything else is
    // K-rational and nondegenerate
    Multiplicity total = milnor_total(f);
    auto points = singular_points_krational(f);
    long accounted = 0;
    ChartFoliations charts = all_charts(f);
    Scalar others = Scalar::zero(f.field());
    for (const auto& sp : points) {
        accounted += sp.milnor.value;
        if (sp.chart == 1 && sp.point == p) continue;
        if (!sp.nondegenerate)
            throw MathError("DegenerateSingularity",
                            "more than one degenerate singularity; local residue unsupported");
        const AffineFoliation& chart =
            sp.chart == 1 ? charts.chart1 : sp.chart == 2 ? charts.chart2 : charts.chart3;
        others += baum_bott_nondegenerate(chart, sp.point);
    }
    if (accounted != total.value)
        throw MathError("DegenerateSingularity",
                        "singularities outside K prevent recovering the local residue");
    long d = f.degree();
    return Scalar::of(f.field(), (d + 2) * (d + 2)) - others;
}

}  // namespace pfol
