#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfol/holonomy.hpp"
#include "testutil.hpp"

using namespace pfol;
using pfoltest::Rng;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

Pencil make(const std::string& omega, const std::string& eta,
            const FieldSpec& field = FieldSpec()) {
    return Pencil(parse_one_form(omega, field), parse_one_form(eta, field));
}

HolonomyPresentation mult_presentation(const FieldSpec& K,
                                       const std::vector<std::pair<Scalar, Scalar>>& munu) {
    HolonomyPresentation h;
    h.kind = RiccatiKind::Multiplicative;
    h.field = K;
    long i = 0;
    for (const auto& [mu, nu] : munu)
        h.multiplicative.push_back({Scalar::of(K, i++), mu, nu});
    return h;
}

HolonomyPresentation affine_presentation(
    const FieldSpec& K, const std::vector<std::tuple<Scalar, Scalar, Scalar>>& gens) {
    HolonomyPresentation h;
    h.kind = RiccatiKind::Affine;
    h.field = K;
    long i = 0;
    for (const auto& [lambda, a, b] : gens)
        h.affine.push_back({Scalar::of(K, i++), lambda, ScaledPeriod(a), ScaledPeriod(b)});
    return h;
}

}  // namespace

TEST_CASE("riccati normal form of the logarithmic pencil") {
    Pencil xy = make("x dy", "y dx");
    RiccatiPencil r = riccati_normal_form(xy);
    CHECK(r.kind == RiccatiKind::Multiplicative);
    REQUIRE(r.poles.size() == 1);
    CHECK(r.poles[0].location == Scalar(Rat(0)));
    CHECK(r.poles[0].residue() == Scalar(Rat(1)));
    CHECK(r.residue_at_infinity == Scalar(Rat(-1)));
    CHECK(r.alpha_shift.is_zero());
    CHECK(r.polynomial_part.is_zero());

    HolonomyPresentation h = holonomy_generators(r);
    REQUIRE(h.multiplicative.size() == 1);
    CHECK(h.multiplicative[0].mu == Scalar(Rat(-1)));
    CHECK(h.multiplicative[0].nu == Scalar(Rat(0)));
}

TEST_CASE("riccati with two finite poles") {
    // a = 1/x + 2/(x-1) = (3x - 1)/(x(x-1))
    Pencil p = make("(x^2 - x) dy", "(3*x - 1)*y dx");
    RiccatiPencil r = riccati_normal_form(p);
    CHECK(r.kind == RiccatiKind::Multiplicative);
    REQUIRE(r.poles.size() == 2);
    CHECK(r.poles[0].location == Scalar(Rat(0)));
    CHECK(r.poles[0].residue() == Scalar(Rat(1)));
    CHECK(r.poles[1].location == Scalar(Rat(1)));
    CHECK(r.poles[1].residue() == Scalar(Rat(2)));
    HolonomyPresentation h = holonomy_generators(r);
    CHECK(h.multiplicative[0].mu == Scalar(Rat(-1)));
    CHECK(h.multiplicative[1].mu == Scalar(Rat(-2)));
}

TEST_CASE("riccati affine kind and hand-built affine generators") {
    // P = a(x) constant in y: members dy + alpha a(x) dx
    Pencil aff = make("x dy", "dx");
    RiccatiPencil r = riccati_normal_form(aff);
    CHECK(r.kind == RiccatiKind::Affine);
    REQUIRE(r.poles.size() == 1);
    CHECK(r.poles[0].residue() == Scalar(Rat(1)));
    HolonomyPresentation h = holonomy_generators(r);
    REQUIRE(h.affine.size() == 1);
    CHECK(h.affine[0].lambda == Scalar(Rat(1)));
    CHECK(h.affine[0].a == ScaledPeriod(Scalar(Rat(-1))));
    CHECK(h.affine[0].b.is_zero());

    // lambda = 3 with a = 1/x: translation by -3 alpha periods
    RiccatiPencil r3 = r;
    r3.lambda = Scalar(Rat(3));
    HolonomyPresentation h3 = holonomy_generators(r3);
    CHECK(h3.affine[0].a == ScaledPeriod(Scalar(Rat(-3))));
}

TEST_CASE("riccati normal form error paths") {
    // eta does not define dx = 0
    CHECK_THROWS_WITH_AS(static_cast<void>(riccati_normal_form(make("x dy", "y dx + dy"))),
                         doctest::Contains("NotAFibration"), MathError);
    // not flat (and in fibration position)
    CHECK_THROWS_WITH_AS(
        static_cast<void>(riccati_normal_form(make("y^2*x dy + x dx", "y dx"))),
        doctest::Contains("NotFlat"), MathError);
    // y-degree too large
    CHECK_THROWS_WITH_AS(static_cast<void>(riccati_normal_form(make("dy", "y^3 dx"))),
                         doctest::Contains("DegYTooLarge"), MathError);
    // p2 without K-rational roots
    CHECK_THROWS_WITH_AS(static_cast<void>(riccati_normal_form(make("x dy", "(y^2 + 1) dx"))),
                         doctest::Contains("NonSplitP2"), MathError);
    // irrational poles
    CHECK_THROWS_WITH_AS(
        static_cast<void>(riccati_normal_form(make("(x^2 - 2) dy", "y dx"))),
        doctest::Contains("IrrationalPoles"), MathError);
}

TEST_CASE("p2 with roots in a quadratic extension") {
    FieldSpec Ki = FieldSpec::quadratic(Rat(0), Rat(-1));
    Pencil p = make("x dy", "(y^2 + 1) dx", Ki);
    RiccatiPencil r = riccati_normal_form(p);
    CHECK(r.kind == RiccatiKind::Multiplicative);
    REQUIRE(r.poles.size() == 1);
    // a picks up the root difference r1 - r2 = -2t
    CHECK(r.poles[0].residue() == Scalar(Ki, Rat(0), Rat(-2)));
}

TEST_CASE("p2 with a double root becomes affine") {
    // P = (y - 1)^2 / x
    Pencil p = make("x dy", "(y^2 - 2*y + 1) dx");
    RiccatiPencil r = riccati_normal_form(p);
    CHECK(r.kind == RiccatiKind::Affine);
    REQUIRE(r.poles.size() == 1);
    CHECK(r.poles[0].residue() == Scalar(Rat(-1)));  // a folded the -1 scale
}

TEST_CASE("the alpha shift lands in the nu parts") {
    // omega + 3 eta is the section member dy = 0
    Pencil p = make("-3*y dx + x dy", "y dx");
    RiccatiPencil r = riccati_normal_form(p);
    CHECK(r.alpha_shift == Scalar(Rat(3)));
    HolonomyPresentation h = holonomy_generators(r);
    REQUIRE(h.multiplicative.size() == 1);
    CHECK(h.multiplicative[0].mu == Scalar(Rat(-1)));
    CHECK(h.multiplicative[0].nu == Scalar(Rat(3)));
    // finite exactly on the rationals (3 - alpha in Q iff alpha in Q)
    CHECK(group_is_finite(h, Scalar(make_rat(1, 2))).finite);
    FieldSpec Ki = FieldSpec::quadratic(Rat(0), Rat(-1));
    HolonomyPresentation hi = h;
    hi.field = Ki;
    CHECK(!group_is_finite(hi, Scalar::generator(Ki)).finite);
    IpClassification cls = classify_ip(h);
    CHECK(cls.verdict == IpClassification::Verdict::QCoset);
    CHECK(*cls.lambda == Scalar(Rat(-1)));
    CHECK(*cls.beta == Scalar(Rat(3)));
}

TEST_CASE("caller twists feed nu") {
    Pencil xy = make("x dy", "y dx");
    RiccatiPencil r = riccati_normal_form(xy);
    HolonomyPresentation h = holonomy_generators(r, {Scalar(make_rat(1, 3))});
    CHECK(h.multiplicative[0].nu == Scalar(make_rat(1, 3)));
    CHECK_THROWS_AS(holonomy_generators(r, {Scalar(Rat(0)), Scalar(Rat(0))}), MathError);
}

TEST_CASE("group_is_finite: multiplicative") {
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(2));  // t^2 = 2
    HolonomyPresentation h =
        mult_presentation(K, {{Scalar::of(K, -1), Scalar::zero(K)}});
    CHECK(group_is_finite(h, Scalar::of(K, make_rat(3, 7))).finite);
    FinitenessCertificate bad = group_is_finite(h, Scalar::generator(K));
    CHECK(!bad.finite);
    CHECK(bad.failing_generator == 0);
}

TEST_CASE("group_is_finite: affine") {
    FieldSpec Q;
    // single translation generator z + (2 pi i) alpha
    HolonomyPresentation h = affine_presentation(
        Q, {{Scalar(Rat(1)), Scalar(Rat(1)), Scalar(Rat(0))}});
    CHECK(group_is_finite(h, Scalar(Rat(0))).finite);
    CHECK(!group_is_finite(h, Scalar(Rat(1))).finite);
    // non-root-of-unity multiplier
    HolonomyPresentation h2 = affine_presentation(
        Q, {{Scalar(Rat(2)), Scalar(Rat(0)), Scalar(Rat(1))}});
    CHECK(!group_is_finite(h2, Scalar(Rat(0))).finite);
    // two rotations with distinct fixed points
    HolonomyPresentation h3 = affine_presentation(
        Q, {{Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(0))},
            {Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(1))}});
    CHECK(!group_is_finite(h3, Scalar(Rat(0))).finite);
    // rotations about a common fixed point
    HolonomyPresentation h4 = affine_presentation(
        Q, {{Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(2))},
            {Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(2))}});
    CHECK(group_is_finite(h4, Scalar(Rat(7))).finite);
}

TEST_CASE("classify_ip: the three multiplicative cases") {
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(2));
    const Scalar t = Scalar::generator(K);
    // mu = (-1), nu = (0): coset Q
    IpClassification qc = classify_ip(mult_presentation(K, {{-Scalar::one(K), Scalar::zero(K)}}));
    CHECK(qc.verdict == IpClassification::Verdict::QCoset);
    CHECK(*qc.lambda == Scalar::of(K, -1));
    CHECK(*qc.beta == Scalar::zero(K));
    // mu = (1, 2), nu = (0, 1/3): still the rational coset
    IpClassification qc2 = classify_ip(mult_presentation(
        K, {{Scalar::one(K), Scalar::zero(K)}, {Scalar::of(K, 2), Scalar::of(K, make_rat(1, 3))}}));
    CHECK(qc2.verdict == IpClassification::Verdict::QCoset);
    CHECK(*qc2.beta == Scalar::zero(K));
    // mu = (1, t): incommensurable
    IpClassification fin = classify_ip(
        mult_presentation(K, {{Scalar::one(K), Scalar::zero(K)}, {t, Scalar::zero(K)}}));
    CHECK(fin.verdict == IpClassification::Verdict::Finite);
    // all mu zero, rational nu: everything
    IpClassification all = classify_ip(mult_presentation(
        K, {{Scalar::zero(K), Scalar::of(K, make_rat(2, 5))}, {Scalar::zero(K), Scalar::one(K)}}));
    CHECK(all.verdict == IpClassification::Verdict::AllOfIS);
    // all mu zero, an irrational nu: nothing
    IpClassification none = classify_ip(mult_presentation(K, {{Scalar::zero(K), t}}));
    CHECK(none.verdict == IpClassification::Verdict::Finite);
    // commensurable but incompatible base points
    IpClassification nobeta = classify_ip(
        mult_presentation(K, {{Scalar::one(K), Scalar::zero(K)}, {Scalar::one(K), t}}));
    CHECK(nobeta.verdict == IpClassification::Verdict::Finite);
}

TEST_CASE("classify_ip: affine cases") {
    FieldSpec Q;
    // identically finite: rotations with a common fixed point, no translations
    IpClassification all = classify_ip(affine_presentation(
        Q, {{Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(0))},
            {Scalar(Rat(-1)), Scalar(Rat(0)), Scalar(Rat(0))}}));
    CHECK(all.verdict == IpClassification::Verdict::AllOfIS);
    // translation a alpha + b = 0 pins one parameter
    IpClassification one = classify_ip(affine_presentation(
        Q, {{Scalar(Rat(1)), Scalar(Rat(2)), Scalar(Rat(-1))}}));
    CHECK(one.verdict == IpClassification::Verdict::Finite);
    REQUIRE(one.witnesses.size() == 1);
    CHECK(one.witnesses[0] == Scalar(make_rat(1, 2)));
    CHECK(group_is_finite(affine_presentation(
                              Q, {{Scalar(Rat(1)), Scalar(Rat(2)), Scalar(Rat(-1))}}),
                          Scalar(make_rat(1, 2)))
              .finite);
    // inconsistent conditions
    IpClassification none = classify_ip(affine_presentation(
        Q, {{Scalar(Rat(1)), Scalar(Rat(0)), Scalar(Rat(1))}}));
    CHECK(none.verdict == IpClassification::Verdict::Finite);
    CHECK(none.witnesses.empty());
    // a non-root-of-unity multiplier kills every parameter
    IpClassification bad = classify_ip(affine_presentation(
        Q, {{Scalar(Rat(3)), Scalar(Rat(0)), Scalar(Rat(0))}}));
    CHECK(bad.verdict == IpClassification::Verdict::Finite);
}

TEST_CASE("classification is consistent with finiteness sampling") {
    FieldSpec Ki = FieldSpec::quadratic(Rat(0), Rat(-1));
    const Scalar i = Scalar::generator(Ki);
    // mu = (i, 2i): coset lambda Q + beta with lambda = 1/i = -i, beta = 0
    HolonomyPresentation h = mult_presentation(
        Ki, {{i, Scalar::zero(Ki)}, {i + i, Scalar::zero(Ki)}});
    IpClassification cls = classify_ip(h);
    REQUIRE(cls.verdict == IpClassification::Verdict::QCoset);
    Rng rng(99);
    for (int k = 0; k < 10; ++k) {
        Scalar q = Scalar::of(Ki, make_rat(rng.pick(-20, 20), rng.pick(1, 7)));
        Scalar inside = *cls.lambda * q + *cls.beta;
        CHECK(group_is_finite(h, inside).finite);
        Scalar outside = inside + Scalar::one(Ki);  // leaves the coset -iQ
        CHECK(!group_is_finite(h, outside).finite);
    }
}

TEST_CASE("conjugation invariance of finiteness") {
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(2));
    const Scalar t = Scalar::generator(K);
    HolonomyPresentation h = mult_presentation(
        K, {{Scalar::of(K, -1), Scalar::of(K, make_rat(1, 2))}, {Scalar::of(K, 3), t}});
    // z -> 1/z conjugation negates every exponent
    HolonomyPresentation conj = h;
    for (auto& g : conj.multiplicative) {
        g.mu = -g.mu;
        g.nu = -g.nu;
    }
    for (long n = -4; n <= 4; ++n) {
        Scalar alpha = Scalar::of(K, make_rat(n, 3));
        CHECK(group_is_finite(h, alpha).finite == group_is_finite(conj, alpha).finite);
        Scalar irr = alpha + t;
        CHECK(group_is_finite(h, irr).finite == group_is_finite(conj, irr).finite);
    }
    // z -> z + c conjugation of an affine presentation
    HolonomyPresentation aff = affine_presentation(
        FieldSpec(), {{Scalar(Rat(-1)), Scalar(Rat(2)), Scalar(Rat(4))},
                      {Scalar(Rat(1)), Scalar(Rat(1)), Scalar(Rat(-2))}});
    HolonomyPresentation aconj = aff;
    Scalar c = Scalar(make_rat(5, 3));
    for (auto& g : aconj.affine)
        g.b = g.b + ScaledPeriod(c * (g.lambda - Scalar(Rat(1))));
    for (long n = -6; n <= 6; ++n) {
        Scalar alpha = Scalar(make_rat(n, 2));
        CHECK(group_is_finite(aff, alpha).finite == group_is_finite(aconj, alpha).finite);
    }
}

TEST_CASE("reparametrization covariance of the coset") {
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(-1));
    HolonomyPresentation h = mult_presentation(
        K, {{Scalar::of(K, 2), Scalar::of(K, make_rat(1, 2))},
            {Scalar::of(K, -4), Scalar::of(K, 3)}});
    IpClassification base = classify_ip(h);
    REQUIRE(base.verdict == IpClassification::Verdict::QCoset);
    for (const Rat& c : {make_rat(2), make_rat(-1, 3)}) {
        HolonomyPresentation scaled = h;
        for (auto& g : scaled.multiplicative) g.mu = g.mu * Scalar::of(K, c);
        IpClassification cls = classify_ip(scaled);
        REQUIRE(cls.verdict == IpClassification::Verdict::QCoset);
        CHECK(*cls.lambda == *base.lambda / Scalar::of(K, c));
        CHECK(*cls.beta == *base.beta / Scalar::of(K, c));
    }
}

TEST_CASE("residue bookkeeping with a polynomial part") {
    // a = (x^3 + 1)/x: polynomial part x^2, residue 1 at 0, -1 at infinity
    Pencil p = make("x dy", "(x^3 + 1) dx");
    RiccatiPencil r = riccati_normal_form(p);
    CHECK(r.kind == RiccatiKind::Affine);
    CHECK(r.polynomial_part == P("x^2"));
    REQUIRE(r.poles.size() == 1);
    CHECK(r.poles[0].residue() == Scalar(Rat(1)));
    CHECK(r.residue_at_infinity == Scalar(Rat(-1)));
    // higher-order pole with zero residue
    Pencil p2 = make("x^2 dy", "y dx");
    RiccatiPencil r2 = riccati_normal_form(p2);
    REQUIRE(r2.poles.size() == 1);
    CHECK(r2.poles[0].order == 2);
    CHECK(r2.poles[0].residue() == Scalar(Rat(0)));
    CHECK(r2.poles[0].coefficients[1] == Scalar(Rat(1)));
    CHECK(r2.residue_at_infinity == Scalar(Rat(0)));
}

TEST_CASE("side conditions report") {
    Pencil xy = make("x dy", "y dx");
    SideConditionsReport r1 = side_conditions_report(xy, Scalar(Rat(1)), {P("x"), P("y")});
    CHECK(r1.member_degree == 1);
    for (const auto& c : r1.components) {
        CHECK(c.z_total == 2);  // k(d+2) - k^2 = 3 - 1
        CHECK(c.z_at_least_one);
    }
    bool found_origin = false;
    for (const auto& s : r1.singularities) {
        if (s.chart == 1) {
            found_origin = true;
            CHECK(s.nondegenerate);
            REQUIRE(s.eigenvalue_ratio.has_value());
            CHECK(*s.eigenvalue_ratio == Scalar(Rat(-1)));
            CHECK(s.verdict == "holds");
        }
    }
    CHECK(found_origin);

    SideConditionsReport r2 = side_conditions_report(xy, Scalar(Rat(2)), {P("x")});
    for (const auto& s : r2.singularities)
        if (s.chart == 1) {
            REQUIRE(s.eigenvalue_ratio.has_value());
            CHECK(s.eigenvalue_ratio->is_rational());
            CHECK(s.eigenvalue_ratio->rational_part() < 0);
            CHECK(s.verdict == "holds");
        }

    // a member with non-isolated singularities is rejected
    CHECK_THROWS_AS(side_conditions_report(xy, Scalar(Rat(0)), {}), MathError);

    // degenerate singularity reports unknown
    Pencil cusp = make("y dy - x^2 dx", "dx");
    SideConditionsReport r3 = side_conditions_report(cusp, Scalar(Rat(0)), {});
    bool has_unknown = false;
    for (const auto& s : r3.singularities)
        if (!s.nondegenerate && s.verdict == "unknown") has_unknown = true;
    CHECK(has_unknown);
}
