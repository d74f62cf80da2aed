// Acceptance suite: one pass/fail line per criterion, exact checks throughout.
// Usage: acceptance <path-to-cli> <data-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pfol/document.hpp"
#include "pfol/holonomy.hpp"
#include "pfol/surfaces.hpp"

using namespace pfol;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

void criterion(int n, const std::string& label, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
        body();
    } catch (const Failure& f) {
        verdict = "FAIL";
        detail = f.what;
        ++g_failures;
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
        ++g_failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << verdict << " criterion " << n << ": " << label << " [" << buf << "]";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{"cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PencilDocument doc_of(const std::string& name) {
    return parse_pencil_file(slurp(g_data + "/" + name + ".pen"));
}

MultiPoly P(const std::string& s) { return parse_poly(s); }

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Failure{"cannot spawn: " + cmd};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = out;
    return WEXITSTATUS(status);
}

int run_shell(const std::string& cmd, std::string* output = nullptr) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) throw Failure{"cannot spawn: " + cmd};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = out;
    return WEXITSTATUS(status);
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng);
    }
    MultiPoly poly(int maxdeg, int terms, long range) {
        MultiPoly p{FieldSpec()};
        for (int i = 0; i < terms; ++i) {
            long dx = pick(0, maxdeg);
            long dy = pick(0, maxdeg - dx);
            Monomial m;
            m[Var::X] = static_cast<std::uint32_t>(dx);
            m[Var::Y] = static_cast<std::uint32_t>(dy);
            p += MultiPoly::term(Scalar(make_rat(pick(-range, range))), m);
        }
        return p;
    }
};

AffineFoliation fol(const std::string& oneform) {
    return normalize(parse_one_form(oneform)).first;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    PencilDocument p4 = doc_of("P4");
    Pencil pencil4(p4.omega, p4.eta);
    const MultiPoly& T4 = pencil4.tangency_polynomial();
    expect(proportional(T4, P("(x^3-1)*(y^3-1)*(x^3-y^3)")),
           "P4 tangency is not the triple product");
    expect(T4.degree() == 9 && pencil4.degree() == 4, "P4 degree bookkeeping");
    double s4 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(s4 < 5.0, "P4 tangency exceeded 5s");

    t0 = std::chrono::steady_clock::now();
    PencilDocument p2 = doc_of("P2");
    Pencil pencil2(p2.omega, p2.eta);
    // the paper's string with the y^3 exponent read as y^2
    expect(proportional(pencil2.tangency_polynomial(),
                        P("-4*y^2 + 4*x^3 + 12*x*y^2 - 9*x^4 - 6*x^2*y^2 - y^4")),
           "P2 tangency does not match the corrected polynomial");
    expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0,
           "P2 tangency exceeded 5s");

    t0 = std::chrono::steady_clock::now();
    PencilDocument p3 = doc_of("P3");
    Pencil pencil3(p3.omega, p3.eta);
    bool p3_matches = proportional(pencil3.tangency_polynomial(),
                                   P("(y^2 - x)*(y - 1/4*x^2)*(y^3 - x^3 + 3*x*y + 1)"));
    if (!p3_matches) {
        // the stated product does not reproduce; the divisibility diagnostics
        // must be emitted through the exit-3 path
        std::string out;
        int code = run_cli("delta-check " + g_data + "/P3.pen", &out);
        expect(code == 3, "P3 delta-check should exit 3, got " + std::to_string(code));
        expect(out.find("diagnostics") != std::string::npos, "P3 diagnostics missing");
        expect(out.find("expected_divides_computed") != std::string::npos,
               "P3 divisibility diagnostics missing");
    }
    expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0,
           "P3 tangency exceeded 5s");

    // CLI pipeline forms of the same checks
    std::string out;
    int code = run_shell(g_cli + " example P4 | " + g_cli + " tangency -", &out);
    expect(code == 0, "example P4 | tangency should exit 0");
    expect(out.find(T4.to_string()) != std::string::npos,
           "piped tangency output lacks the canonical expansion");
    code = run_shell(g_cli + " example P2 --emit | " + g_cli + " delta-check -", &out);
    expect(code == 3, "example P2 --emit | delta-check should exit 3 (paper discrepancy)");
}

void criterion2() {
    for (const char* name : {"P2", "P3", "P3p", "P4"}) {
        auto t0 = std::chrono::steady_clock::now();
        PencilDocument doc = doc_of(name);
        Pencil p(doc.omega, doc.eta);
        expect(is_flat(p), std::string(name) + " is not flat");
        expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0,
               std::string(name) + " flatness exceeded 5s");
    }
    Pencil fixture(parse_one_form("y dx + dy"), parse_one_form("x dx + dy"));
    CurvatureData c = curvature(fixture);
    expect(!c.flat, "the fixture should not be flat");
    expect(proportional(c.curvature.num(), P("1 + x")),
           "fixture curvature numerator is not proportional to 1 + x");
}

void criterion3() {
    expect(milnor_total(fol("x dy - y dx")) == Multiplicity::of(1), "d=0 total");
    expect(milnor_total(fol("-2*y dx + x dy")) == Multiplicity::of(3), "d=1 total");
    expect(milnor_total(fol("(4*x-9*x^2+y^2) dy - (6*y-12*x*y) dx")) == Multiplicity::of(7),
           "d=2 total");

    AffineFoliation f12 = fol("-2*y dx + x dy");
    auto points = singular_points_krational(f12);
    expect(points.size() == 3, "degree-1 fixture should have three singular points");
    ChartPair c2 = to_chart2(f12.A(), f12.B());
    ChartPair c3 = to_chart3(f12.A(), f12.B());
    AffineFoliation f2 = normalize(c2.A, c2.B).first;
    AffineFoliation f3 = normalize(c3.A, c3.B).first;
    Scalar sum{Rat(0)};
    for (const auto& sp : points) {
        expect(sp.nondegenerate, "fixture point should be nondegenerate");
        const AffineFoliation& chart = sp.chart == 1 ? f12 : sp.chart == 2 ? f2 : f3;
        sum += baum_bott_nondegenerate(chart, sp.point);
    }
    expect(sum == Scalar(Rat(9)), "local Baum-Bott values should sum to 9");
}

void criterion4() {
    Rng rng(20250809);
    Point origin(Scalar(Rat(0)), Scalar(Rat(0)));
    int agreement = 0;
    while (agreement < 20) {
        MultiPoly f = rng.poly(3, 4, 3);
        MultiPoly g = rng.poly(3, 4, 3);
        f -= MultiPoly::constant(f.constant_term());
        g -= MultiPoly::constant(g.constant_term());
        if (f.is_zero() || g.is_zero()) continue;
        if (!gcd_multivariate(f, g).is_constant()) continue;
        // localized staircase: total minus the part off a line through 0
        std::optional<long> oracle;
        for (int attempt = 0; attempt < 40 && !oracle; ++attempt) {
            long c = rng.pick(-30, 30);
            MultiPoly fx = f.substitute(Var::Y, MultiPoly::variable(f.field(), Var::X) * Scalar(Rat(c)));
            MultiPoly gx = g.substitute(Var::Y, MultiPoly::variable(f.field(), Var::X) * Scalar(Rat(c)));
            if (fx.is_zero() || gx.is_zero()) continue;
            MultiPoly h = gcd_multivariate(fx, gx);
            if (h.terms().size() != 1) continue;
            MultiPoly line = MultiPoly::variable(f.field(), Var::Y) -
                             MultiPoly::variable(f.field(), Var::X) * Scalar(Rat(c));
            MultiPoly sat = MultiPoly::constant(Scalar::one(f.field())) -
                            line * MultiPoly::variable(f.field(), Var::Alpha);
            auto total = quotient_dimension(buchberger({f, g}, {Var::X, Var::Y}));
            auto off = quotient_dimension(buchberger({f, g, sat}, {Var::X, Var::Y, Var::Alpha}));
            if (total.infinite || off.infinite) break;
            oracle = total.value - off.value;
        }
        if (!oracle) continue;
        Multiplicity direct = fulton_multiplicity(f, g, origin);
        expect(!direct.infinite, "unexpected infinite multiplicity");
        expect(direct.value == *oracle,
               "fulton " + std::to_string(direct.value) + " vs staircase " +
                   std::to_string(*oracle));
        ++agreement;
    }

    // axioms: symmetry, reduction, multiplicativity
    for (int k = 0; k < 25; ++k) {
        MultiPoly f = rng.poly(3, 4, 4);
        MultiPoly g = rng.poly(3, 4, 4);
        MultiPoly h = rng.poly(2, 3, 3);
        Multiplicity ifg = fulton_multiplicity(f, g, origin);
        expect(fulton_multiplicity(g, f, origin) == ifg, "symmetry");
        expect(fulton_multiplicity(f, g + h * f, origin) == ifg, "reduction");
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        Multiplicity ifh = fulton_multiplicity(f, h, origin);
        Multiplicity prod = fulton_multiplicity(f, g * h, origin);
        if (ifg.infinite || ifh.infinite) {
            expect(prod.infinite, "multiplicativity (infinite case)");
        } else {
            expect(!prod.infinite && prod.value == ifg.value + ifh.value, "multiplicativity");
        }
    }
}

void criterion5() {
    Pencil xy(parse_one_form("x dy"), parse_one_form("y dx"));
    RiccatiPencil r = riccati_normal_form(xy);
    expect(r.kind == RiccatiKind::Multiplicative, "kind should be multiplicative");
    expect(r.poles.size() == 1 && r.poles[0].residue() == Scalar(Rat(1)),
           "expected the single residue 1");
    HolonomyPresentation h = holonomy_generators(r);
    IpClassification cls = classify_ip(h);
    expect(cls.verdict == IpClassification::Verdict::QCoset, "verdict should be QCoset");
    expect(cls.lambda.has_value() && cls.beta.has_value(), "coset data missing");
    // the coset lambda Q + beta is Q itself
    expect(cls.lambda->is_rational() && !cls.lambda->is_zero() && cls.beta->is_rational(),
           "coset should be the rationals");

    FieldSpec Ki = FieldSpec::quadratic(Rat(0), Rat(-1));
    HolonomyPresentation hi = h;
    hi.field = Ki;
    Rng rng(5);
    int in_count = 0, out_count = 0;
    while (in_count < 10) {
        Scalar alpha = Scalar::of(Ki, make_rat(rng.pick(-40, 40), rng.pick(1, 9)));
        expect(group_is_finite(hi, alpha).finite == true, "rational alpha should be finite");
        ++in_count;
    }
    while (out_count < 10) {
        Scalar alpha(Ki, make_rat(rng.pick(-9, 9), rng.pick(1, 4)),
                     make_rat(rng.pick(1, 9), rng.pick(1, 4)));
        expect(group_is_finite(hi, alpha).finite == false, "irrational alpha should be infinite");
        ++out_count;
    }

    // invariant level sets x^p y^q = c at alpha = p/q
    struct Sample { long p, q, c; };
    for (Sample s : {Sample{1, 2, 1}, Sample{2, 3, 2}, Sample{3, 5, 5}}) {
        auto [member, factor] = xy.member(Scalar(make_rat(s.p, s.q)));
        expect(factor.is_constant(), "member should have isolated singularities");
        Monomial m;
        m[Var::X] = static_cast<std::uint32_t>(s.p);
        m[Var::Y] = static_cast<std::uint32_t>(s.q);
        MultiPoly level = MultiPoly::term(Scalar::one(member.field()), m) -
                          MultiPoly::constant(Scalar(Rat(s.c)));
        expect(is_invariant(member, level), "level set x^p y^q - c should be invariant");
    }
}

void criterion6() {
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(2));  // contains the irrational sqrt(2)
    const Scalar t = Scalar::generator(K);
    auto mult = [&](std::vector<std::pair<Scalar, Scalar>> munu) {
        HolonomyPresentation h;
        h.kind = RiccatiKind::Multiplicative;
        h.field = K;
        long i = 0;
        for (auto& [mu, nu] : munu) h.multiplicative.push_back({Scalar::of(K, i++), mu, nu});
        return h;
    };
    IpClassification a = classify_ip(mult({{Scalar::zero(K), Scalar::of(K, make_rat(1, 2))},
                                           {Scalar::zero(K), Scalar::of(K, 3)}}));
    expect(a.verdict == IpClassification::Verdict::AllOfIS, "all-mu-zero rational nu => AllOfIS");
    IpClassification b = classify_ip(mult({{Scalar::zero(K), t}}));
    expect(b.verdict == IpClassification::Verdict::Finite, "all-mu-zero irrational nu => Finite");
    IpClassification c = classify_ip(mult({{Scalar::one(K), Scalar::zero(K)}, {t, Scalar::zero(K)}}));
    expect(c.verdict == IpClassification::Verdict::Finite, "irrational exponent ratio => Finite");

    // covariance under alpha -> c alpha
    HolonomyPresentation base = mult({{Scalar::of(K, 2), Scalar::of(K, make_rat(1, 2))},
                                      {Scalar::of(K, 6), Scalar::of(K, -1)}});
    IpClassification cls = classify_ip(base);
    expect(cls.verdict == IpClassification::Verdict::QCoset, "base should be QCoset");
    for (const Rat& cval : {make_rat(2), make_rat(-1, 3)}) {
        HolonomyPresentation scaled = base;
        for (auto& g : scaled.multiplicative) g.mu = g.mu * Scalar::of(K, cval);
        IpClassification sc = classify_ip(scaled);
        expect(sc.verdict == IpClassification::Verdict::QCoset, "scaled should stay QCoset");
        expect(*sc.lambda == *cls.lambda / Scalar::of(K, cval), "lambda covariance");
        expect(*sc.beta == *cls.beta / Scalar::of(K, cval), "beta covariance");
    }
}

void criterion7() {
    Rng rng(777);
    for (int k = 0; k < 12; ++k) {
        long r = rng.pick(1, 3);
        Rat b = make_rat(rng.pick(1, 4), rng.pick(5, 9));
        bool twist = rng.pick(0, 1) == 1;
        Scalar bs{b};
        Scalar as = twist ? bs.pow(r) : Scalar(make_rat(rng.pick(1, 4), rng.pick(5, 9)));
        Scalar lam = twist ? Scalar(make_rat(rng.pick(-4, 4), rng.pick(1, 3))) : Scalar(Rat(0));
        HopfSpec h{as, bs, lam, r};
        for (long n = 0; n <= 10; ++n)
            expect(hopf_closed_form_check(h, n), "closed form mismatch at n=" + std::to_string(n));
    }
    HopfSpec h{Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2)), Scalar(Rat(1)), 1};
    HopfSectionMeets m = hopf_section_meets(h, Scalar(Rat(1)), 25);
    expect(m.x_values.size() == 25 && m.all_distinct, "25 pairwise-distinct solutions expected");

    TorusSpec tau_i = TorusSpec::quadratic(Rat(0), Rat(-1));
    TorusSpec generic = TorusSpec::make_generic();
    expect(!endomorphism_algebra(tau_i).is_rational_field, "tau = i should give Q(tau)");
    expect(endomorphism_algebra(generic).is_rational_field, "generic tau should give Q");
    FieldSpec Ki = FieldSpec::quadratic(Rat(0), Rat(-1));
    expect(ip_linear_torus_membership(tau_i, Scalar(Ki, Rat(2), Rat(3))), "2 + 3i in Q(i)");
    expect(ip_linear_torus_membership(generic, Scalar(make_rat(5, 3))), "5/3 in Q");
    expect(!ip_linear_torus_membership(generic, Scalar::generator(Ki)), "i not in Q");
}

void criterion8() {
    Rng rng(4242);
    auto random_pencil = [&](bool equal_degrees) {
        while (true) {
            MultiPoly A = rng.poly(2, 3, 4);
            MultiPoly B = rng.poly(2, 3, 4);
            MultiPoly C = rng.poly(2, 3, 4);
            MultiPoly D = rng.poly(2, 3, 4);
            if ((A.is_zero() && B.is_zero()) || (C.is_zero() && D.is_zero())) continue;
            if (!normalize(A, B).second.is_constant()) continue;
            if (!normalize(C, D).second.is_constant()) continue;
            if ((A * D - B * C).is_zero()) continue;
            if (equal_degrees &&
                projective_degree_of_pair(A, B) != projective_degree_of_pair(C, D))
                continue;
            return Pencil(OneForm{A, B}, OneForm{C, D});
        }
    };

    for (int i = 0; i < 50; ++i) {
        Pencil p = random_pencil(false);
        Pencil swapped(p.eta(), p.omega());
        expect(swapped.tangency_polynomial() == -p.tangency_polynomial(), "antisymmetry");
        Scalar c{make_rat(rng.pick(-5, 5), rng.pick(1, 3))};
        OneForm shifted{p.omega().A + p.eta().A * c, p.omega().B + p.eta().B * c};
        if (!shifted.is_zero()) {
            MultiPoly t2 = shifted.A * p.eta().B - shifted.B * p.eta().A;
            expect(t2 == p.tangency_polynomial(), "member-change invariance");
        }
    }

    for (int i = 0; i < 50; ++i) {
        Pencil p = random_pencil(true);
        long d = p.degree();
        expect(p.tangency_polynomial().degree() <= 2 * d + 1, "degree bound");
        NiReport r = ni_set(p);
        expect((p.tangency_polynomial().degree() == 2 * d + 1) ==
                   (r.line_at_infinity_multiplicity == 0),
               "degree bound sharpness vs the infinity line");
    }

    for (int i = 0; i < 50; ++i) {
        Pencil p = random_pencil(false);
        CurvatureData c = curvature(p);
        RationalFunction A = RationalFunction::from_poly(p.omega().A);
        RationalFunction B = RationalFunction::from_poly(p.omega().B);
        RationalFunction C = RationalFunction::from_poly(p.eta().A);
        RationalFunction D = RationalFunction::from_poly(p.eta().B);
        RationalFunction r1 = RationalFunction::from_poly(
            p.omega().B.derivative(Var::X) - p.omega().A.derivative(Var::Y));
        RationalFunction r2 = RationalFunction::from_poly(
            p.eta().B.derivative(Var::X) - p.eta().A.derivative(Var::Y));
        expect(c.p * B - c.q * A == r1, "back-substitution, omega side");
        expect(c.p * D - c.q * C == r2, "back-substitution, eta side");
    }

    FieldSpec K = FieldSpec::quadratic(Rat(2), Rat(1));
    for (int i = 0; i < 60; ++i) {
        const FieldSpec& f = i % 2 ? K : FieldSpec::rationals();
        MultiPoly p{f};
        for (int j = 0; j < 5; ++j) {
            Monomial m;
            m[Var::X] = static_cast<std::uint32_t>(rng.pick(0, 3));
            m[Var::Y] = static_cast<std::uint32_t>(rng.pick(0, 3));
            Rat a = make_rat(rng.pick(-20, 20), rng.pick(1, 5));
            Scalar s = f.is_rationals() ? Scalar(a) : Scalar(f, a, make_rat(rng.pick(-9, 9)));
            p += MultiPoly::term(s, m);
        }
        MultiPoly q = parse_poly(p.to_string(), f);
        expect(q == p && q.to_string() == p.to_string(), "parser round-trip");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2) g_cli = argv[1];
    if (argc >= 3) g_data = argv[2];
    if (g_cli.empty() || g_data.empty()) {
        std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
        return 2;
    }
    criterion(1, "tangency reproduction for P4, P2 and the P3 diagnostics path", criterion1);
    criterion(2, "flatness of the four pencils and the non-flat fixture", criterion2);
    criterion(3, "index totals d^2+d+1 and the local Baum-Bott sum", criterion3);
    criterion(4, "Fulton vs Groebner staircase oracle and the Fulton axioms", criterion4);
    criterion(5, "holonomy classification of the logarithmic pencil", criterion5);
    criterion(6, "trichotomy coverage and coset covariance", criterion6);
    criterion(7, "Hopf closed form, section meets, torus membership", criterion7);
    criterion(8, "property suites: tangency, curvature, parser round-trip", criterion8);
    return g_failures == 0 ? 0 : 1;
}
