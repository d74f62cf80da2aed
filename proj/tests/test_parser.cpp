#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pfol/document.hpp"
#include "testutil.hpp"

using namespace pfol;
using pfoltest::Rng;

namespace {

const char* kSampleDoc = R"(# sample document
[field]
kind = Q

[pencil]
label = "P2"
omega = "(4*x - 9*x^2 + y^2) dy - (6*y - 12*x*y) dx"
eta = "(2*y - 4*x*y) dy - 3*(x^2 - y^2) dx"

[curves]
delta = "4*x^3 - 9*x^4 - 4*y^2 + 12*x*y^2 - 6*x^2*y^2 - y^4"

[expect]
tangency = "-4*y^2 + 4*x^3 + 12*x*y^2 - 9*x^4 - 6*x^2*y^3 - y^4"
flat = true
)";

}  // namespace

TEST_CASE("parse_poly examples") {
    MultiPoly p = parse_poly("4*x - 9*x^2 + y^2");
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(Monomial::var(Var::X)) == Scalar(Rat(4)));
    CHECK(parse_poly("0").is_zero());
    MultiPoly big = parse_poly("(x^3-1)*(y^3-1)*(x^3-y^3)");
    CHECK(big.degree() == 9);
    CHECK(big == parse_poly("x^3-1") * parse_poly("y^3-1") * parse_poly("x^3-y^3"));
}

TEST_CASE("parse_poly error reporting") {
    CHECK_THROWS_AS(parse_poly("x + z"), InputError);
    try {
        parse_poly("x + z");
    } catch (const InputError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse_poly("x^99999999"), InputError);   // exponent overflow
    CHECK_THROWS_AS(parse_poly("x*"), InputError);
    CHECK_THROWS_AS(parse_poly("t"), InputError);            // generator over Q
    CHECK_THROWS_AS(parse_poly("x^y"), InputError);
    CHECK_THROWS_AS(parse_poly("(x"), InputError);
}

TEST_CASE("parse_one_form examples") {
    OneForm w = parse_one_form("(4*x-9*x^2+y^2) dy - (6*y-12*x*y) dx");
    CHECK(w.A == parse_poly("-(6*y-12*x*y)"));
    CHECK(w.B == parse_poly("4*x-9*x^2+y^2"));
    OneForm d = parse_one_form("dx");
    CHECK(d.A == parse_poly("1"));
    CHECK(d.B.is_zero());
    OneForm exact = parse_one_form("y dx + x dy");
    CHECK(exact.A == parse_poly("y"));
    CHECK(exact.B == parse_poly("x"));
    CHECK_THROWS_AS(parse_one_form("x + y"), InputError);  // no dx/dy part
    CHECK_THROWS_AS(parse_one_form("x dx + "), InputError);
}

TEST_CASE("scalars and rational functions") {
    CHECK(parse_scalar("3/4 - 2") == Scalar(make_rat(-5, 4)));
    FieldSpec K = FieldSpec::quadratic(Rat(0), Rat(-1));
    CHECK(parse_scalar("1 + 2*t", K) == Scalar(K, Rat(1), Rat(2)));
    CHECK_THROWS_AS(parse_scalar("x + 1"), InputError);
    RationalFunction f = parse_rational_function("x/y");
    CHECK(f.num() == parse_poly("x"));
    CHECK(f.den() == parse_poly("y"));
    CHECK(parse_rational_function("1/2").num() == parse_poly("1/2"));
}

TEST_CASE("round-trip identity on random polynomials") {
    Rng rng(424242);
    FieldSpec K = FieldSpec::quadratic(Rat(2), Rat(1));
    int checked = 0;
    for (int i = 0; i < 120; ++i) {
        const FieldSpec& f = i % 3 ? FieldSpec::rationals() : K;
        MultiPoly p = rng.poly(f, 4, 5, 20, i % 3 == 0);
        MultiPoly q = parse_poly(p.to_string(), f);
        CHECK(q == p);
        CHECK(q.to_string() == p.to_string());
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("pencil document parsing") {
    PencilDocument doc = parse_pencil_file(kSampleDoc);
    CHECK(doc.field.is_rationals());
    CHECK(doc.label == "P2");
    CHECK(doc.curves.size() == 1);
    CHECK(doc.curves[0].first == "delta");
    REQUIRE(doc.expect_tangency.has_value());
    CHECK(doc.expect_tangency->degree() == 5);  // the verbatim string has the y^3 term
    REQUIRE(doc.expect_flat.has_value());
    CHECK(*doc.expect_flat);
    // metadata preserved verbatim
    CHECK(doc.omega_src == "(4*x - 9*x^2 + y^2) dy - (6*y - 12*x*y) dx");
}

TEST_CASE("pencil document round-trips through the canonical printer") {
    PencilDocument doc = parse_pencil_file(kSampleDoc);
    std::string printed = print_pencil_file(doc);
    PencilDocument again = parse_pencil_file(printed);
    CHECK(again.omega.A == doc.omega.A);
    CHECK(again.omega.B == doc.omega.B);
    CHECK(again.eta.A == doc.eta.A);
    CHECK(again.eta.B == doc.eta.B);
    CHECK(again.curves[0].second == doc.curves[0].second);
    CHECK(again.expect_tangency == doc.expect_tangency);
    CHECK(again.expect_flat == doc.expect_flat);
    CHECK(print_pencil_file(again) == printed);
    // the emitted-without-expect variant drops the section
    CHECK(print_pencil_file(doc, false).find("[expect]") == std::string::npos);
}

TEST_CASE("quadratic field documents") {
    const char* doc_text = R"(
[field]
kind = Q(t)
minpoly = "t^2 + 1"

[pencil]
omega = "x dy - t*y dx"
eta = "y dx"
)";
    PencilDocument doc = parse_pencil_file(doc_text);
    CHECK(doc.field.is_quadratic());
    CHECK(doc.field.u() == 0);
    CHECK(doc.field.v() == -1);
    CHECK(doc.omega.A == parse_poly("-t*y", doc.field));
    CHECK(minimal_polynomial_string(doc.field) == "t^2 + 1");
}

TEST_CASE("document error paths: every deleted required key is located") {
    auto delete_line = [](const std::string& text, const std::string& needle) {
        std::string out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (line.find(needle) == std::string::npos) out += line + "\n";
        return out;
    };
    for (const char* key : {"kind", "omega = ", "eta = "}) {
        std::string mutated = delete_line(kSampleDoc, key);
        CHECK_THROWS_AS(parse_pencil_file(mutated), InputError);
    }
    // duplicate key
    std::string dup = kSampleDoc;
    dup += "\n[pencil]\nomega = \"dx\"\n";
    CHECK_THROWS_AS(parse_pencil_file(dup), InputError);
    // undeclared generator in a coefficient
    const char* bad = R"(
[field]
kind = Q

[pencil]
omega = "t*x dy"
eta = "dx"
)";
    CHECK_THROWS_AS(parse_pencil_file(bad), InputError);
    // minpoly missing for Q(t)
    const char* nomin = R"(
[field]
kind = Q(t)

[pencil]
omega = "dy"
eta = "dx"
)";
    CHECK_THROWS_AS(parse_pencil_file(nomin), InputError);
    // constant curve rejected
    const char* constcurve = R"(
[field]
kind = Q

[pencil]
omega = "dy"
eta = "dx"

[curves]
c = "3"
)";
    CHECK_THROWS_AS(parse_pencil_file(constcurve), InputError);
}
