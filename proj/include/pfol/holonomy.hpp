#pragma once

#include "pfol/pencil.hpp"

namespace pfol {

// The number 2*pi*i*coefficient. Arithmetic stays within scaled periods;
// comparisons against plain scalars are only meaningful against zero.
struct ScaledPeriod {
    Scalar coefficient;

    ScaledPeriod() = default;
    explicit ScaledPeriod(Scalar c) : coefficient(std::move(c)) {}

    bool is_zero() const { return coefficient.is_zero(); }
    ScaledPeriod operator+(const ScaledPeriod& o) const {
        return ScaledPeriod(coefficient + o.coefficient);
    }
    ScaledPeriod operator-(const ScaledPeriod& o) const {
        return ScaledPeriod(coefficient - o.coefficient);
    }
    ScaledPeriod scaled(const Scalar& s) const { return ScaledPeriod(coefficient * s); }
    ScaledPeriod divided(const Scalar& s) const { return ScaledPeriod(coefficient / s); }
    bool operator==(const ScaledPeriod& o) const { return coefficient == o.coefficient; }
    std::string to_string() const { return "2*pi*i*(" + coefficient.to_string() + ")"; }
};

struct PolePrincipalPart {
    Scalar location;
    long order = 1;
    std::vector<Scalar> coefficients;  // of 1/(x-c)^k, k = 1..order

    const Scalar& residue() const { return coefficients.front(); }
};

enum class RiccatiKind { Affine, Multiplicative };

// Normal form data of a flat pencil transverse to the fibration x = const:
// members are dy + alpha * lambda * a(x) dx (Affine: the fiber y = infinity
// carries multiplicity two) or dy + alpha * a(x) y dx (Multiplicative: the
// fibers y = 0 and y = infinity carry multiplicity one each).
struct RiccatiPencil {
    RiccatiKind kind = RiccatiKind::Multiplicative;
    FieldSpec field;
    Scalar lambda;                 // Affine: constant value of p2 after scaling
    RationalFunction a;            // a(x)
    MultiPoly polynomial_part;     // polynomial part of a
    std::vector<PolePrincipalPart> poles;
    Scalar residue_at_infinity;    // computed independently; sums with residues to 0
    Scalar alpha_shift;            // applied reparametrization alpha -> alpha - shift
    std::string y_normalization;   // description of the fiber Moebius map used
};

struct MultiplicativeGenerator {
    Scalar pole;  // the base point the loop encircles
    Scalar mu, nu;
};

struct AffineGenerator {
    Scalar pole;
    Scalar lambda;
    ScaledPeriod a, b;
};

// One generator per finite pole of a(x); z -> exp(2 pi i (mu alpha + nu)) z
// or z -> lambda z + a alpha + b.
struct HolonomyPresentation {
    RiccatiKind kind = RiccatiKind::Multiplicative;
    FieldSpec field;
    std::vector<MultiplicativeGenerator> multiplicative;
    std::vector<AffineGenerator> affine;

    std::size_t size() const {
        return kind == RiccatiKind::Multiplicative ? multiplicative.size() : affine.size();
    }
};

struct FinitenessCertificate {
    bool finite = false;
    std::string reason;
    std::optional<std::size_t> failing_generator;
};

struct IpClassification {
    enum class Verdict { Finite, AllOfIS, QCoset };
    Verdict verdict = Verdict::Finite;
    std::optional<Scalar> lambda;  // QCoset: I_p cap IS = (lambda Q + beta) cap IS
    std::optional<Scalar> beta;
    std::vector<Scalar> witnesses;  // known members of I_p cap IS for Finite verdicts
    std::string reason;
};

// Extraction of the Riccati data from a pencil whose eta side defines the
// fibration dx = 0. A parameter shift is applied when some member, rather
// than omega itself, is the section foliation dy = 0; the shift reappears in
// the nu / b parts of the generators.
RiccatiPencil riccati_normal_form(const Pencil& pencil);

HolonomyPresentation holonomy_generators(const RiccatiPencil& r);
// caller-supplied twist data: nu offsets (Multiplicative) or b offsets
// (Affine), one per pole
HolonomyPresentation holonomy_generators(const RiccatiPencil& r, const std::vector<Scalar>& twists);

FinitenessCertificate group_is_finite(const HolonomyPresentation& h, const Scalar& alpha);

IpClassification classify_ip(const HolonomyPresentation& h);

// best-effort audit of the compact-invariant-curve hypotheses at a parameter
struct ComponentZReport {
    MultiPoly component;
    long degree = 0;
    long z_total = 0;
    bool z_at_least_one = false;
};

struct SingularityReport {
    int chart = 1;
    Point point;
    bool nondegenerate = false;
    std::optional<Scalar> eigenvalue_ratio;  // a ratio lying in K, when one does
    std::string verdict;  // "holds" | "likely" | "unknown"
    std::string note;
};

struct SideConditionsReport {
    Scalar alpha;
    long member_degree = 0;
    std::vector<ComponentZReport> components;
    std::vector<SingularityReport> singularities;
};

SideConditionsReport side_conditions_report(const Pencil& pencil, const Scalar& alpha,
                                            const std::vector<MultiPoly>& components);

}  // namespace pfol
