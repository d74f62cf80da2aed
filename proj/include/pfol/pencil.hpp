#pragma once

#include "pfol/foliation.hpp"

namespace pfol {

// Connection form theta = p dx + q dy with d(omega) = theta ^ omega and
// d(eta) = theta ^ eta; the curvature 2-form is (q_x - p_y) dx ^ dy.
struct CurvatureData {
    RationalFunction p, q;
    RationalFunction curvature;
    bool flat;
};

// The pencil omega + alpha * eta. Forms are kept exactly as given (members
// may pick up common factors; that is the NI story), but the two forms must
// not be proportional and no factor may be shared by every member.
class Pencil {
public:
    Pencil(OneForm omega, OneForm eta);

    const OneForm& omega() const { return omega_; }
    const OneForm& eta() const { return eta_; }
    const FieldSpec& field() const { return omega_.A.field(); }

    // T = A D - B C, the affine tangency polynomial; deg T <= 2d + 1
    const MultiPoly& tangency_polynomial() const { return tangency_; }
    long degree() const { return degree_; }

    // member at alpha (nullopt = infinity), normalized, with extracted factor
    std::pair<AffineFoliation, MultiPoly> member(const std::optional<Scalar>& alpha) const;

    // assembled coefficients with alpha symbolic
    MultiPoly generic_A() const;
    MultiPoly generic_B() const;

private:
    OneForm omega_, eta_;
    MultiPoly tangency_;
    long degree_;
};

CurvatureData curvature(const Pencil& p);
bool is_flat(const Pencil& p);

struct NiEntry {
    bool at_infinity = false;
    std::optional<Scalar> alpha;             // K-rational parameter
    std::optional<MultiPoly> alpha_minpoly;  // minimal polynomial when not in K
    std::optional<MultiPoly> factor;         // verified common factor
    bool verified = false;
};

struct NiReport {
    std::vector<NiEntry> entries;             // verified members of NI(P)
    std::vector<MultiPoly> unresolved;        // candidate alpha-polynomials left symbolic
    long line_at_infinity_multiplicity = 0;   // ord_{u=0} of the chart-2 tangency polynomial
};

// Candidate parameters from the alpha-content of the Sylvester resultants of
// (A + alpha C, B + alpha D) in y and in x, plus identically-vanishing
// members and alpha = infinity; each candidate is confirmed by a gcd.
NiReport ni_set(const Pencil& p);

struct DeltaFactorVerdict {
    MultiPoly factor;
    bool invariant_omega = false;
    bool invariant_eta = false;
    bool invariant = false;
};

struct DeltaInvarianceReport {
    std::vector<DeltaFactorVerdict> factors;
    bool covers_squarefree_part = false;  // product of factors ~ squarefree part of T
    bool delta_invariant = false;
};

// f | (B f_x - A f_y) for the raw 1-form (members with non-isolated
// singularities keep their singular curves invariant under this reading)
bool form_invariant(const OneForm& w, const MultiPoly& f);

// A component of the tangency set is pencil-invariant iff it is invariant for
// two distinct members; omega and eta serve as the two witnesses.
DeltaInvarianceReport delta_component_invariance(const Pencil& p,
                                                 const std::vector<MultiPoly>& factors);

// Level value c with g | numerator(first_integral - c), probed at a K-rational
// point of {g = 0}; nullopt when g is not a fiber component.
std::optional<Scalar> is_fiber_component(const MultiPoly& g, const RationalFunction& first_integral);
std::optional<Scalar> is_fiber_component(const MultiPoly& g, const RationalFunction& first_integral,
                                         const Point& at);

}  // namespace pfol
