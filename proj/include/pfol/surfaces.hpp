#pragma once

#include "pfol/poly.hpp"

namespace pfol {

// Lattice parameter of the elliptic curve C / <1, tau>: generic, or a
// quadratic irrational (necessarily imaginary) with CM.
struct TorusSpec {
    bool generic = true;
    FieldSpec tau_field;  // quadratic spec when not generic

    static TorusSpec make_generic() { return TorusSpec{}; }
    static TorusSpec quadratic(const Rat& u, const Rat& v);
};

struct EndomorphismAlgebra {
    bool is_rational_field = true;  // Q vs Q(tau)
    FieldSpec field;                // the tau field in the CM case
    std::string to_string() const { return is_rational_field ? "Q" : "Q(tau)"; }
};

// End(E) tensor Q: Q for generic tau, Q(tau) for imaginary quadratic tau
EndomorphismAlgebra endomorphism_algebra(const TorusSpec& t);

// exact membership of alpha in Q (generic) or Q(tau)
bool ip_linear_torus_membership(const TorusSpec& t, const Scalar& alpha);

// Contraction germ (x, y) -> (a x + lambda y^r, b y); lambda = 0 or a = b^r.
// The modulus constraints |a| <= |b| < 1 are the caller's assertion.
struct HopfSpec {
    Scalar a, b, lambda;
    long r = 1;

    HopfSpec(Scalar a_, Scalar b_, Scalar lambda_, long r_);
};

// the pair (f^n_x, f^n_y) as polynomials in x, y
struct HopfIterate {
    MultiPoly x, y;
};

HopfIterate hopf_iterate(const HopfSpec& h, long n);
// closed form (a^n x + n lambda a^(n-1) y^r, b^n y)
HopfIterate hopf_closed_form(const HopfSpec& h, long n);
bool hopf_closed_form_check(const HopfSpec& h, long n);

// Intersection parameters of the leaf L_alpha with the cross-section, per the
// explicit formulas; certifies pairwise distinctness of the x-values.
struct HopfSectionMeets {
    std::vector<Scalar> x_values;
    std::vector<Scalar> companion;  // x' (alpha != 0) or y = b^n (alpha = 0)
    bool all_distinct = false;
};

HopfSectionMeets hopf_section_meets(const HopfSpec& h, const std::optional<Scalar>& alpha, long N);

}  // namespace pfol
