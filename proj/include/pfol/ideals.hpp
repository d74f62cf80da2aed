#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfol/polyfn.hpp"

namespace pfol {

// A K-rational point of the affine chart.
struct Point {
    Scalar x, y;

    Point() = default;  // the origin over Q
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

// A count that may be infinite (shared components, unbounded staircases).
struct Multiplicity {
    long value = 0;
    bool infinite = false;

    static Multiplicity of(long v) { return {v, false}; }
    static Multiplicity inf() { return {0, true}; }
    bool operator==(const Multiplicity& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
};

// Local intersection multiplicity I(p; f, g) of two plane curves, by the
// axiomatic recursion: translate p to the origin, order the pure x-parts,
// reduce one by the other, split off y-axis factors, recurse.
Multiplicity fulton_multiplicity(const MultiPoly& f, const MultiPoly& g, const Point& p);

// graded reverse lexicographic order on a fixed variable list
struct GrevLexOrder {
    std::vector<Var> vars;

    explicit GrevLexOrder(std::vector<Var> v) : vars(std::move(v)) {}
    bool greater(const Monomial& a, const Monomial& b) const;
};

struct GroebnerBasis {
    std::vector<MultiPoly> polys;  // reduced, monic, sorted by leading monomial
    GrevLexOrder order;
};

// Reduced Groebner basis of the ideal generated by `generators` in the
// polynomial ring on `vars` (grevlex). Zero generators are dropped.
GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, std::vector<Var> vars);

// Number of standard monomials of the staircase; infinite if unbounded.
Multiplicity quotient_dimension(const GroebnerBasis& basis);

// All roots of a univariate polynomial that lie in its coefficient field:
// rational-root sieve over Q plus the quadratic-extension closure via a
// rational system in the coordinates of c + d*t.
std::vector<Scalar> rational_roots(const MultiPoly& f, Var v);
std::vector<std::pair<Scalar, long>> roots_with_multiplicity(const MultiPoly& f, Var v);

// smallest n <= 6 with s^n = 1; only {1,2,3,4,6} occur in a quadratic field
std::optional<int> root_of_unity_order(const Scalar& s);

// K-rational common zeros of two coprime curves (all such points; multiplicity
// not attached). Throws NonIsolatedZeros when the zero set is a curve.
std::vector<Point> common_zeros_krational(const MultiPoly& f, const MultiPoly& g);

}  // namespace pfol
