#pragma once

#include "pfol/ideals.hpp"
#include "pfol/parser.hpp"

namespace pfol {

// Degrees of the bundles attached to a degree-d foliation on P^2.
// normal + tangent = 3 = -canonical holds identically.
struct LineBundleDegrees {
    long degree;

    long normal() const { return degree + 2; }
    long tangent() const { return 1 - degree; }
    long canonical() const { return -3; }
    long second_chern() const { return 3; }
    // The N.K value under which both global index identities reproduce the
    // affine singularity count d^2+d+1 together with BB = (d+2)^2. The
    // canonical degree itself is -3; the working pairing flips its sign.
    long eq1_pairing() const { return 3 * (degree + 2); }
};

// Foliation in the affine chart, omega = A dx + B dy with gcd(A, B) = 1 and a
// canonical scalar normalization. The tangent field is Y = B d/dx - A d/dy,
// i.e. (P, Q) = (B, -A).
class AffineFoliation {
public:
    const MultiPoly& A() const { return A_; }
    const MultiPoly& B() const { return B_; }
    MultiPoly P() const { return B_; }
    MultiPoly Q() const { return -A_; }
    const FieldSpec& field() const { return A_.field(); }
    long degree() const { return degree_; }
    LineBundleDegrees bundles() const { return LineBundleDegrees{degree_}; }

    // Y(f) = B f_x - A f_y
    MultiPoly apply_vector_field(const MultiPoly& f) const;

    bool is_singular_at(const Point& p) const;

    friend std::pair<AffineFoliation, MultiPoly> normalize(const MultiPoly& A,
                                                           const MultiPoly& B);

private:
    AffineFoliation(MultiPoly A, MultiPoly B, long d)
        : A_(std::move(A)), B_(std::move(B)), degree_(d) {}

    MultiPoly A_, B_;
    long degree_;
};

// Removes the common factor (returned monic) and scales canonically.
std::pair<AffineFoliation, MultiPoly> normalize(const MultiPoly& A, const MultiPoly& B);
std::pair<AffineFoliation, MultiPoly> normalize(const OneForm& w);

// Degree of the projective foliation: with m = max(deg A, deg B) and
// (P_m, Q_m) the top homogeneous parts of (B, -A), the degree is m - 1 when
// y P_m - x Q_m vanishes (radial top) and m otherwise.
long projective_degree_of_pair(const MultiPoly& A, const MultiPoly& B);

// dim O_p / <P, Q>; zero exactly off the singular locus
Multiplicity milnor_number(const AffineFoliation& f, const Point& p);

// (Tr J)^2 / det J at a nondegenerate singular point
Scalar baum_bott_nondegenerate(const AffineFoliation& f, const Point& p);

// The three standard charts of P^2. Chart 2 covers x != 0 via x = 1/u,
// y = v/u (u, v stored in the x, y slots); chart 3 covers y != 0 via
// x = s/w, y = 1/w. The line at infinity of chart 1 is u = 0, the residual
// point [0:1:0] is the chart-3 origin.
struct ChartPair {
    MultiPoly A, B;
};
ChartPair to_chart2(const MultiPoly& A, const MultiPoly& B);
ChartPair to_chart3(const MultiPoly& A, const MultiPoly& B);

// Total Milnor number over P^2: full staircase count in chart 1, the u = 0
// locus of chart 2 (by localization), and the chart-3 origin. Equals
// d^2 + d + 1 for a foliation with isolated singularities.
Multiplicity milnor_total(const AffineFoliation& f);

// (d+2)^2 by the self-intersection identity; when every singularity is
// K-rational and nondegenerate the sum of local residues is cross-checked.
Scalar baum_bott_total(const AffineFoliation& f);

// All K-rational singular points of the projectivization, tagged by chart.
struct ProjectiveSingularPoint {
    int chart;  // 1, 2 or 3
    Point point;
    Multiplicity milnor;
    bool nondegenerate;
};
std::vector<ProjectiveSingularPoint> singular_points_krational(const AffineFoliation& f);

// Local Baum-Bott at a possibly degenerate chart-1 point, recovered from the
// global total when p is the only degenerate singularity and everything else
// is K-rational and nondegenerate.
Scalar baum_bott_at(const AffineFoliation& f, const Point& p);

// {f = 0} is invariant iff f divides Y(f)
bool is_invariant(const AffineFoliation& fol, const MultiPoly& f);

// dim O_p / <f, Y(f)> for a non-invariant curve
Multiplicity tangency_index(const AffineFoliation& fol, const MultiPoly& f, const Point& p);
long tangency_total(const AffineFoliation& fol, const MultiPoly& f,
                    const std::vector<Point>& points);

// Bundle pairings against a degree-k curve and the implied index values.
struct GlobalRelations {
    long curve_degree;
    long normal_dot_curve;   // k (d+2)
    long tangent_dot_curve;  // k (1-d)
    long self_intersection;  // k^2
    bool invariant;
    long tangency;           // k^2 - k(1-d), non-invariant case
    long gsv_total;          // k(d+2) - k^2, invariant case
    long chi_smooth;         // 3k - k^2
};
GlobalRelations global_relations(const AffineFoliation& fol, long curve_degree, bool invariant);
GlobalRelations global_relations(long foliation_degree, long curve_degree, bool invariant);

// Vanishing order in t of c(t) where Y(gamma(t)) = c(t) gamma'(t) + O(t^N),
// for a smooth branch gamma = (x(t), y(t)) through p on an invariant curve.
long gsv_smooth_branch(const AffineFoliation& fol, const MultiPoly& f, const MultiPoly& branch_x,
                       const MultiPoly& branch_y, const Point& p, long order = 16);

}  // namespace pfol
