#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfol/field.hpp"

namespace pfol {

// The variable universe, in canonical order x > y > alpha > t.
// x, y are the affine chart coordinates, alpha the pencil parameter and t a
// curve/branch parameter. The field generator prints as "t" as well but is a
// scalar, not a variable.
enum class Var : std::uint8_t { X = 0, Y = 1, Alpha = 2, T = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::Y, Var::Alpha, Var::T};

const char* var_name(Var v);

struct Monomial {
    std::array<std::uint32_t, kNumVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(Var v, std::uint32_t k = 1) {
        Monomial m;
        m.e[static_cast<int>(v)] = k;
        return m;
    }

    std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    std::uint32_t& operator[](Var v) { return e[static_cast<int>(v)]; }

    std::uint64_t total_degree() const {
        std::uint64_t s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool is_one() const { return total_degree() == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded lexicographic, x > y > alpha > t; "greater" so that map iteration
// yields the leading term first
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;  // lexicographic on (x, y, alpha, t)
    }
};

// Sparse multivariate polynomial over a fixed coefficient field.
// Invariants: no zero coefficients are stored; all coefficients share the
// polynomial's field; iteration order (and printing) is graded-lex descending.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLexGreater>;

    explicit MultiPoly(const FieldSpec& f = FieldSpec()) : field_(f) {}

    static MultiPoly zero(const FieldSpec& f) { return MultiPoly(f); }
    static MultiPoly constant(const Scalar& c);
    static MultiPoly constant(const FieldSpec& f, long n) { return constant(Scalar::of(f, n)); }
    static MultiPoly variable(const FieldSpec& f, Var v);
    static MultiPoly term(const Scalar& c, const Monomial& m);

    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    // constant term (zero scalar if absent)
    Scalar constant_term() const;
    // the value of a constant polynomial
    Scalar as_constant() const;

    // total degree; -1 for the zero polynomial
    long degree() const;
    long degree_in(Var v) const;
    bool depends_on(Var v) const { return degree_in(v) > 0; }
    std::vector<Var> support_vars() const;

    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    // leading coefficient as a polynomial in `v`, i.e. the coefficient of
    // v^{deg_v}
    MultiPoly leading_coefficient_in(Var v) const;
    // decomposition sum_k coeff[k] * v^k
    std::map<long, MultiPoly> coefficients_in(Var v) const;
    MultiPoly coefficient_of(Var v, long k) const;

    Scalar coefficient(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(long n) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(Var v) const;
    Scalar evaluate(const Scalar& x, const Scalar& y) const;
    Scalar evaluate_full(const std::array<Scalar, kNumVars>& values) const;
    MultiPoly substitute(Var v, const Scalar& value) const;
    MultiPoly substitute(Var v, const MultiPoly& value) const;
    // simultaneous substitution x -> xv, y -> yv (map composition)
    MultiPoly substitute_xy(const MultiPoly& xv, const MultiPoly& yv) const;
    // drop every term of t-degree >= order (power series truncation)
    MultiPoly truncate_in(Var v, long order) const;

    // divide by the leading coefficient
    MultiPoly monic() const;
    // lift/embed into another field (Q into Q(t), or identical field)
    MultiPoly lift_to(const FieldSpec& f) const;

    void add_term(const Monomial& m, const Scalar& c);

    std::string to_string() const;

private:
    static const FieldSpec& join(const MultiPoly& a, const MultiPoly& b);

    FieldSpec field_;
    TermMap terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p * c; }

}  // namespace pfol
