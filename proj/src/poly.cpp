#include "pfol/poly.hpp"

#include <algorithm>

namespace pfol {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "x";
        case Var::Y: return "y";
        case Var::Alpha: return "alpha";
        case Var::T: return "t";
    }
    return "?";
}

MultiPoly MultiPoly::constant(const Scalar& c) {
    MultiPoly p(c.field());
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldSpec& f, Var v) {
    MultiPoly p(f);
    p.terms_.emplace(Monomial::var(v), Scalar::one(f));
    return p;
}

MultiPoly MultiPoly::term(const Scalar& c, const Monomial& m) {
    MultiPoly p(c.field());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Scalar MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar MultiPoly::as_constant() const {
    if (!is_constant())
        throw MathError("NotAConstant", "polynomial is not constant: " + to_string());
    return constant_term();
}

long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.begin()->first.total_degree());
}

long MultiPoly::degree_in(Var v) const {
    long d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[v]));
    return d;
}

std::vector<Var> MultiPoly::support_vars() const {
    std::vector<Var> out;
    for (Var v : kAllVars)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw MathError("ZeroPolynomial", "leading monomial of zero");
    return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw MathError("ZeroPolynomial", "leading coefficient of zero");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::leading_coefficient_in(Var v) const {
    return coefficient_of(v, degree_in(v));
}

std::map<long, MultiPoly> MultiPoly::coefficients_in(Var v) const {
    std::map<long, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
        long k = static_cast<long>(m[v]);
        Monomial rest = m;
        rest[v] = 0;
        auto [it, inserted] = out.try_emplace(k, field_);
        it->second.add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of(Var v, long k) const {
    MultiPoly out(field_);
    if (k < 0) return out;
    for (const auto& [m, c] : terms_) {
        if (static_cast<long>(m[v]) == k) {
            Monomial rest = m;
            rest[v] = 0;
            out.add_term(rest, c);
        }
    }
    return out;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const FieldSpec& MultiPoly::join(const MultiPoly& a, const MultiPoly& b) {
    if (a.field_ == b.field_) return a.field_;
    if (a.field_.is_rationals()) return b.field_;
    if (b.field_.is_rationals()) return a.field_;
    throw MathError("FieldMismatch", "polynomials over distinct quadratic fields");
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(join(*this, o));
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(join(*this, o));
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(join(*this, o));
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly(field_);
    MultiPoly r(field_);
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(long n) const {
    if (n < 0) throw MathError("NegativeExponent", "polynomial power with negative exponent");
    MultiPoly result = MultiPoly::constant(Scalar::one(field_));
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        if (n >>= 1) base *= base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r(field_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t k = m[v];
        if (k == 0) continue;
        Monomial d = m;
        d[v] = k - 1;
        r.add_term(d, c * Scalar::of(field_, static_cast<long>(k)));
    }
    return r;
}

Scalar MultiPoly::evaluate(const Scalar& x, const Scalar& y) const {
    std::array<Scalar, kNumVars> values{x, y, Scalar::zero(field_), Scalar::zero(field_)};
    for (const auto& [m, c] : terms_)
        if (m[Var::Alpha] > 0 || m[Var::T] > 0)
            throw MathError("UnboundVariable",
                            "evaluate(x, y) on a polynomial involving alpha or t");
    return evaluate_full(values);
}

Scalar MultiPoly::evaluate_full(const std::array<Scalar, kNumVars>& values) const {
    Scalar acc = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0) term *= values[i].pow(m.e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(Var v, const Scalar& value) const {
    return substitute(v, MultiPoly::constant(value));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    // substitution of an absent variable is a no-op by construction
    MultiPoly r(join(*this, value));
    // cache powers of the replacement
    std::map<std::uint32_t, MultiPoly> powers;
    for (const auto& [m, c] : terms_) {
        std::uint32_t k = m[v];
        Monomial rest = m;
        rest[v] = 0;
        if (k == 0) {
            r.add_term(rest, c);
            continue;
        }
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        r += MultiPoly::term(c, rest) * it->second;
    }
    return r;
}

MultiPoly MultiPoly::substitute_xy(const MultiPoly& xv, const MultiPoly& yv) const {
    MultiPoly r(join(*this, xv));
    std::map<std::uint32_t, MultiPoly> xpow, ypow;
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        if (m[Var::X] > 0) {
            auto it = xpow.find(m[Var::X]);
            if (it == xpow.end()) it = xpow.emplace(m[Var::X], xv.pow(m[Var::X])).first;
            term *= it->second;
        }
        if (m[Var::Y] > 0) {
            auto it = ypow.find(m[Var::Y]);
            if (it == ypow.end()) it = ypow.emplace(m[Var::Y], yv.pow(m[Var::Y])).first;
            term *= it->second;
        }
        Monomial rest = m;
        rest[Var::X] = 0;
        rest[Var::Y] = 0;
        if (!rest.is_one()) term *= MultiPoly::term(Scalar::one(field_), rest);
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::truncate_in(Var v, long order) const {
    MultiPoly r(field_);
    for (const auto& [m, c] : terms_)
        if (static_cast<long>(m[v]) < order) r.terms_.emplace(m, c);
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
}

MultiPoly MultiPoly::lift_to(const FieldSpec& f) const {
    if (field_ == f) return *this;
    if (!field_.is_rationals())
        throw MathError("FieldMismatch", "can only lift from Q into a quadratic field");
    MultiPoly r(f);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, Scalar(f, c.rational_part(), Rat(0)));
    return r;
}

}  // namespace pfol
