#include "pfol/rational_function.hpp"

namespace pfol {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("DivisionByZero", "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(Scalar::one(den_.field()));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = gcd_multivariate(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Scalar lc = den_.leading_coefficient().inverse();
    num_ = num_ * lc;
    den_ = den_ * lc;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(field());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw MathError("DivisionByZero", "division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative(Var v) const {
    return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

Scalar RationalFunction::evaluate(const Scalar& x, const Scalar& y) const {
    Scalar d = den_.evaluate(x, y);
    if (d.is_zero()) throw MathError("PoleAtPoint", "denominator vanishes at the point");
    return num_.evaluate(x, y) / d;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial() && den_.as_constant().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace pfol
