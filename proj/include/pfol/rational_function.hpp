#pragma once

#include "pfol/polyfn.hpp"

namespace pfol {

// Quotient of multivariate polynomials, kept reduced (numerator and
// denominator coprime) with a monic denominator.
class RationalFunction {
public:
    explicit RationalFunction(const FieldSpec& f = FieldSpec())
        : num_(MultiPoly::zero(f)), den_(MultiPoly::constant(Scalar::one(f))) {}
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction from_poly(const MultiPoly& p) {
        return RationalFunction(p, MultiPoly::constant(Scalar::one(p.field())));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const FieldSpec& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(Var v) const;
    Scalar evaluate(const Scalar& x, const Scalar& y) const;

    std::string to_string() const;

private:
    MultiPoly num_, den_;
};

}  // namespace pfol
