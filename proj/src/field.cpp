#include "pfol/field.hpp"

namespace pfol {

Rat make_rat(long num, long den) {
    if (den == 0) throw MathError("DivisionByZero", "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_rational_square(const Rat& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

FieldSpec FieldSpec::quadratic(const Rat& u, const Rat& v) {
    FieldSpec f;
    f.kind_ = FieldKind::Quadratic;
    f.u_ = u;
    f.v_ = v;
    if (is_rational_square(f.discriminant()))
        throw MathError("ReducibleMinimalPolynomial",
                        "t^2 - (" + rat_to_string(u) + ")*t - (" + rat_to_string(v) +
                            ") is reducible over Q");
    return f;
}

std::string FieldSpec::to_string() const {
    if (is_rationals()) return "Q";
    std::string s = "Q(t), t^2 = ";
    if (u_ != 0) s += rat_to_string(u_) + "*t + ";
    s += rat_to_string(v_);
    return s;
}

Scalar::Scalar(const FieldSpec& f, const Rat& a, const Rat& b) : field_(f), a_(a), b_(b) {
    if (f.is_rationals() && b != 0)
        throw MathError("FieldMismatch", "generator part in a rational scalar");
}

Scalar Scalar::generator(const FieldSpec& f) {
    if (!f.is_quadratic())
        throw MathError("FieldMismatch", "the rational field has no generator t");
    return Scalar(f, Rat(0), Rat(1));
}

const Rat& Scalar::as_rational() const {
    if (b_ != 0) throw MathError("FieldMismatch", "scalar is not rational: " + to_string());
    return a_;
}

const FieldSpec& Scalar::join(const Scalar& x, const Scalar& y) {
    if (x.field_ == y.field_) return x.field_;
    if (x.field_.is_rationals()) return y.field_;
    if (y.field_.is_rationals()) return x.field_;
    throw MathError("FieldMismatch", "scalars from distinct quadratic fields: " +
                                         x.field_.to_string() + " vs " + y.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(join(*this, o), a_ + o.a_, b_ + o.b_, nocheck_tag{});
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(join(*this, o), a_ - o.a_, b_ - o.b_, nocheck_tag{});
}

Scalar Scalar::operator*(const Scalar& o) const {
    const FieldSpec& f = join(*this, o);
    // (a1 + b1 t)(a2 + b2 t) with t^2 = u t + v
    Rat a = a_ * o.a_ + b_ * o.b_ * f.v();
    Rat b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_ * f.u();
    return Scalar(f, std::move(a), std::move(b), nocheck_tag{});
}

Scalar Scalar::conjugate() const {
    if (field_.is_rationals()) return *this;
    // a + b t  ->  (a + b u) - b t
    return Scalar(field_, a_ + b_ * field_.u(), -b_, nocheck_tag{});
}

Rat Scalar::norm() const {
    // (a + b t)(a + b(u - t)) = a^2 + a b u - b^2 v
    return a_ * a_ + a_ * b_ * field_.u() - b_ * b_ * field_.v();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("DivisionByZero", "inverse of zero scalar");
    if (b_ == 0) return Scalar(field_, 1 / a_, Rat(0), nocheck_tag{});
    Rat n = norm();  // nonzero by irreducibility of the minimal polynomial
    return Scalar(field_, (a_ + b_ * field_.u()) / n, -b_ / n, nocheck_tag{});
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result = Scalar::one(field_);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    if (b_ != 0 && !(field_ == o.field_))
        throw MathError("FieldMismatch", "comparing scalars from distinct quadratic fields");
    return true;
}

int Scalar::compare(const Scalar& x, const Scalar& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c;
    return cmp(x.b_, y.b_);
}

std::string Scalar::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    std::string s;
    if (a_ != 0) {
        s += rat_to_string(a_);
        if (b_ > 0) s += "+";
    }
    if (b_ == 1) {
        s += "t";
    } else if (b_ == -1) {
        s += "-t";
    } else {
        s += rat_to_string(b_) + "*t";
    }
    return s;
}

}  // namespace pfol
