#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "pfol/errors.hpp"

namespace pfol {

// Arbitrary-precision rational, stored canonically (lowest terms, positive
// denominator). mpq_class maintains this as long as values are built through
// the helpers below.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
bool is_rational_square(const Rat& r);
std::string rat_to_string(const Rat& r);

enum class FieldKind : std::uint8_t { Rationals, Quadratic };

// Coefficient field: either Q or a quadratic extension Q(t) with
// t^2 = u*t + v. The minimal polynomial must be irreducible over Q,
// i.e. u^2 + 4v is not a rational square.
class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::Rationals), u_(0), v_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec quadratic(const Rat& u, const Rat& v);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_quadratic() const { return kind_ == FieldKind::Quadratic; }

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }

    // discriminant of the generator: u^2 + 4v
    Rat discriminant() const { return u_ * u_ + 4 * v_; }
    bool imaginary() const { return is_quadratic() && discriminant() < 0; }

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && u_ == o.u_ && v_ == o.v_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldKind kind_;
    Rat u_, v_;
};

// Element a + b*t of the field given by its FieldSpec (b = 0 over Q).
// Values are immutable in spirit: all operations return new scalars.
// The rationals embed canonically into any quadratic extension, so mixing a
// Rationals-tagged scalar with a quadratic one promotes the former; two
// distinct quadratic specs never mix (FieldMismatch).
class Scalar {
public:
    Scalar() : field_(), a_(0), b_(0) {}
    explicit Scalar(const Rat& a) : field_(), a_(a), b_(0) {}
    explicit Scalar(long n) : field_(), a_(n), b_(0) {}
    Scalar(const FieldSpec& f, const Rat& a, const Rat& b);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, Rat(0), Rat(0)); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, Rat(1), Rat(0)); }
    static Scalar of(const FieldSpec& f, const Rat& a) { return Scalar(f, a, Rat(0)); }
    static Scalar of(const FieldSpec& f, long n) { return Scalar(f, Rat(n), Rat(0)); }
    // the generator t itself (requires a quadratic field)
    static Scalar generator(const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    const Rat& rational_part() const { return a_; }
    const Rat& generator_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    // lies in Q (regardless of the carrier field)
    bool is_rational() const { return b_ == 0; }
    // for elements known to be rational
    const Rat& as_rational() const;

    Scalar operator-() const { return Scalar(field_, -a_, -b_, nocheck_tag{}); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    // conjugate over Q: t -> u - t
    Scalar conjugate() const;
    // norm over Q: s * conj(s), a rational number
    Rat norm() const;
    Scalar inverse() const;
    Scalar pow(long n) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // deterministic (non-arithmetic) ordering, for canonical sorting
    static int compare(const Scalar& x, const Scalar& y);

    std::string to_string() const;

private:
    struct nocheck_tag {};
    Scalar(const FieldSpec& f, Rat a, Rat b, nocheck_tag)
        : field_(f), a_(std::move(a)), b_(std::move(b)) {}

    // returns the common field, promoting Q into a quadratic extension
    static const FieldSpec& join(const Scalar& x, const Scalar& y);

    FieldSpec field_;
    Rat a_, b_;
};

}  // namespace pfol
