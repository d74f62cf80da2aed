#pragma once

#include <random>

#include "pfol/polyfn.hpp"

namespace pfoltest {

using namespace pfol;

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng);
    }

    Scalar scalar(const FieldSpec& f, long range = 9) {
        Rat a = make_rat(pick(-range, range));
        if (f.is_rationals()) return Scalar::of(f, a);
        return Scalar(f, a, make_rat(pick(-range, range)));
    }

    Scalar rational_scalar(const FieldSpec& f, long range = 9, long maxden = 3) {
        return Scalar::of(f, make_rat(pick(-range, range), pick(1, maxden)));
    }

    // random polynomial in x, y of total degree <= maxdeg
    MultiPoly poly(const FieldSpec& f, int maxdeg, int terms, long range = 9,
                   bool quadratic_coeffs = false) {
        MultiPoly p(f);
        for (int i = 0; i < terms; ++i) {
            long dx = pick(0, maxdeg);
            long dy = pick(0, maxdeg - dx);
            Monomial m;
            m[Var::X] = static_cast<std::uint32_t>(dx);
            m[Var::Y] = static_cast<std::uint32_t>(dy);
            Scalar c = quadratic_coeffs ? scalar(f, range) : Scalar::of(f, make_rat(pick(-range, range)));
            p += MultiPoly::term(c, m);
        }
        return p;
    }

    MultiPoly nonzero_poly(const FieldSpec& f, int maxdeg, int terms, long range = 9,
                           bool quadratic_coeffs = false) {
        while (true) {
            MultiPoly p = poly(f, maxdeg, terms, range, quadratic_coeffs);
            if (!p.is_zero()) return p;
        }
    }
};

}  // namespace pfoltest
