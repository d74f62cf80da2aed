#include <algorithm>
#include <map>

#include "pfol/ideals.hpp"

namespace pfol {

namespace {

using Int = mpz_class;

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n odd composite, no small factors
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, long>& out) {
    if (n <= 1) return;
    for (Int p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> divisors(const Int& n) {
    std::map<Int, long> factors;
    factor_into(n < 0 ? Int(-n) : n, factors);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// coefficients of f in v, as canonical rationals; f over Q
std::map<long, Rat> rational_coefficients(const MultiPoly& f, Var v) {
    std::map<long, Rat> out;
    for (const auto& [m, c] : f.terms()) out[m[v]] = c.rational_part();
    return out;
}

std::vector<Scalar> rational_roots_q(const MultiPoly& f, Var v) {
    std::vector<Scalar> roots;
    auto coeffs = rational_coefficients(f, v);
    long low = coeffs.begin()->first;
    long deg = coeffs.rbegin()->first;
    if (low > 0) roots.push_back(Scalar(Rat(0)));
    if (deg == low) return roots;  // monomial

    // primitive integer coefficients of f / v^low
    Int den_lcm = 1;
    for (const auto& [k, c] : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::map<long, Int> ic;
    for (const auto& [k, c] : coeffs) ic[k - low] = Int(c * Rat(den_lcm));
    Int trailing = ic.begin()->second;
    Int leading = ic.rbegin()->second;

    auto eval = [&](const Rat& x) {
        Rat acc = 0;
        long prev = deg - low;
        for (auto it = ic.rbegin(); it != ic.rend(); ++it) {
            for (long i = it->first; i < prev; ++i) acc *= x;
            acc += Rat(it->second);
            prev = it->first;
        }
        for (long i = 0; i < prev; ++i) acc *= x;
        return acc;
    };

    for (const Int& p : divisors(trailing)) {
        for (const Int& q : divisors(leading)) {
            Rat cand(p, q);
            cand.canonicalize();
            if (eval(cand) == 0) roots.push_back(Scalar(cand));
            cand = Rat(-p, q);
            cand.canonicalize();
            if (eval(cand) == 0) roots.push_back(Scalar(cand));
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// f(c + d t) = A(c, d) + B(c, d) t with A, B over Q (c, d in the x, y slots)
std::pair<MultiPoly, MultiPoly> generator_substitution(const MultiPoly& f, Var v) {
    const FieldSpec& K = f.field();
    const FieldSpec Q = FieldSpec::rationals();
    const Rat u = K.u();
    const Rat w = K.v();
    MultiPoly c = MultiPoly::variable(Q, Var::X);
    MultiPoly d = MultiPoly::variable(Q, Var::Y);
    long deg = f.degree_in(v);
    // powers (c + d t)^k = P[k] + Q[k] t
    std::vector<MultiPoly> P{MultiPoly::constant(Q, 1)}, R{MultiPoly::zero(Q)};
    for (long k = 1; k <= deg; ++k) {
        P.push_back(P[k - 1] * c + R[k - 1] * d * Scalar(w));
        R.push_back(P[k - 1] * d + R[k - 1] * c + R[k - 1] * d * Scalar(u));
    }
    MultiPoly A = MultiPoly::zero(Q);
    MultiPoly B = MultiPoly::zero(Q);
    for (const auto& [m, s] : f.terms()) {
        long k = m[v];
        MultiPoly a = MultiPoly::constant(Scalar(s.rational_part()));
        MultiPoly b = MultiPoly::constant(Scalar(s.generator_part()));
        A += a * P[k] + b * R[k] * Scalar(w);
        B += a * R[k] + b * P[k] + b * R[k] * Scalar(u);
    }
    return {A, B};
}

void require_univariate(const MultiPoly& f, Var v) {
    if (f.is_zero()) throw MathError("ZeroPolynomial", "root finding on the zero polynomial");
    for (Var w : f.support_vars())
        if (w != v)
            throw MathError("NotUnivariate", "polynomial is not univariate in " +
                                                 std::string(var_name(v)) + ": " + f.to_string());
}

}  // namespace

std::vector<Scalar> rational_roots(const MultiPoly& f, Var v) {
    require_univariate(f, v);
    if (f.degree_in(v) <= 0) return {};
    if (f.field().is_rationals()) return rational_roots_q(f, v);

    auto [A, B] = generator_substitution(f, v);
    // For nonzero f both components are nonzero and coprime: a shared curve
    // would hand f infinitely many roots.
    if (A.is_zero() || B.is_zero())
        throw MathError("InternalError", "degenerate generator substitution for " + f.to_string());
    std::vector<Point> sols = common_zeros_krational(A, B);
    std::vector<Scalar> roots;
    const FieldSpec& K = f.field();
    for (const Point& s : sols) {
        Scalar root = Scalar(K, s.x.rational_part(), s.y.rational_part());
        // exact verification
        if (f.substitute(v, root).is_zero()) roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::pair<Scalar, long>> roots_with_multiplicity(const MultiPoly& f, Var v) {
    std::vector<std::pair<Scalar, long>> out;
    for (const Scalar& r : rational_roots(f, v)) {
        MultiPoly linear = MultiPoly::variable(f.field(), v) - MultiPoly::constant(r);
        long mult = 0;
        MultiPoly rest = f;
        while (true) {
            auto q = try_divide_exact(rest, linear);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

std::optional<int> root_of_unity_order(const Scalar& s) {
    if (s.is_zero()) throw MathError("ZeroScalar", "root-of-unity test on zero");
    const Scalar one = Scalar::one(s.field());
    if (s == one) return 1;
    if (s == -one) return 2;
    Scalar sq = s * s;
    if ((sq + s + one).is_zero()) return 3;
    if ((sq + one).is_zero()) return 4;
    if ((sq - s + one).is_zero()) return 6;
    return std::nullopt;
}

std::vector<Point> common_zeros_krational(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) {
        const MultiPoly& other = f.is_zero() ? g : f;
        if (other.is_constant() && !other.is_zero()) return {};
        throw MathError("NonIsolatedZeros", "a zero polynomial has a non-isolated zero set");
    }
    if (f.is_constant() && g.is_constant()) return {};
    if (!f.is_constant() && !g.is_constant()) {
        MultiPoly h = gcd_multivariate(f, g);
        if (!h.is_constant())
            throw MathError("NonIsolatedZeros",
                            "curves share the component " + h.to_string());
    }
    const FieldSpec& K = f.field();
    std::vector<Point> out;

    auto roots_in_y_at = [&](const Scalar& x0) -> std::vector<Scalar> {
        MultiPoly fy = f.substitute(Var::X, x0);
        MultiPoly gy = g.substitute(Var::X, x0);
        if (fy.is_zero() && gy.is_zero())
            throw MathError("InternalError", "common line escaped the gcd check");
        std::vector<Scalar> ys;
        if (fy.is_zero() || gy.is_zero()) {
            const MultiPoly& h = fy.is_zero() ? gy : fy;
            if (h.is_constant()) return {};
            ys = rational_roots(h, Var::Y);
        } else if (fy.is_constant() || gy.is_constant()) {
            return {};
        } else {
            MultiPoly h = gcd_multivariate(fy, gy);
            if (h.is_constant()) return {};
            ys = rational_roots(h, Var::Y);
        }
        return ys;
    };

    long fy = f.degree_in(Var::Y), gy = g.degree_in(Var::Y);
    std::vector<Scalar> xs;
    if (fy > 0 && gy > 0) {
        MultiPoly r = resultant(f, g, Var::Y);
        if (r.is_zero())
            throw MathError("InternalError", "vanishing resultant despite coprime inputs");
        if (r.is_constant()) return {};
        xs = rational_roots(r, Var::X);
    } else {
        // one of them involves only x; its x-roots carry all common zeros
        const MultiPoly& xonly = fy <= 0 ? f : g;
        if (xonly.is_constant()) return {};
        if (xonly.degree_in(Var::X) <= 0) return {};
        xs = rational_roots(xonly, Var::X);
    }
    for (const Scalar& x0 : xs)
        for (const Scalar& y0 : roots_in_y_at(x0))
            if (f.evaluate(x0, y0).is_zero() && g.evaluate(x0, y0).is_zero())
                out.emplace_back(x0, y0);
    return out;
}

}  // namespace pfol
