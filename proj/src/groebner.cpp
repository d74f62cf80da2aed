#include <algorithm>
#include <deque>

#include "pfol/ideals.hpp"

namespace pfol {

bool GrevLexOrder::greater(const Monomial& a, const Monomial& b) const {
    long da = 0, db = 0;
    for (Var v : vars) {
        da += a[v];
        db += b[v];
    }
    if (da != db) return da > db;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        long d = static_cast<long>(a[*it]) - static_cast<long>(b[*it]);
        if (d != 0) return d < 0;
    }
    return false;
}

namespace {

Monomial leading_monomial(const MultiPoly& p, const GrevLexOrder& order) {
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.greater(it->first, best)) best = it->first;
    return best;
}

Scalar coefficient_at(const MultiPoly& p, const Monomial& m) { return p.coefficient(m); }

// full normal form of p modulo the (not necessarily reduced) basis
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                      const std::vector<Monomial>& lms, const GrevLexOrder& order) {
    MultiPoly rem(p.field());
    while (!p.is_zero()) {
        Monomial lm = leading_monomial(p, order);
        Scalar lc = coefficient_at(p, lm);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (lms[i].divides(lm)) {
                Scalar factor = lc / coefficient_at(basis[i], lms[i]);
                p -= MultiPoly::term(factor, lm / lms[i]) * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::term(lc, lm);
            rem += t;
            p -= t;
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, std::vector<Var> vars) {
    if (generators.empty())
        throw MathError("EmptyGeneratorList", "Buchberger requires at least one generator");
    GrevLexOrder order(std::move(vars));

    std::vector<MultiPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        for (Var v : g.support_vars())
            if (std::find(order.vars.begin(), order.vars.end(), v) == order.vars.end())
                throw MathError("ForeignVariable", "generator uses a variable outside the ring: " +
                                                       g.to_string());
        basis.push_back(g);
    }
    GroebnerBasis out{{}, order};
    if (basis.empty()) return out;

    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(leading_monomial(g, order));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Monomial lcm = lms[i].lcm(lms[j]);
        if (lcm == lms[i] * lms[j]) continue;  // coprime leading monomials
        const FieldSpec& field = basis[i].field();
        MultiPoly spoly =
            MultiPoly::term(coefficient_at(basis[i], lms[i]).inverse(), lcm / lms[i]) * basis[i] -
            MultiPoly::term(coefficient_at(basis[j], lms[j]).inverse(), lcm / lms[j]) * basis[j];
        (void)field;
        MultiPoly nf = normal_form(std::move(spoly), basis, lms, order);
        if (nf.is_zero()) continue;
        basis.push_back(nf);
        lms.push_back(leading_monomial(nf, order));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // reduce: drop elements whose leading monomial another one divides, then
    // put every element in normal form with respect to the rest
    std::vector<MultiPoly> reduced;
    std::vector<Monomial> reduced_lms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            reduced.push_back(basis[i]);
            reduced_lms.push_back(lms[i]);
        }
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<MultiPoly> others;
        std::vector<Monomial> other_lms;
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            if (j == i) continue;
            others.push_back(reduced[j]);
            other_lms.push_back(reduced_lms[j]);
        }
        if (!others.empty()) reduced[i] = normal_form(reduced[i], others, other_lms, order);
        Scalar lc = coefficient_at(reduced[i], reduced_lms[i]);
        reduced[i] = reduced[i] * lc.inverse();
    }
    std::vector<std::size_t> perm(reduced.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order.greater(reduced_lms[a], reduced_lms[b]);
    });
    for (std::size_t i : perm) out.polys.push_back(reduced[i]);
    return out;
}

Multiplicity quotient_dimension(const GroebnerBasis& basis) {
    if (basis.polys.empty()) return Multiplicity::inf();  // the zero ideal
    std::vector<Monomial> lms;
    for (const auto& g : basis.polys) {
        lms.push_back(leading_monomial(g, basis.order));
        if (lms.back().is_one()) return Multiplicity::of(0);  // unit ideal
    }
    const auto& vars = basis.order.vars;
    // bound in each variable: the least pure power among leading monomials
    std::vector<long> bound(vars.size(), -1);
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
        for (const auto& m : lms) {
            bool pure = true;
            for (std::size_t wi = 0; wi < vars.size(); ++wi)
                if (wi != vi && m[vars[wi]] > 0) pure = false;
            if (!pure) continue;
            long k = m[vars[vi]];
            if (bound[vi] < 0 || k < bound[vi]) bound[vi] = k;
        }
        if (bound[vi] < 0) return Multiplicity::inf();
    }
    // count monomials below the bounds not divisible by any leading monomial
    long count = 0;
    Monomial probe;
    auto rec = [&](auto&& self, std::size_t vi) -> void {
        if (vi == vars.size()) {
            for (const auto& m : lms)
                if (m.divides(probe)) return;
            ++count;
            return;
        }
        for (long k = 0; k < bound[vi]; ++k) {
            probe[vars[vi]] = static_cast<std::uint32_t>(k);
            self(self, vi + 1);
        }
        probe[vars[vi]] = 0;
    };
    rec(rec, 0);
    return Multiplicity::of(count);
}

}  // namespace pfol
