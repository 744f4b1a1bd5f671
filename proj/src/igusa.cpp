#include "hzeta/igusa.hpp"

#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

Poly specialize_multinomial(int h, Subset I, YSpec y) {
    switch (y) {
        case YSpec::One:
            return Poly::constant(Rat(multinomial_at_one(h, I)));
        case YSpec::Symbolic:
            return gaussian_multinomial(h, I);
        case YSpec::PInverse:
            return gaussian_multinomial(h, I).subst_monomial(var_Y(), Monomial::var(var_p(), -1));
    }
    throw std::logic_error("specialize_multinomial: bad YSpec");
}

namespace {

// sum over I of binom(h,I)_Y prod_{i in I} X_i prod_{i in [h-1] \ I} (1 - X_i),
// the numerator over the common denominator prod_{i in [h-1]} (1 - X_i).
Poly igusa_core_numerator(int h, YSpec y, const std::vector<Monomial>& X) {
    Subset full = h >= 1 ? (1u << (h - 1)) - 1 : 0;
    Poly acc = Poly::zero();
    for (Subset I = 0;; ++I) {
        if ((I & ~full) == 0) {
            Poly term = specialize_multinomial(h, I, y);
            for (int i = 1; i <= h - 1; ++i) {
                if (I & (1u << (i - 1))) {
                    term = term.scaled(X[i - 1], 1);
                } else {
                    Poly f = Poly::one();
                    f.add_term(X[i - 1], -1);
                    term *= f;
                }
            }
            acc += term;
        }
        if (I == full) break;
    }
    return acc;
}

}  // namespace

RatFunc igusa_I(int h, YSpec y, const std::vector<Monomial>& X) {
    if ((int)X.size() != h || h < 1) throw std::invalid_argument("igusa_I: need h >= 1 monomials");
    RatFunc r(igusa_core_numerator(h, y, X));
    for (int i = 1; i <= h; ++i) r.den[X[i - 1]] += 1;
    r.canonicalize();
    return r;
}

RatFunc igusa_I_circ(int h, YSpec y, const std::vector<Monomial>& X) {
    if ((int)X.size() != h || h < 1) throw std::invalid_argument("igusa_I_circ: need h >= 1 monomials");
    RatFunc r(igusa_core_numerator(h, y, X).scaled(X[h - 1], 1));
    for (int i = 1; i <= h; ++i) r.den[X[i - 1]] += 1;
    r.canonicalize();
    return r;
}

RatFunc igusa_wo(int h, const std::map<Subset, Monomial>& X) {
    if (h < 1) throw std::invalid_argument("igusa_wo: h >= 1 required");
    Subset full = (1u << h) - 1;
    for (Subset s = 1; s <= full; ++s)
        if (!X.count(s)) throw std::invalid_argument("igusa_wo: missing variable for subset " + subset_name(s));

    // g(S) = sum over chains with largest element S of prod_{I in chain} X_I/(1-X_I)
    //      = gp(X_S) * (1 + sum_{T proper nonempty subset of S} g(T)),
    // accumulated over subsets in increasing popcount order.
    std::map<Subset, RatFunc> g;
    std::vector<Subset> order;
    for (Subset s = 1; s < full; ++s) order.push_back(s);
    std::sort(order.begin(), order.end(), [](Subset a, Subset b) {
        int ca = subset_size(a), cb = subset_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    for (Subset s : order) {
        std::vector<RatFunc> parts{RatFunc::one()};
        for (Subset t = (s - 1) & s; t != 0; t = (t - 1) & s)
            if (g.count(t)) parts.push_back(g[t]);
        g[s] = rf_mul(RatFunc::gp(X.at(s)), rf_sum(std::move(parts)));
    }
    std::vector<RatFunc> total{RatFunc::one()};
    for (Subset s : order) total.push_back(g[s]);
    return rf_mul(RatFunc::gpzero(X.at(full)), rf_sum(std::move(total)));
}

std::vector<Monomial> symbolic_X(int h) {
    std::vector<Monomial> X;
    for (int i = 1; i <= h; ++i) X.push_back(Monomial::var(var_X(i)));
    return X;
}

std::map<Subset, Monomial> symbolic_X_subsets(int h) {
    std::map<Subset, Monomial> X;
    for (Subset s = 1; s < (1u << h); ++s) X[s] = Monomial::var(var_X_subset(s));
    return X;
}

}  // namespace hzeta
