#pragma once

#include <map>
#include <string>
#include <vector>

#include "hzeta/laurent.hpp"

namespace hzeta {

// Exact rational function: Laurent numerator over a multiset of binomial
// factors (1 - m)^k with m a non-trivial monomial.  Canonical form keeps
// every base monomial positive-leading (units absorbed into the numerator),
// merges repeated bases, divides out factors that divide the numerator
// exactly, and splits a factor (1 - u^2) into (1 - u) whenever the numerator
// carries the complementary (1 + u).
class RatFunc {
public:
    Poly num;
    std::map<Monomial, int> den;  // base -> multiplicity, factors (1 - base)

    RatFunc() : num(Poly::zero()) {}
    explicit RatFunc(Poly n) : num(std::move(n)) {}
    RatFunc(Poly n, std::map<Monomial, int> d) : num(std::move(n)), den(std::move(d)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly::one()); }
    static RatFunc from_poly(Poly p) {
        RatFunc r(std::move(p));
        r.canonicalize();
        return r;
    }
    // m / (1 - m)
    static RatFunc gp(const Monomial& m);
    // 1 / (1 - m)
    static RatFunc gpzero(const Monomial& m);

    bool is_zero() const { return num.is_zero(); }
    void canonicalize();

    std::string str() const;
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const Poly& b);
RatFunc rf_neg(const RatFunc& a);
// Deterministic balanced reduction of a list of summands.
RatFunc rf_sum(std::vector<RatFunc> terms);
bool rf_equal(const RatFunc& a, const RatFunc& b);
RatFunc rf_invert_vars(const RatFunc& a, const std::vector<int>& vars);

// Exact evaluation at a rational point; throws std::domain_error on a
// denominator zero.
Rat rf_evaluate(const RatFunc& a, const std::map<int, Rat>& point);

// Exact truncation of the power-series expansion in t.  coeff(k) is the
// coefficient of t^k, a Laurent polynomial in p.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c_(order + 1, Poly::zero()) {}

    int order() const { return (int)c_.size() - 1; }
    const Poly& coeff(int k) const { return c_.at(k); }
    Poly& coeff(int k) { return c_.at(k); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::vector<Rat> evaluate_p(const Rat& p) const;

private:
    std::vector<Poly> c_;
};

// Requires every denominator factor to involve only p, t with positive
// t-exponent (a t-free factor is first divided into the numerator when that
// is exact), and the numerator to be t- and p-supported with non-negative
// t-exponents.  Throws std::domain_error otherwise.
TruncatedSeries rf_series(const RatFunc& a, int order);

// Machine-readable form: coefficients as decimal strings, variables by name.
std::string rf_to_json(const RatFunc& a, int indent = -1);
std::string rf_to_latex(const RatFunc& a);
std::string poly_to_latex(const Poly& p);

}  // namespace hzeta
