#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hzeta/arith.hpp"
#include "hzeta/monomial.hpp"

namespace hzeta {

// Sparse Laurent polynomial with exact rational coefficients.  Terms with
// coefficient zero are never stored.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(1); }
    static Poly constant(const Rat& c);
    static Poly monomial(const Monomial& m, const Rat& c = 1);
    static Poly var(int id, int exp = 1, const Rat& c = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rat>& terms() const { return t_; }

    void add_term(const Monomial& m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return t_ != o.t_; }

    // Multiply every term by c * m.
    Poly scaled(const Monomial& m, const Rat& c) const;
    Poly scaled(const Rat& c) const;

    // Exact division by (1 - sign*m), sign = +1 or -1, m != 1.  Returns
    // nullopt when the division is not exact.
    std::optional<Poly> divide_binomial(const Monomial& m, int sign) const;

    Poly invert_vars(const std::vector<int>& vars) const;
    // Substitute variable -> monomial (exponents compose; negative fine).
    Poly subst_monomial(int var, const Monomial& m) const;
    // Substitute variable -> rational constant (requires exponents >= 0 or c != 0).
    Poly subst_value(int var, const Rat& c) const;

    bool has_var(int var) const;
    std::set<int> vars() const;
    int min_exp(int var) const;  // 0 for the zero polynomial
    int max_exp(int var) const;

    // All exponents of every variable non-negative.
    bool is_polynomial() const;
    bool coefficients_integral() const;
    bool coefficients_nonnegative() const;

    Rat evaluate(const std::map<int, Rat>& point) const;

    // Greatest term in monomial order.
    const std::pair<const Monomial, Rat>& leading() const;

    std::string str() const;

private:
    std::map<Monomial, Rat> t_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

}  // namespace hzeta
