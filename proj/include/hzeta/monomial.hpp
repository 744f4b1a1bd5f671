#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/arith.hpp"

namespace hzeta {

// A Laurent monomial: finitely many variables with nonzero integer exponents,
// kept sorted by variable id.  The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(int id, int exp = 1) {
        Monomial m;
        if (exp != 0) m.e_.emplace_back(id, exp);
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<int, int>>& exps() const { return e_; }

    int exponent(int id) const {
        for (const auto& [v, e] : e_)
            if (v == id) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    // Negates the exponents of the listed variables only.
    Monomial invert_vars(const std::vector<int>& vars) const;
    Monomial pow(int k) const;

    bool all_exponents_even() const {
        for (const auto& [v, e] : e_)
            if (e % 2 != 0) return false;
        return true;
    }
    // Halves every exponent; caller must check all_exponents_even().
    Monomial half() const;

    // True when all variables are among `allowed`.
    bool uses_only(std::initializer_list<int> allowed) const;

    // Total order: variables compared in id order (p most significant), the
    // larger exponent at the first differing variable wins.  The empty
    // monomial compares below any monomial whose leading exponent is positive.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // Sign of the first nonzero exponent in variable order; 0 for the empty
    // monomial.  Positive-leading monomials are the canonical bases of
    // denominator factors.
    int leading_sign() const {
        if (e_.empty()) return 0;
        return e_.front().second > 0 ? 1 : -1;
    }

    Rat evaluate(const std::map<int, Rat>& point) const;

    std::string str() const;

private:
    std::vector<std::pair<int, int>> e_;
};

}  // namespace hzeta
