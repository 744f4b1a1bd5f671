#pragma once

#include "hzeta/ratfunc.hpp"

namespace hzeta {

// Claimed identity F(p^{-1}, t^{-1}) = (-1)^a p^b t^c F(p, t).
struct SymmetryData {
    long a = 0;  // sign exponent
    long b = 0;  // p exponent
    long c = 0;  // t exponent

    bool operator==(const SymmetryData& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool check_funceq(const RatFunc& F, const SymmetryData& sym);

// (3n, binom(3n,2), 5n)
SymmetryData expected_symmetry_unramified(int n);
// (g+n, (5n^2-n)/2, 5n)
SymmetryData expected_symmetry_DwA(int n, int g);

// Compose two symmetry factors (the data add componentwise).
SymmetryData compose(const SymmetryData& x, const SymmetryData& y);

}  // namespace hzeta
