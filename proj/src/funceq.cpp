#include "hzeta/funceq.hpp"

#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

bool check_funceq(const RatFunc& F, const SymmetryData& sym) {
    if (F.is_zero()) throw std::invalid_argument("check_funceq: F must be nonzero");
    RatFunc lhs = rf_invert_vars(F, {var_p(), var_t()});
    Monomial m = Monomial::var(var_p(), (int)sym.b) * Monomial::var(var_t(), (int)sym.c);
    Rat sign = (sym.a % 2 == 0) ? 1 : -1;
    RatFunc rhs = rf_mul(F, Poly::monomial(m, sign));
    return rf_equal(lhs, rhs);
}

SymmetryData expected_symmetry_unramified(int n) {
    if (n < 1) throw std::invalid_argument("expected_symmetry_unramified: n >= 1");
    return SymmetryData{3L * n, 3L * n * (3L * n - 1) / 2, 5L * n};
}

SymmetryData expected_symmetry_DwA(int n, int g) {
    if (n < 1 || g < 1 || g > n) throw std::invalid_argument("expected_symmetry_DwA: need 1 <= g <= n");
    return SymmetryData{(long)g + n, (5L * n * n - n) / 2, 5L * n};
}

SymmetryData compose(const SymmetryData& x, const SymmetryData& y) {
    return SymmetryData{x.a + y.a, x.b + y.b, x.c + y.c};
}

}  // namespace hzeta
