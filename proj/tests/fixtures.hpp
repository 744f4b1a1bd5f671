#pragma once

// Reference fixtures for the known low-degree closed forms, entered by hand
// from gp/gpzero/Igusa primitives.

#include "hzeta/igusa.hpp"
#include "hzeta/varreg.hpp"
#include "hzeta/zeta.hpp"

namespace fixtures {

using namespace hzeta;

inline Monomial pt(int a, int b) { return Monomial::var(var_p(), a) * Monomial::var(var_t(), b); }
inline RatFunc gp(int a, int b) { return RatFunc::gp(pt(a, b)); }
inline RatFunc gpz(int a, int b) { return RatFunc::gpzero(pt(a, b)); }
inline RatFunc cst(long v) { return RatFunc(Poly::constant(v)); }
inline Poly binp(int a, int b) { return gaussian_binomial_pinv(a, b); }
inline RatFunc I(int h, YSpec y, std::vector<std::pair<int, int>> xs) {
    std::vector<Monomial> X;
    for (auto [a, b] : xs) X.push_back(pt(a, b));
    return igusa_I(h, y, X);
}
inline RatFunc Ic(int h, YSpec y, std::vector<std::pair<int, int>> xs) {
    std::vector<Monomial> X;
    for (auto [a, b] : xs) X.push_back(pt(a, b));
    return igusa_I_circ(h, y, X);
}

inline RatFunc operator*(const RatFunc& x, const RatFunc& y) { return rf_mul(x, y); }
inline RatFunc operator*(const RatFunc& x, const Poly& y) { return rf_mul(x, y); }
inline RatFunc operator+(const RatFunc& x, const RatFunc& y) { return rf_add(x, y); }
inline RatFunc powr(const RatFunc& x, int k) {
    RatFunc r = RatFunc::one();
    for (int i = 0; i < k; ++i) r = rf_mul(r, x);
    return r;
}

// The five summands of the totally split cubic case, in lexicographic word
// order 000111, 001011, 001101, 010011, 010101.
inline std::vector<RatFunc> cubic_split_table() {
    const YSpec one = YSpec::One;
    (void)one;
    Poly b31 = binp(3, 1);
    Poly b312 = gaussian_multinomial(3, 0b11).subst_monomial(var_Y(), Monomial::var(var_p(), -1));
    Poly b21 = binp(2, 1);
    std::vector<RatFunc> out;
    out.push_back(gpz(18, 9) * (RatFunc::one() + (gp(14, 8) + gp(8, 7)) * b31 + (gp(14, 8) * gp(8, 7)) * b312) *
                  powr(gpz(0, 2), 3));
    out.push_back(cst(3) * gpz(18, 9) * (RatFunc::one() + gp(14, 8) * b21) * gpz(8, 7) * (gp(7, 5) * b21) *
                  powr(gpz(0, 2), 2));
    out.push_back(cst(3) * gpz(18, 9) * gpz(14, 8) * gp(12, 6) * (RatFunc::one() + gp(7, 5) * b21) *
                  powr(gpz(0, 2), 2));
    out.push_back(cst(3) * gpz(18, 9) * (RatFunc::one() + gp(14, 8) * b21) * gpz(8, 7) *
                  (RatFunc::one() + cst(2) * gp(7, 5)) * gp(6, 3) * gpz(0, 2));
    out.push_back(cst(6) * gpz(18, 9) * gpz(14, 8) * gp(12, 6) * gpz(7, 5) * gp(6, 3) * gpz(0, 2));
    return out;
}

// The fourteen summands of the totally split quartic case, in lexicographic
// word order (labels A..N).
inline std::vector<RatFunc> quartic_split_table() {
    const YSpec pinv = YSpec::PInverse;
    const YSpec one = YSpec::One;
    Poly b21 = binp(2, 1);
    Poly b31 = binp(3, 1);
    Poly b32 = binp(3, 2);
    RatFunc T2 = powr(gpz(0, 2), 2), T3 = powr(gpz(0, 2), 3), T4 = powr(gpz(0, 2), 4), T1 = gpz(0, 2);
    std::vector<RatFunc> out;
    // A
    out.push_back(T4 * I(4, pinv, {{11, 9}, {20, 10}, {27, 11}, {32, 12}}));
    // B
    out.push_back(cst(4) * T3 * (gp(10, 7) * b32) * gpz(11, 9) * I(3, pinv, {{20, 10}, {27, 11}, {32, 12}}));
    // C
    out.push_back(cst(4) * T3 * (Ic(2, pinv, {{10, 7}, {18, 8}}) * b31) * gpz(20, 10) * I(2, pinv, {{27, 11}, {32, 12}}));
    // D
    out.push_back(cst(4) * T3 * Ic(3, pinv, {{10, 7}, {18, 8}, {24, 9}}) * gpz(27, 11) * gpz(32, 12));
    // E
    out.push_back(cst(6) * T2 * (gp(9, 5) * b21) * I(2, one, {{10, 7}, {11, 9}}) * I(3, pinv, {{20, 10}, {27, 11}, {32, 12}}));
    // F
    out.push_back(cst(12) * T2 * (gp(9, 5) * b21 * b21) * gpz(10, 7) * gp(18, 8) * gpz(20, 10) *
                  I(2, pinv, {{27, 11}, {32, 12}}));
    // G
    out.push_back(cst(12) * T2 * (gp(9, 5) * b21) * gpz(10, 7) * Ic(2, pinv, {{18, 8}, {24, 9}}) * gpz(27, 11) *
                  gpz(32, 12));
    // H
    out.push_back(cst(6) * T2 * Ic(2, pinv, {{9, 5}, {16, 6}}) * I(2, one, {{18, 8}, {20, 10}}) *
                  I(2, pinv, {{27, 11}, {32, 12}}));
    // I
    out.push_back(cst(12) * T2 * Ic(2, pinv, {{9, 5}, {16, 6}}) * gpz(18, 8) * gp(24, 9) * gpz(27, 11) * gpz(32, 12));
    // J
    out.push_back(cst(4) * T1 * gp(8, 3) * I(3, one, {{9, 5}, {10, 7}, {11, 9}}) *
                  I(3, pinv, {{20, 10}, {27, 11}, {32, 12}}));
    // K
    out.push_back(cst(12) * T1 * (gp(8, 3) * b21) * I(2, one, {{9, 5}, {10, 7}}) * gp(18, 8) * gpz(20, 10) *
                  I(2, pinv, {{27, 11}, {32, 12}}));
    // L
    out.push_back(cst(12) * T1 * gp(8, 3) * I(2, one, {{9, 5}, {10, 7}}) * Ic(2, pinv, {{18, 8}, {24, 9}}) *
                  gpz(27, 11) * gpz(32, 12));
    // M
    out.push_back(cst(12) * T1 * gp(8, 3) * gpz(9, 5) * gp(16, 6) * I(2, one, {{18, 8}, {20, 10}}) *
                  I(2, pinv, {{27, 11}, {32, 12}}));
    // N
    out.push_back(cst(24) * T1 * gp(8, 3) * gpz(9, 5) * gp(16, 6) * gpz(18, 8) * gp(24, 9) * gpz(27, 11) *
                  gpz(32, 12));
    return out;
}

// Quartic f = (2,2): the three non-vanishing summands, keyed by word.
inline RatFunc split22_D_A() { return powr(gpz(0, 4), 2) * I(4, YSpec::PInverse, {{11, 9}, {20, 10}, {27, 11}, {32, 12}}); }
inline RatFunc split22_D_E() {
    return cst(2) * gpz(0, 4) * (gp(9, 5) * binp(2, 1)) * gpz(11, 9) * I(3, YSpec::PInverse, {{20, 10}, {27, 11}, {32, 12}});
}
inline RatFunc split22_D_H() {
    return cst(2) * gpz(0, 4) * Ic(2, YSpec::PInverse, {{9, 5}, {16, 6}}) * gpz(20, 10) *
           I(2, YSpec::PInverse, {{27, 11}, {32, 12}});
}

// Quartic f = (3,1): the five non-vanishing summands (words A, B, C, D, J).
inline std::vector<std::pair<std::string, RatFunc>> split31_table() {
    const YSpec pinv = YSpec::PInverse;
    std::vector<std::pair<std::string, RatFunc>> out;
    out.emplace_back("00001111", gpz(0, 6) * gpz(0, 2) * I(4, pinv, {{11, 9}, {20, 10}, {27, 11}, {32, 12}}));
    out.emplace_back("00010111",
                     gpz(0, 6) * (gp(10, 7) * binp(3, 2)) * gpz(11, 9) * I(3, pinv, {{20, 10}, {27, 11}, {32, 12}}));
    out.emplace_back("00011011", gpz(0, 6) * (Ic(2, pinv, {{10, 7}, {18, 8}}) * binp(3, 1)) * gpz(20, 10) *
                                     I(2, pinv, {{27, 11}, {32, 12}}));
    out.emplace_back("00011101", gpz(0, 6) * Ic(3, pinv, {{10, 7}, {18, 8}, {24, 9}}) * gpz(27, 11) * gpz(32, 12));
    out.emplace_back("01000111", gpz(0, 2) * gp(8, 3) * gpz(11, 9) * I(3, pinv, {{20, 10}, {27, 11}, {32, 12}}));
    return out;
}

// The known numerator of the quartic f = (2,2) local factor.
inline Poly quartic22_numerator() {
    struct T {
        int c, a, b;
    };
    static const std::vector<T> terms = {
        {1, 61, 35}, {2, 53, 30},  {-1, 53, 26}, {1, 52, 30},  {-1, 52, 26}, {1, 51, 26},  {-1, 45, 25},
        {1, 44, 25}, {-1, 44, 21}, {2, 43, 25},  {-1, 43, 21}, {1, 42, 25},  {-1, 42, 21}, {-1, 37, 24},
        {-1, 36, 24}, {1, 36, 20}, {1, 35, 24},  {-1, 35, 20}, {-1, 35, 16}, {-1, 34, 16}, {1, 33, 20},
        {-1, 33, 16}, {-1, 28, 19}, {1, 28, 15}, {-1, 27, 19}, {-1, 26, 19}, {-1, 26, 15}, {1, 26, 11},
        {1, 25, 15}, {-1, 25, 11}, {-1, 24, 11}, {-1, 19, 14}, {1, 19, 10}, {-1, 18, 14}, {2, 18, 10},
        {-1, 17, 14}, {1, 17, 10}, {-1, 16, 10}, {1, 10, 9},   {-1, 9, 9},  {1, 9, 5},    {-1, 8, 9},
        {2, 8, 5},   {1, 0, 0},
    };
    Poly P;
    for (const auto& t : terms) P.add_term(pt(t.a, t.b), t.c);
    return P;
}

// The known denominator of the quartic f = (2,2) local factor: the
// rank-8 abelian factor times the five extra local factors, (1 - p^16 t^6)
// squared.
inline std::map<Monomial, int> quartic22_denominator() {
    std::map<Monomial, int> d;
    for (int i = 0; i <= 7; ++i) d[pt(i, 1)] = 1;
    d[pt(9, 5)] = 1;
    d[pt(11, 9)] = 1;
    d[pt(16, 6)] = 2;
    d[pt(20, 10)] = 1;
    d[pt(27, 11)] = 1;
    return d;
}

inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = 1; x <= left; ++x) {
            cur.push_back(x);
            rec(left - x);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

}  // namespace fixtures
