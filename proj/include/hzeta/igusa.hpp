#pragma once

#include <map>

#include "hzeta/combinat.hpp"
#include "hzeta/ratfunc.hpp"

namespace hzeta {

// Specialization of the Gaussian-multinomial weight variable.
enum class YSpec {
    Symbolic,  // keep Y
    One,       // Y = 1
    PInverse,  // Y = p^{-1}
};

Poly specialize_multinomial(int h, Subset I, YSpec y);

// I_h(Y; X) = 1/(1-X_h) * sum_{I subset [h-1]} binom(h, I)_Y prod_{i in I} X_i/(1-X_i)
RatFunc igusa_I(int h, YSpec y, const std::vector<Monomial>& X);
// Same with leading factor X_h/(1-X_h).
RatFunc igusa_I_circ(int h, YSpec y, const std::vector<Monomial>& X);

// Generalized Igusa function over the chain poset of non-empty proper
// subsets of [h]; one variable per non-empty subset, keyed by bitmask.
RatFunc igusa_wo(int h, const std::map<Subset, Monomial>& X);

// Symbolic inputs X_1..X_h (or all subset variables) for identity tests.
std::vector<Monomial> symbolic_X(int h);
std::map<Subset, Monomial> symbolic_X_subsets(int h);

}  // namespace hzeta
