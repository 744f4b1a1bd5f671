#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hzeta/combinat.hpp"

namespace hzeta {

// Number of subgroups of type mu in an abelian p-group of type lambda, as an
// exact polynomial in p (symbolic).  Rejects pairs with mu not dominated by
// lambda; the result is asserted to be a genuine polynomial with non-negative
// integer coefficients.
Poly alpha(const Partition& lambda, const Partition& mu);

// The same number for a concrete small prime, by enumerating generator
// matrices in column Hermite form and classifying each subgroup by its
// elementary divisors.  Guarded: prime <= 5, |lambda| <= 8.
Int alpha_bruteforce(const Partition& lambda, const Partition& mu, int prime);

// All subgroup-type counts of a type-lambda group at once: map mu -> count.
std::map<Partition, Int> subgroup_type_counts(const Partition& lambda, int prime);

// Number of subgroups of index p^b in a group of type lambda (no type
// classification).
Int subgroup_count_by_index(const Partition& lambda, int b, int prime);

// Block identities behind the regrouped Birkhoff product: for a dominated
// pair and block index i in [r], the per-block factorizations hold as
// Laurent polynomials in p.
bool check_mu_split(const Partition& lambda, const Partition& mu, int i);
bool check_lambda_split(const Partition& lambda, const Partition& mu, int i);

// The two sides, exposed for the product-regrouping test.
Poly birkhoff_piece(const Partition& lambda, const Partition& mu, int kmin, int kmax);
Poly mu_split_rhs(const Partition& lambda, const Partition& mu, int i);
Poly lambda_split_rhs(const Partition& lambda, const Partition& mu, int i);

// Gaussian binomial evaluated at Y = p^{-1}, as a Laurent polynomial in p.
Poly gaussian_binomial_pinv(int a, int b);

// Enumerates subgroups of the finite abelian p-group of type lambda as
// column-Hermite generator matrices B (upper triangular, diagonal p^{c_i},
// row entries reduced modulo the diagonal) of lattices between D Z^r and
// Z^r.  The callback receives B and the index exponent sum c_i.
void for_each_subgroup(const Partition& lambda, int prime,
                       const std::function<void(const std::vector<std::vector<long>>&, int)>& cb);

}  // namespace hzeta
