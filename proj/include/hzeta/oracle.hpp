#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hzeta/combinat.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

// Finite model of R_p / p^m R_p in the canonical basis: for each prime
// factor an unramified part Z[x]/(F_i) with F_i monic irreducible of degree
// f_i mod p, extended by y^{e_i} - p when e_i > 1.  Structure constants are
// stored mod p^m and vanish across factor blocks.
struct RingModel {
    int p = 0;
    int m = 0;  // precision exponent
    long long pm = 0;
    DecompType decomp;
    int n = 0;
    std::vector<std::vector<long long>> minpoly;  // per factor, monic of degree f_i, coeffs in [0,p)
    std::vector<long long> c;                     // structure constants, n*n*n, values in [0, p^m)

    long long cc(int k, int mm, int u) const { return c[(size_t)((k * n) + mm) * n + u]; }
};

// poly_choice 0 picks the lexicographically least monic irreducible of each
// degree, 1 the next one; counts must not depend on the choice.
RingModel build_ring_model(int p, int m, const DecompType& decomp, int poly_choice = 0);

// Heisenberg Lie ring over the ring model: basis x_1..x_n, y_1..y_n,
// z_1..z_n with [x_k, y_mm] = sum_u c^{k mm}_u z_u, all other basis brackets
// zero, z-span central.
struct HeisenbergModel {
    RingModel ring;

    int n() const { return ring.n; }
    // z-components of [v, y_u] (sign +) and [v, x_u] (sign -) for an element
    // with x-coordinates a and y-coordinates b, mod p^m.
    std::vector<long long> bracket_with_y(const std::vector<long long>& a, int u) const;
    std::vector<long long> bracket_with_x(const std::vector<long long>& b, int u) const;
    void bracket_y_into(const long long* a, int u, long long* z) const;
    void bracket_x_into(const long long* b, int u, long long* z) const;
};

HeisenbergModel build_heisenberg_model(int p, int m, const DecompType& decomp, int poly_choice = 0);

// Number of ideals of index p^k in the rank-3n lattice, by enumerating
// column-Hermite sublattice representatives and testing bracket closure of
// every generator.  Requires k < m.  Guarded by `work_limit` on the
// estimated enumeration size.
Int count_ideals(const HeisenbergModel& model, int k, const Int& work_limit = Int(1) << 25);

// The same count through the two-layer sum: enumerate rank-2n sublattices,
// read off the commutator quotient type by Smith form of the bracket span,
// and weight by brute-force subgroup counts of the intermediate layer.
Int count_ideals_layered(const HeisenbergModel& model, int k, int threads = 1,
                         const Int& work_limit = Int(1) << 25);

// The tuple ell read from a 2n x 2n generator matrix with interleaved rows
// (x_1, y_1, ..., x_n, y_n), via the per-block minimal valuations and the
// first-block offsets.  Throws if a block vanishes mod p^m.
AdmissibleTuple ell_of_lattice(const RingModel& model, const std::vector<std::vector<long long>>& B);

// Sorted (non-increasing) p-valuations of the elementary divisors of
// L'/([Lambda, L] + p^m L'), from the bracket span of the columns of B
// (interleaved rows as above).
std::vector<int> commutator_type(const HeisenbergModel& model, const std::vector<std::vector<long long>>& B);

// Truncated check of the lattice-count identity for a fixed admissible ell:
// the generating function of lattices with ell(Lambda) = ell against
// prod_i (1 - t^{2 f_i}) * zeta_ab(2n) * t^{2 sum(ell)}, coefficients of t^a
// for a <= N at the given prime.
bool lemma_l_check(const DecompType& decomp, const std::vector<int>& ell, int N, int prime,
                   std::vector<Int>* lhs_out = nullptr, std::vector<Int>* rhs_out = nullptr);

// Enumerate all column-Hermite matrices of dimension d and index exponent k
// (diagonal p^{a_i}, row entries reduced modulo the row's diagonal).
void for_each_hnf(int d, int k, int prime, const std::function<void(const std::vector<std::vector<long long>>&)>& cb);

// Number of sublattices of Z^d of index p^k (the enumeration size of
// for_each_hnf), used for resource estimates.
Int hnf_count(int d, int k, int prime);

}  // namespace hzeta
