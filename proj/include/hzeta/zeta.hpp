#pragma once

#include <string>
#include <vector>

#include "hzeta/counting.hpp"
#include "hzeta/igusa.hpp"
#include "hzeta/ratfunc.hpp"

namespace hzeta {

// An n-tuple admissible for a decomposition type: constant on each block
// ]C_{i-1}, C_i] except that the first delta_i f_i slots of block i are one
// larger.
struct AdmissibleTuple {
    std::vector<int> ell;
    DecompType decomp;

    long sum() const;
    std::string str() const;
};

// All admissible tuples with sum(ell) <= bound, lexicographically ordered.
std::vector<AdmissibleTuple> adm_enumerate(const DecompType& decomp, int bound);

// True iff ell satisfies the block pattern for the type.
bool is_admissible(const std::vector<int>& ell, const DecompType& decomp);

// Sorted partition of an admissible tuple together with the weak ordering
// recording the arrangement of its block values (unramified types only).
// Ties are broken by block index, so sigma is increasing on tie classes and
// J marks exactly the strict descents between consecutive block values.
std::pair<Partition, WeakOrdering> lambda_of_ell(const AdmissibleTuple& ell);

// zeta of the free abelian lattice of rank d: prod_{i=0}^{d-1} 1/(1 - p^i t).
RatFunc zeta_ab(int d);

// The x- and y-data entering the Dyck-word summands.
Monomial x_data(int n, const BlockDecomposition& b, int j);              // j in [n]
Monomial y_data_tot_split(int n, const BlockDecomposition& b, int j);    // j in [n]
// y^{(i)}_I for the block i of a compatible set partition A.
Monomial y_data(int n, const BlockDecomposition& b, const std::vector<int>& f,
                const OrderedSetPartition& A, int i, Subset I);

// Totally split Dyck-word summand (f = 1-vector).
RatFunc D_w_totally_split(int n, const DyckWord& w);
// General unramified summand for a compatible ordered set partition.
RatFunc D_w_A(const std::vector<int>& f, const DyckWord& w, const OrderedSetPartition& A);
// Finest summand, indexed by a weak ordering compatible with w.
RatFunc D_w_v(const std::vector<int>& f, const DyckWord& w, const WeakOrdering& v);

struct ZetaResult {
    RatFunc W;
    int n = 0;
    std::vector<int> f;
    std::string provenance;
};

// Local factor at an unramified prime of inertia-degree composition f.
ZetaResult zeta_unramified(const std::vector<int>& f);
// Closed form for the inert case f = (n).
ZetaResult zeta_inert(int n);

// Exact truncation of the direct double sum over admissible tuples and
// dominated partitions; valid for every decomposition type.
TruncatedSeries D_series(const DecompType& decomp, int order);

// Series of the full local factor via D_series (general decomposition type).
TruncatedSeries zeta_series_general(const DecompType& decomp, int order);

// prod_i (1 - t^{2 f_i}) as a polynomial.
Poly split_prefactor(const std::vector<int>& f);

}  // namespace hzeta
