#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hzeta/laurent.hpp"

namespace hzeta {

// Subsets of [h] are bitmasks; bit i-1 encodes the element i.
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s);  // 1-based, ascending
inline int subset_size(Subset s) { return __builtin_popcount(s); }

// Non-increasing list of non-negative parts; the length is significant
// (trailing zeros are kept for n-tuple bookkeeping).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int length() const { return (int)parts.size(); }
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }  // 1-based, 0 beyond
    long size() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    // Componentwise mu_i <= lambda_i; requires equal length.
    static bool dominates(const Partition& lambda, const Partition& mu);

    static Partition sorted_from(const std::vector<int>& l);
    std::string str() const;
};

// lambda'_i = #{j : lambda_j >= i}; returned trailing-zero-free.
Partition dual_partition(const Partition& lambda);

struct DyckWord {
    std::string letters;  // over '0','1'

    DyckWord() = default;
    explicit DyckWord(std::string w);

    int half_length() const { return (int)letters.size() / 2; }
    bool operator==(const DyckWord& o) const { return letters == o.letters; }
    bool operator<(const DyckWord& o) const { return letters < o.letters; }
    std::string str() const { return letters; }
};

// All Dyck words of length 2n in lexicographic order; |result| = Cat_n.
std::vector<DyckWord> dyck_words(int n);

// Maximal-run block structure w = prod_i 0^{L_i - L_{i-1}} 1^{M_i - M_{i-1}}.
// L and M have r+1 entries with L[0] = M[0] = 0 and L[r] = M[r] = n.
struct BlockDecomposition {
    int r = 0;
    std::vector<int> L, M;

    int Lv(int i) const { return L.at(i); }
    int Mv(int i) const { return M.at(i); }
    // {L_1, ..., L_{r-1}} as a subset of [n-1].
    Subset Lset() const;
};

BlockDecomposition block_decomposition(const DyckWord& w);
DyckWord word_of_blocks(const BlockDecomposition& b);

// The word w(mu, lambda) determined by the overlap of a dominated pair.
DyckWord dyck_of_pair(const Partition& mu, const Partition& lambda);

// Successive differences r_j, s_j of the pair relative to its word.
struct SuccessiveDifferences {
    std::vector<int> r, s;  // 1-based values at index j-1
};
SuccessiveDifferences successive_differences(const Partition& mu, const Partition& lambda, const DyckWord& w);

// Jump sets per block: J^mu_i subset of [M_i - M_{i-1} - 1], similarly J^lambda_i.
struct JumpSets {
    std::vector<Subset> Jmu, Jlambda;  // index i-1 for block i
};
JumpSets jump_sets(const Partition& mu, const Partition& lambda, const DyckWord& w);

// Number of n-tuples sorting to lambda.
Int beta(const Partition& lambda);

// Gaussian binomial in Y; exact polynomial with non-negative integer
// coefficients.  Rejects a < b.
Poly gaussian_binomial(int a, int b);
// Telescoping product binom(n, i_m) binom(i_m, i_{m-1}) ... over I = {i_1 < ... < i_m}.
Poly gaussian_multinomial(int n, Subset I);
// Value at Y = 1 without building the polynomial.
Int multinomial_at_one(int n, Subset I);

// Permutations are 0-based images: sigma[i] = sigma(i+1) - 1.
using Perm = std::vector<int>;

Subset descent_set(const Perm& sigma);    // subset of [h-1]
int coxeter_length(const Perm& sigma);    // inversion count
int major_index(const Perm& sigma);

// A ranking with ties: (sigma, J) with Des(sigma) contained in J; the
// positions in J mark the boundaries between consecutive tie classes.
struct WeakOrdering {
    Perm sigma;
    Subset J = 0;

    int h() const { return (int)sigma.size(); }
    bool valid() const;
    bool operator==(const WeakOrdering& o) const { return sigma == o.sigma && J == o.J; }
    bool operator<(const WeakOrdering& o) const {
        return sigma != o.sigma ? sigma < o.sigma : J < o.J;
    }
    std::string str() const;
};

std::vector<WeakOrdering> weak_orderings(int h);

// Strictly increasing chain of non-empty proper subsets of [h].
struct Chain {
    std::vector<Subset> sets;
    bool operator==(const Chain& o) const { return sets == o.sets; }
    bool operator<(const Chain& o) const { return sets < o.sets; }
};

std::vector<Chain> chains(int h);
// The poset isomorphism (sigma, J) -> ({sigma(1),...,sigma(j)})_{j in J}.
Chain phi(const WeakOrdering& v);

// Ordered list of pairwise disjoint non-empty subsets covering [g].
struct OrderedSetPartition {
    std::vector<Subset> blocks;
    int g() const;
    bool operator==(const OrderedSetPartition& o) const { return blocks == o.blocks; }
    bool operator<(const OrderedSetPartition& o) const { return blocks < o.blocks; }
    std::string str() const;
};

// Decomposition type: ramification vector e and inertia vector f with
// sum e_i f_i = n.
struct DecompType {
    std::vector<int> e, f;

    DecompType() = default;
    DecompType(std::vector<int> e_, std::vector<int> f_);
    static DecompType unramified(std::vector<int> f_);

    int g() const { return (int)f.size(); }
    int n() const;
    // C_i = sum_{j<=i} e_j f_j, for i = 0..g.
    std::vector<int> C() const;
    bool is_unramified() const;
    std::string str() const;
};

// All ordered set partitions of [g] whose f-weights match the zero-run
// lengths of w (the set P_w).
std::vector<OrderedSetPartition> compatible_partitions(const DyckWord& w, const std::vector<int>& f);

// The embedding of a tuple of weak orderings along the blocks of A.
WeakOrdering phi_A(const OrderedSetPartition& A, const std::vector<WeakOrdering>& vs);

// The set partition A(w, v) induced by a weak ordering compatible with w,
// plus the boundary positions t_0 < ... < t_r.  Returns false when v is not
// compatible with w.
bool partition_of_weak_ordering(const DyckWord& w, const std::vector<int>& f, const WeakOrdering& v,
                                OrderedSetPartition& A, std::vector<int>& t);

Int catalan(int n);
Int ordered_bell(int n);

}  // namespace hzeta
