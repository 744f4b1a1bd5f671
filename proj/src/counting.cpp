#include "hzeta/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

Poly gaussian_binomial_pinv(int a, int b) {
    return gaussian_binomial(a, b).subst_monomial(var_Y(), Monomial::var(var_p(), -1));
}

namespace {

// Dual partition as a lookup: lamd[k] = lambda'_k for k >= 1, 0 beyond.
struct DualLookup {
    std::vector<int> d;
    explicit DualLookup(const Partition& lam) {
        Partition dd = dual_partition(lam);
        d = dd.parts;
    }
    int operator()(int k) const { return (k >= 1 && k <= (int)d.size()) ? d[k - 1] : 0; }
};

}  // namespace

Poly birkhoff_piece(const Partition& lambda, const Partition& mu, int kmin, int kmax) {
    DualLookup ld(lambda), md(mu);
    Poly r = Poly::one();
    for (int k = kmin; k <= kmax; ++k) {
        int lk = ld(k), mk = md(k), mk1 = md(k + 1);
        r *= Poly::var(var_p(), mk * (lk - mk));
        r *= gaussian_binomial_pinv(lk - mk1, lk - mk);
    }
    return r;
}

Poly alpha(const Partition& lambda, const Partition& mu) {
    if (!Partition::dominates(lambda, mu)) throw std::invalid_argument("alpha: mu not dominated by lambda");
    int top = lambda.length() ? lambda.parts[0] : 0;
    Poly r = birkhoff_piece(lambda, mu, 1, top);
    if (!r.is_polynomial() || !r.coefficients_integral() || !r.coefficients_nonnegative())
        throw std::logic_error("alpha: expected a polynomial in p with non-negative integer coefficients");
    return r;
}

void for_each_subgroup(const Partition& lambda, int prime,
                       const std::function<void(const std::vector<std::vector<long>>&, int)>& cb) {
    // Strip zero parts; they contribute nothing to the group.
    std::vector<int> lam;
    for (int x : lambda.parts)
        if (x > 0) lam.push_back(x);
    int r = (int)lam.size();
    if (r == 0) {
        cb({}, 0);
        return;
    }

    std::vector<long> pw(16, 1);
    for (int i = 1; i < 16; ++i) pw[i] = pw[i - 1] * prime;

    std::vector<std::vector<long>> B(r, std::vector<long>(r, 0));
    std::vector<int> c(r, 0);

    // Exact containment test: p^{lam_j} e_j in the lattice spanned by B's
    // columns, solved by back-substitution.
    auto contains_generators = [&]() {
        for (int j = 0; j < r; ++j) {
            std::vector<long> v(r, 0);
            v[j] = pw[lam[j]];
            for (int i = r - 1; i >= 0; --i) {
                if (v[i] == 0) continue;
                if (v[i] % B[i][i] != 0) return false;
                long x = v[i] / B[i][i];
                for (int k = 0; k <= i; ++k) v[k] -= x * B[k][i];
            }
        }
        return true;
    };

    std::function<void(int)> fill_col = [&](int j) {
        if (j == r) {
            if (contains_generators()) {
                int idx = 0;
                for (int i = 0; i < r; ++i) idx += c[i];
                cb(B, idx);
            }
            return;
        }
        // entries above the diagonal in column j, rows j-1 .. 0; the entry in
        // row j-1 carries a necessary divisibility bound, other rows are
        // filtered by the exact containment test
        std::function<void(int)> fill_row = [&](int i) {
            if (i < 0) {
                fill_col(j + 1);
                return;
            }
            long step = 1;
            if (i == j - 1) {
                int gexp = std::max(0, c[i] - (lam[j] - c[j]));
                step = pw[gexp];
            }
            for (long v = 0; v < pw[c[i]]; v += step) {
                B[i][j] = v;
                fill_row(i - 1);
            }
            B[i][j] = 0;
        };
        for (c[j] = 0; c[j] <= lam[j]; ++c[j]) {
            B[j][j] = pw[c[j]];
            fill_row(j - 1);
        }
        return;
    };
    fill_col(0);
}

namespace {

// Elementary divisor exponents of an integer matrix (Smith form), sorted
// non-increasingly, p-valuations only.
std::vector<int> snf_pvals(std::vector<std::vector<long long>> a, int prime) {
    int rows = (int)a.size();
    if (rows == 0) return {};
    int cols = (int)a[0].size();
    std::vector<int> vals;
    int top = 0;
    while (top < rows && top < cols) {
        // find pivot: nonzero entry of minimal |value| for stability
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = top; i < rows; ++i)
            for (int j = top; j < cols; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = std::abs(a[i][j]);
                }
        if (pi < 0) break;
        std::swap(a[top], a[pi]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][top], a[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = top + 1; i < rows; ++i) {
                while (a[i][top] != 0) {
                    long long q = a[i][top] / a[top][top];
                    for (int j = top; j < cols; ++j) a[i][j] -= q * a[top][j];
                    if (a[i][top] != 0) {
                        std::swap(a[i], a[top]);
                        again = true;
                    }
                }
            }
            for (int j = top + 1; j < cols; ++j) {
                while (a[top][j] != 0) {
                    long long q = a[top][j] / a[top][top];
                    for (int i = top; i < rows; ++i) a[i][j] -= q * a[i][top];
                    if (a[top][j] != 0) {
                        for (int i = top; i < rows; ++i) std::swap(a[i][j], a[i][top]);
                        again = true;
                    }
                }
            }
        }
        long long d = std::abs(a[top][top]);
        int v = 0;
        while (d % prime == 0) {
            d /= prime;
            ++v;
        }
        vals.push_back(v);
        ++top;
    }
    std::sort(vals.begin(), vals.end(), std::greater<int>());
    return vals;
}

struct BruteCacheKey {
    std::vector<int> lam;
    int prime;
    bool operator<(const BruteCacheKey& o) const {
        return lam != o.lam ? lam < o.lam : prime < o.prime;
    }
};

}  // namespace

std::map<Partition, Int> subgroup_type_counts(const Partition& lambda, int prime) {
    if (prime > 5) throw ResourceLimitError("subgroup_type_counts: prime too large", prime);
    if (lambda.size() > 8) throw ResourceLimitError("subgroup_type_counts: |lambda| too large", lambda.size());
    static std::map<BruteCacheKey, std::map<Partition, Int>> cache;
    static std::mutex cache_mu;
    std::vector<int> lam;
    for (int x : lambda.parts)
        if (x > 0) lam.push_back(x);
    BruteCacheKey key{lam, prime};
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::vector<long> pw(16, 1);
    for (int i = 1; i < 16; ++i) pw[i] = pw[i - 1] * prime;
    int r = (int)lam.size();
    std::map<Partition, Int> counts;
    for_each_subgroup(Partition(lam), prime, [&](const std::vector<std::vector<long>>& B, int) {
        // type of the subgroup: elementary divisors of X = B^{-1} D
        std::vector<std::vector<long long>> X(r, std::vector<long long>(r, 0));
        for (int j = 0; j < r; ++j) {
            std::vector<long long> v(r, 0);
            v[j] = pw[lam[j]];
            for (int i = r - 1; i >= 0; --i) {
                if (v[i] == 0) continue;
                long long x = v[i] / B[i][i];
                X[i][j] = x;
                for (int k = 0; k <= i; ++k) v[k] -= x * B[k][i];
            }
        }
        std::vector<int> mu_vals = snf_pvals(std::move(X), prime);
        mu_vals.resize(r, 0);
        counts[Partition(mu_vals)] += 1;
    });

    std::lock_guard<std::mutex> lock(cache_mu);
    cache[key] = counts;
    return counts;
}

Int alpha_bruteforce(const Partition& lambda, const Partition& mu, int prime) {
    auto counts = subgroup_type_counts(lambda, prime);
    std::vector<int> m;
    for (int x : mu.parts)
        if (x > 0) m.push_back(x);
    int r = 0;
    for (int x : lambda.parts)
        if (x > 0) ++r;
    m.resize(r, 0);
    auto it = counts.find(Partition(m));
    return it == counts.end() ? Int(0) : it->second;
}

namespace {

struct IndexCacheKey {
    std::vector<int> lam;
    int b, prime;
    bool operator<(const IndexCacheKey& o) const {
        if (lam != o.lam) return lam < o.lam;
        if (b != o.b) return b < o.b;
        return prime < o.prime;
    }
};

}  // namespace

Int subgroup_count_by_index(const Partition& lambda, int b, int prime) {
    if (b < 0) return 0;
    static std::map<IndexCacheKey, Int> cache;
    static std::mutex cache_mu;
    std::vector<int> lam;
    for (int x : lambda.parts)
        if (x > 0) lam.push_back(x);
    IndexCacheKey key{lam, b, prime};
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // Enumerate only lattices of index p^b between D Z^r and Z^r: diagonal
    // compositions of b capped by lambda, entries reduced modulo the
    // diagonal, with the exact containment filter.  The enumeration size is
    // bounded by the index, not by the group order.
    int r = (int)lam.size();
    long total = 0;
    if (r == 0) {
        total = (b == 0) ? 1 : 0;
    } else {
        std::vector<long> pw(36, 1);
        for (int i = 1; i < 36; ++i) pw[i] = pw[i - 1] * prime;
        std::vector<std::vector<long>> B(r, std::vector<long>(r, 0));
        std::vector<int> c(r, 0);
        auto contains_generators = [&]() {
            for (int j = 0; j < r; ++j) {
                std::vector<long long> v(r, 0);
                v[j] = pw[lam[j]];
                for (int i = r - 1; i >= 0; --i) {
                    if (v[i] == 0) continue;
                    if (v[i] % B[i][i] != 0) return false;
                    long long x = v[i] / B[i][i];
                    for (int k = 0; k <= i; ++k) v[k] -= x * B[k][i];
                }
            }
            return true;
        };
        std::function<void(int, int)> fill_col = [&](int j, int left) {
            if (j == r) {
                if (left == 0 && contains_generators()) ++total;
                return;
            }
            std::function<void(int)> fill_row = [&](int i) {
                if (i < 0) {
                    fill_col(j + 1, left - c[j]);
                    return;
                }
                long step = 1;
                if (i == j - 1) step = pw[std::max(0, c[i] - (lam[j] - c[j]))];
                for (long v = 0; v < pw[c[i]]; v += step) {
                    B[i][j] = v;
                    fill_row(i - 1);
                }
                B[i][j] = 0;
            };
            for (c[j] = 0; c[j] <= std::min(lam[j], left); ++c[j]) {
                B[j][j] = pw[c[j]];
                fill_row(j - 1);
            }
            c[j] = 0;
        };
        fill_col(0, b);
    }

    std::lock_guard<std::mutex> lock(cache_mu);
    auto [it, inserted] = cache.try_emplace(key, Int(total));
    return it->second;
}

Poly mu_split_rhs(const Partition& lambda, const Partition& mu, int i) {
    DyckWord w = dyck_of_pair(mu, lambda);
    BlockDecomposition b = block_decomposition(w);
    if (i < 1 || i > b.r) throw std::invalid_argument("mu_split_rhs: block index out of range");
    SuccessiveDifferences d = successive_differences(mu, lambda, w);
    JumpSets js = jump_sets(mu, lambda, w);
    Poly r = Poly::one();
    for (int j = 1; j <= b.M[i] - b.M[i - 1]; ++j) {
        int jj = b.M[i - 1] + j;
        r *= Poly::var(var_p(), (b.M[i - 1] + j) * (b.L[i] - b.M[i - 1] - j) * d.r[jj - 1]);
    }
    Poly m1 = gaussian_multinomial(b.M[i] - b.M[i - 1], js.Jmu[i - 1]);
    r *= m1.subst_monomial(var_Y(), Monomial::var(var_p(), -1));
    r *= gaussian_binomial_pinv(b.L[i] - b.M[i - 1], b.L[i] - b.M[i]);
    return r;
}

Poly lambda_split_rhs(const Partition& lambda, const Partition& mu, int i) {
    DyckWord w = dyck_of_pair(mu, lambda);
    BlockDecomposition b = block_decomposition(w);
    if (i < 1 || i > b.r) throw std::invalid_argument("lambda_split_rhs: block index out of range");
    SuccessiveDifferences d = successive_differences(mu, lambda, w);
    Poly r = Poly::one();
    for (int j = 1; j <= b.L[i] - b.L[i - 1]; ++j) {
        int jj = b.L[i - 1] + j;
        r *= Poly::var(var_p(), b.M[i - 1] * (b.L[i - 1] - b.M[i - 1] + j) * d.s[jj - 1]);
    }
    return r;
}

bool check_mu_split(const Partition& lambda, const Partition& mu, int i) {
    DyckWord w = dyck_of_pair(mu, lambda);
    BlockDecomposition b = block_decomposition(w);
    int kmin = lambda.part(b.L[i] + 1) + 1;  // lambda_{n+1} = 0 for i = r
    int kmax = mu.part(b.M[i - 1] + 1);
    return birkhoff_piece(lambda, mu, kmin, kmax) == mu_split_rhs(lambda, mu, i);
}

bool check_lambda_split(const Partition& lambda, const Partition& mu, int i) {
    DyckWord w = dyck_of_pair(mu, lambda);
    BlockDecomposition b = block_decomposition(w);
    int kmin = mu.part(b.M[i - 1] + 1) + 1;
    int kmax = lambda.part(b.L[i - 1] + 1);
    return birkhoff_piece(lambda, mu, kmin, kmax) == lambda_split_rhs(lambda, mu, i);
}

}  // namespace hzeta
