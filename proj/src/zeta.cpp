#include "hzeta/zeta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

long AdmissibleTuple::sum() const { return std::accumulate(ell.begin(), ell.end(), 0L); }

std::string AdmissibleTuple::str() const {
    std::string s = "(";
    for (size_t i = 0; i < ell.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ell[i]);
    }
    return s + ")";
}

bool is_admissible(const std::vector<int>& ell, const DecompType& decomp) {
    auto C = decomp.C();
    if ((int)ell.size() != decomp.n()) return false;
    for (int i = 1; i <= decomp.g(); ++i) {
        int lo = C[i - 1], hi = C[i];
        int fi = decomp.f[i - 1], ei = decomp.e[i - 1];
        bool ok = false;
        for (int d = 0; d <= ei - 1 && !ok; ++d) {
            bool match = true;
            for (int j = lo + 1; j <= hi; ++j) {
                int expect = (j <= lo + d * fi) ? ell[hi - 1] + 1 : ell[hi - 1];
                if (ell[j - 1] != expect) match = false;
            }
            ok = match;
        }
        if (!ok) return false;
        if (ell[hi - 1] < 0) return false;
    }
    return true;
}

std::vector<AdmissibleTuple> adm_enumerate(const DecompType& decomp, int bound) {
    if (bound < 0) throw std::invalid_argument("adm_enumerate: bound >= 0 required");
    int g = decomp.g();
    auto C = decomp.C();
    std::vector<AdmissibleTuple> out;
    std::vector<int> v(g, 0), delta(g, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == g) {
            AdmissibleTuple a;
            a.decomp = decomp;
            a.ell.assign(decomp.n(), 0);
            for (int b = 0; b < g; ++b) {
                int lo = C[b], fi = decomp.f[b], ei = decomp.e[b];
                for (int j = 0; j < ei * fi; ++j) a.ell[lo + j] = v[b] + (j < delta[b] * fi ? 1 : 0);
            }
            out.push_back(std::move(a));
            return;
        }
        int fi = decomp.f[i], ei = decomp.e[i];
        for (int d = 0; d <= ei - 1; ++d) {
            for (int val = 0;; ++val) {
                int cost = val * ei * fi + d * fi;
                if (used + cost > bound) break;
                v[i] = val;
                delta[i] = d;
                rec(i + 1, used + cost);
            }
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const AdmissibleTuple& a, const AdmissibleTuple& b) { return a.ell < b.ell; });
    return out;
}

std::pair<Partition, WeakOrdering> lambda_of_ell(const AdmissibleTuple& a) {
    if (!a.decomp.is_unramified())
        throw std::invalid_argument("lambda_of_ell: weak-ordering bookkeeping requires e = (1,...,1)");
    int g = a.decomp.g();
    auto C = a.decomp.C();
    std::vector<int> psi(g);
    for (int i = 0; i < g; ++i) psi[i] = a.ell[C[i + 1] - 1];
    // arrange block values non-ascendingly; ties keep block order
    WeakOrdering v;
    v.sigma.resize(g);
    std::iota(v.sigma.begin(), v.sigma.end(), 0);
    std::stable_sort(v.sigma.begin(), v.sigma.end(), [&](int x, int y) { return psi[x] > psi[y]; });
    v.J = 0;
    for (int i = 0; i + 1 < g; ++i)
        if (psi[v.sigma[i]] > psi[v.sigma[i + 1]]) v.J |= 1u << i;
    return {Partition::sorted_from(a.ell), v};
}

RatFunc zeta_ab(int d) {
    if (d < 1) throw std::invalid_argument("zeta_ab: d >= 1 required");
    RatFunc r = RatFunc::one();
    Monomial t = Monomial::var(var_t());
    for (int i = 0; i < d; ++i) r.den[Monomial::var(var_p(), i) * t] += 1;
    r.canonicalize();
    return r;
}

Monomial x_data(int n, const BlockDecomposition& b, int j) {
    int i = 0;
    for (int k = 1; k <= b.r; ++k)
        if (b.M[k - 1] < j && j <= b.M[k]) i = k;
    if (i == 0) throw std::logic_error("x_data: index outside blocks");
    int L = b.L[i];
    return Monomial::var(var_p(), j * (2 * n + L - j)) * Monomial::var(var_t(), 2 * L + j);
}

Monomial y_data_tot_split(int n, const BlockDecomposition& b, int j) {
    int i = 0;
    for (int k = 1; k <= b.r; ++k)
        if (b.L[k - 1] < j && j <= b.L[k]) i = k;
    if (i == 0) throw std::logic_error("y_data_tot_split: index outside blocks");
    int M = b.M[i - 1];
    return Monomial::var(var_p(), (2 * n - M + j) * M) * Monomial::var(var_t(), 2 * j + M);
}

Monomial y_data(int n, const BlockDecomposition& b, const std::vector<int>& f,
                const OrderedSetPartition& A, int i, Subset I) {
    auto elems = subset_elements(A.blocks[i - 1]);
    int eps = b.L[i - 1];
    for (int j = 1; j <= (int)elems.size(); ++j)
        if (I & (1u << (j - 1))) eps += f[elems[j - 1] - 1];
    int M = b.M[i - 1];
    return Monomial::var(var_p(), (2 * n - M + eps) * M) * Monomial::var(var_t(), 2 * eps + M);
}

namespace {

// Shared tail of every Dyck-word summand: the Gaussian-binomial prefactor,
// the interior I-circ factors, and the final I factor on the x-data.
RatFunc x_side(int n, const BlockDecomposition& b) {
    RatFunc acc = RatFunc::one();
    Poly pref = Poly::one();
    for (int i = 1; i <= b.r; ++i)
        pref *= gaussian_binomial_pinv(b.L[i] - b.M[i - 1], b.L[i] - b.M[i]);
    acc = rf_mul(acc, pref);
    for (int i = 1; i <= b.r - 1; ++i) {
        std::vector<Monomial> xs;
        for (int j = b.M[i - 1] + 1; j <= b.M[i]; ++j) xs.push_back(x_data(n, b, j));
        acc = rf_mul(acc, igusa_I_circ((int)xs.size(), YSpec::PInverse, xs));
    }
    std::vector<Monomial> xs;
    for (int j = b.M[b.r - 1] + 1; j <= n; ++j) xs.push_back(x_data(n, b, j));
    acc = rf_mul(acc, igusa_I((int)xs.size(), YSpec::PInverse, xs));
    return acc;
}

}  // namespace

RatFunc D_w_totally_split(int n, const DyckWord& w) {
    if (w.half_length() != n) throw std::invalid_argument("D_w_totally_split: word length mismatch");
    BlockDecomposition b = block_decomposition(w);
    RatFunc acc = rf_mul(x_side(n, b), Poly::constant(Rat(multinomial_at_one(n, b.Lset()))));
    for (int i = 1; i <= b.r; ++i) {
        std::vector<Monomial> ys;
        for (int j = b.L[i - 1] + 1; j <= b.L[i]; ++j) ys.push_back(y_data_tot_split(n, b, j));
        acc = rf_mul(acc, igusa_I((int)ys.size(), YSpec::One, ys));
    }
    return acc;
}

RatFunc D_w_A(const std::vector<int>& f, const DyckWord& w, const OrderedSetPartition& A) {
    int n = 0;
    for (int x : f) n += x;
    if (w.half_length() != n) throw std::invalid_argument("D_w_A: word length mismatch");
    BlockDecomposition b = block_decomposition(w);
    if ((int)A.blocks.size() != b.r) throw std::invalid_argument("D_w_A: set partition incompatible with word");
    Subset seen = 0;
    for (int i = 1; i <= b.r; ++i) {
        int wsum = 0;
        for (int el : subset_elements(A.blocks[i - 1])) wsum += f[el - 1];
        if (wsum != b.L[i] - b.L[i - 1] || (seen & A.blocks[i - 1]))
            throw std::invalid_argument("D_w_A: set partition incompatible with word");
        seen |= A.blocks[i - 1];
    }
    if (seen != (1u << f.size()) - 1) throw std::invalid_argument("D_w_A: set partition does not cover [g]");

    RatFunc acc = x_side(n, b);
    for (int i = 1; i <= b.r; ++i) {
        int hi = subset_size(A.blocks[i - 1]);
        std::map<Subset, Monomial> ys;
        for (Subset I = 1; I < (1u << hi); ++I) ys[I] = y_data(n, b, f, A, i, I);
        acc = rf_mul(acc, igusa_wo(hi, ys));
    }
    return acc;
}

RatFunc D_w_v(const std::vector<int>& f, const DyckWord& w, const WeakOrdering& v) {
    int n = 0;
    for (int x : f) n += x;
    if (w.half_length() != n) throw std::invalid_argument("D_w_v: word length mismatch");
    BlockDecomposition b = block_decomposition(w);
    OrderedSetPartition A;
    std::vector<int> t;
    if (!partition_of_weak_ordering(w, f, v, A, t)) throw std::invalid_argument("D_w_v: weak ordering incompatible with word");

    RatFunc acc = x_side(n, b);
    for (int i = 1; i <= b.r; ++i) {
        int hi = t[i] - t[i - 1];
        // component weak ordering v_i under phi_A
        WeakOrdering vi;
        auto elems = subset_elements(A.blocks[i - 1]);
        for (int j = 1; j <= hi; ++j) {
            int el = v.sigma[t[i - 1] + j - 1] + 1;
            int pos = (int)(std::find(elems.begin(), elems.end(), el) - elems.begin());
            vi.sigma.push_back(pos);
        }
        for (int j = 1; j <= hi - 1; ++j)
            if (v.J & (1u << (t[i - 1] + j - 1))) vi.J |= 1u << (j - 1);
        acc = rf_mul(acc, RatFunc::gpzero(y_data(n, b, f, A, i, (1u << hi) - 1)));
        for (const Subset& I : phi(vi).sets) acc = rf_mul(acc, RatFunc::gp(y_data(n, b, f, A, i, I)));
    }
    return acc;
}

Poly split_prefactor(const std::vector<int>& f) {
    Poly r = Poly::one();
    for (int fi : f) {
        Poly g = Poly::one();
        g.add_term(Monomial::var(var_t(), 2 * fi), -1);
        r *= g;
    }
    return r;
}

ZetaResult zeta_unramified(const std::vector<int>& f) {
    int n = 0;
    for (int x : f) {
        if (x < 1) throw std::invalid_argument("zeta_unramified: f entries must be positive");
        n += x;
    }
    bool ones = std::all_of(f.begin(), f.end(), [](int x) { return x == 1; });

    ZetaResult res;
    res.n = n;
    res.f = f;
    std::vector<RatFunc> summands;
    if (ones) {
        // The set-partition sum collapses in the totally split case; the
        // block formula already carries the multiplicity binom(n, L-set).
        for (const DyckWord& w : dyck_words(n)) summands.push_back(D_w_totally_split(n, w));
        res.provenance = "totally-split block formula";
    } else {
        for (const DyckWord& w : dyck_words(n))
            for (const OrderedSetPartition& A : compatible_partitions(w, f)) summands.push_back(D_w_A(f, w, A));
        res.provenance = "unramified block formula";
    }
    RatFunc sum = rf_sum(std::move(summands));
    res.W = rf_mul(rf_mul(zeta_ab(2 * n), split_prefactor(f)), sum);
    return res;
}

ZetaResult zeta_inert(int n) {
    if (n < 1) throw std::invalid_argument("zeta_inert: n >= 1 required");
    std::vector<Monomial> xs;
    for (int j = 1; j <= n; ++j)
        xs.push_back(Monomial::var(var_p(), j * (3 * n - j)) * Monomial::var(var_t(), 2 * n + j));
    ZetaResult res;
    res.n = n;
    res.f = {n};
    res.provenance = "inert closed form";
    res.W = rf_mul(zeta_ab(2 * n), igusa_I(n, YSpec::PInverse, xs));
    return res;
}

TruncatedSeries D_series(const DecompType& decomp, int order) {
    if (order < 0) throw std::invalid_argument("D_series: order >= 0 required");
    int n = decomp.n();
    TruncatedSeries s(order);
    // t-degree of a term is 2*sum(ell) + sum(mu), so the truncation is exact.
    for (const AdmissibleTuple& a : adm_enumerate(decomp, order / 2)) {
        long els = a.sum();
        if (2 * els > order) continue;
        Partition lam = Partition::sorted_from(a.ell);
        std::vector<int> mu(lam.length(), 0);
        long budget = order - 2 * els;
        std::function<void(int, long)> rec = [&](int idx, long used) {
            if (idx == lam.length()) {
                Poly al = alpha(lam, Partition(mu));
                int deg = (int)(2 * els + used);
                s.coeff(deg) += al.scaled(Monomial::var(var_p(), (int)(2 * n * used)), 1);
                return;
            }
            int hi = std::min<long>(lam.parts[idx], idx > 0 ? mu[idx - 1] : budget);
            for (int v = 0; v <= hi && used + v <= budget; ++v) {
                mu[idx] = v;
                rec(idx + 1, used + v);
            }
            mu[idx] = 0;
        };
        rec(0, 0);
    }
    return s;
}

TruncatedSeries zeta_series_general(const DecompType& decomp, int order) {
    int n = decomp.n();
    RatFunc pre = rf_mul(zeta_ab(2 * n), split_prefactor(decomp.f));
    return rf_series(pre, order) * D_series(decomp, order);
}

}  // namespace hzeta
