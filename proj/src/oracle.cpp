#include "hzeta/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

#include "hzeta/counting.hpp"
#include "hzeta/varreg.hpp"

namespace hzeta {

namespace {

// ---- polynomial arithmetic over Z/p^m for the ring models ----

// reduce modulo a monic polynomial F (degree f), coefficients mod `mod`
std::vector<long long> poly_reduce_mod(std::vector<long long> a, const std::vector<long long>& F, long long mod) {
    int f = (int)F.size() - 1;
    for (int d = (int)a.size() - 1; d >= f; --d) {
        long long q = a[d] % mod;
        if (q == 0) continue;
        for (int i = 0; i <= f; ++i) {
            a[d - f + i] = ((a[d - f + i] - q * F[i]) % mod + mod) % mod;
        }
    }
    a.resize(f);
    return a;
}

bool is_irreducible_mod_p(const std::vector<long long>& F, int p) {
    int f = (int)F.size() - 1;
    for (int d = 1; 2 * d <= f; ++d) {
        long total = ipow_small(p, d);
        for (long code = 0; code < total; ++code) {
            std::vector<long long> g(d + 1, 0);
            g[d] = 1;
            long cc = code;
            for (int i = 0; i < d; ++i) {
                g[i] = cc % p;
                cc /= p;
            }
            std::vector<long long> rem = F;
            for (int dd = (int)rem.size() - 1; dd >= d; --dd) {
                long long q = rem[dd] % p;
                if (q == 0) continue;
                for (int i = 0; i <= d; ++i) rem[dd - d + i] = ((rem[dd - d + i] - q * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

// monic irreducibles of degree f mod p, ordered lexicographically by the
// coefficient tuple (a_{f-1}, ..., a_0); index 0 is the least.
std::vector<long long> nth_irreducible(int p, int f, int index) {
    long total = ipow_small(p, f);
    int seen = 0;
    for (long code = 0; code < total; ++code) {
        std::vector<long long> F(f + 1, 0);
        F[f] = 1;
        for (int i = 0; i < f; ++i) F[f - 1 - i] = (code / ipow_small(p, f - 1 - i)) % p;
        if (is_irreducible_mod_p(F, p)) {
            if (seen == index) return F;
            ++seen;
        }
    }
    throw std::logic_error("nth_irreducible: exhausted");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// p-valuation of a residue mod p^m; zero gets m.
inline int val_of(long long x, int p, int m) {
    if (x == 0) return m;
    int v = 0;
    while (x % p == 0 && v < m) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

RingModel build_ring_model(int p, int m, const DecompType& decomp, int poly_choice) {
    if (!is_prime(p)) throw std::invalid_argument("build_ring_model: p must be prime");
    if (m < 1) throw std::invalid_argument("build_ring_model: m >= 1 required");
    RingModel model;
    model.p = p;
    model.m = m;
    model.decomp = decomp;
    model.n = decomp.n();
    model.pm = 1;
    for (int i = 0; i < m; ++i) {
        if (model.pm > (1LL << 40)) throw ResourceLimitError("build_ring_model: p^m too large", int_pow(p, m));
        model.pm *= p;
    }
    int n = model.n;
    model.c.assign((size_t)n * n * n, 0);
    auto C = decomp.C();
    for (int i = 0; i < decomp.g(); ++i) {
        int f = decomp.f[i], e = decomp.e[i];
        std::vector<long long> F = nth_irreducible(p, f, poly_choice);
        model.minpoly.push_back(F);
        // basis alpha_{C_{i-1} + s f + j+1} = x^j y^s; products reduce the
        // x-part modulo F and fold y^e = p
        for (int s1 = 0; s1 < e; ++s1)
            for (int j1 = 0; j1 < f; ++j1)
                for (int s2 = 0; s2 < e; ++s2)
                    for (int j2 = 0; j2 < f; ++j2) {
                        std::vector<long long> xx(j1 + j2 + 1, 0);
                        xx[j1 + j2] = 1;
                        std::vector<long long> red = poly_reduce_mod(std::move(xx), F, model.pm);
                        int s = s1 + s2;
                        long long scale = 1;
                        if (s >= e) {
                            s -= e;
                            scale = p;
                        }
                        int a = C[i] + s1 * f + j1;
                        int b = C[i] + s2 * f + j2;
                        for (int w = 0; w < f; ++w)
                            model.c[(size_t)(a * n + b) * n + (C[i] + s * f + w)] = (red[w] * scale) % model.pm;
                    }
    }
    return model;
}

std::vector<long long> HeisenbergModel::bracket_with_y(const std::vector<long long>& a, int u) const {
    std::vector<long long> z(ring.n, 0);
    bracket_y_into(a.data(), u, z.data());
    return z;
}

std::vector<long long> HeisenbergModel::bracket_with_x(const std::vector<long long>& b, int u) const {
    std::vector<long long> z(ring.n, 0);
    bracket_x_into(b.data(), u, z.data());
    return z;
}

void HeisenbergModel::bracket_y_into(const long long* a, int u, long long* z) const {
    const int nn = ring.n;
    for (int w = 0; w < nn; ++w) z[w] = 0;
    for (int k = 0; k < nn; ++k) {
        long long ak = a[k] % ring.pm;
        if (ak == 0) continue;
        const long long* row = &ring.c[(size_t)(k * nn + u) * nn];
        for (int w = 0; w < nn; ++w)
            if (row[w]) z[w] = (z[w] + ak * row[w]) % ring.pm;
    }
}

void HeisenbergModel::bracket_x_into(const long long* b, int u, long long* z) const {
    const int nn = ring.n;
    for (int w = 0; w < nn; ++w) z[w] = 0;
    for (int k = 0; k < nn; ++k) {
        long long bk = b[k] % ring.pm;
        if (bk == 0) continue;
        const long long* row = &ring.c[(size_t)(u * nn + k) * nn];
        for (int w = 0; w < nn; ++w)
            if (row[w]) z[w] = ((z[w] - bk * row[w]) % ring.pm + ring.pm) % ring.pm;
    }
}

HeisenbergModel build_heisenberg_model(int p, int m, const DecompType& decomp, int poly_choice) {
    return HeisenbergModel{build_ring_model(p, m, decomp, poly_choice)};
}

Int hnf_count(int d, int k, int prime) {
    std::vector<Int> coeff(k + 1, 0);
    coeff[0] = 1;
    for (int i = 0; i < d; ++i) {
        Int pi = int_pow(prime, i);
        for (int j = 1; j <= k; ++j) coeff[j] += coeff[j - 1] * pi;
    }
    return coeff[k];
}

namespace {

struct HnfEnumerator {
    int d;
    int prime;
    long long pw[32];
    std::vector<std::vector<long long>> B;
    std::vector<int> a;
    const std::function<void(const std::vector<std::vector<long long>>&)>* cb;

    HnfEnumerator(int d_, int prime_) : d(d_), prime(prime_), B(d_, std::vector<long long>(d_, 0)), a(d_, 0) {
        pw[0] = 1;
        for (int i = 1; i < 32; ++i) pw[i] = pw[i - 1] * prime;
    }

    void cols(int j, int left) {
        if (j == d) {
            if (left == 0) (*cb)(B);
            return;
        }
        for (a[j] = 0; a[j] <= left; ++a[j]) {
            B[j][j] = pw[a[j]];
            rows(j, j - 1, left);
        }
        B[j][j] = 0;
        a[j] = 0;
    }

    void rows(int j, int i, int left) {
        if (i < 0) {
            cols(j + 1, left - a[j]);
            return;
        }
        for (long long v = 0; v < pw[a[i]]; ++v) {
            B[i][j] = v;
            rows(j, i - 1, left);
        }
        B[i][j] = 0;
    }
};

}  // namespace

void for_each_hnf(int d, int k, int prime, const std::function<void(const std::vector<std::vector<long long>>&)>& cb) {
    HnfEnumerator e(d, prime);
    e.cb = &cb;
    e.cols(0, k);
}

namespace {

// Sorted non-increasing p-valuations of the elementary divisors of the
// integer matrix [vectors | p^m I]; vectors given as a flat array of
// `count` columns of height n, entries mod p^m.  Computed by local (p-adic)
// elimination: pick a pivot of globally minimal valuation, clear its row by
// column operations and its column by row operations (all multipliers exact
// mod p^m since the pivot valuation is minimal), and recurse.  Valuations
// cap at m, which is where the p^m I columns stop mattering.
std::vector<int> span_type_flat(const long long* vecs, int count, int n, int p, int m, long long pm) {
    std::vector<std::vector<long long>> a(n, std::vector<long long>(count));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < count; ++j) a[i][j] = ((vecs[(size_t)j * n + i] % pm) + pm) % pm;
    std::vector<char> row_done(n, 0), col_done(count, 0);
    std::vector<int> vals;
    for (int stage = 0; stage < n; ++stage) {
        int pi = -1, pj = -1, pv = m;
        for (int i = 0; i < n && pv > 0; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < count; ++j) {
                if (col_done[j] || a[i][j] == 0) continue;
                int v = val_of(a[i][j], p, m);
                if (v < pv) {
                    pv = v;
                    pi = i;
                    pj = j;
                    if (v == 0) break;
                }
            }
        }
        if (pi < 0) break;  // everything left vanishes mod p^m
        vals.push_back(pv);
        long long pvpow = 1;
        for (int k = 0; k < pv; ++k) pvpow *= p;
        long long unit = a[pi][pj] / pvpow;  // prime-to-p part, invertible mod p^m
        long long uin = 0;
        {
            // extended Euclid for the inverse of unit mod p^m
            long long r0 = pm, r1 = unit % pm, s0 = 0, s1 = 1;
            while (r1 != 0) {
                long long q = r0 / r1;
                long long r2 = r0 - q * r1, s2 = s0 - q * s1;
                r0 = r1;
                r1 = r2;
                s0 = s1;
                s1 = s2;
            }
            uin = ((s0 % pm) + pm) % pm;
        }
        // clear the pivot row with column operations
        for (int j = 0; j < count; ++j) {
            if (j == pj || col_done[j] || a[pi][j] == 0) continue;
            long long f = (__int128)(a[pi][j] / pvpow) * uin % pm;
            for (int i = 0; i < n; ++i) {
                if (row_done[i]) continue;
                a[i][j] = ((a[i][j] - (__int128)f * a[i][pj]) % pm + pm) % pm;
            }
        }
        // clear the pivot column with row operations
        for (int i = 0; i < n; ++i) {
            if (i == pi || row_done[i] || a[i][pj] == 0) continue;
            long long f = (__int128)(a[i][pj] / pvpow) * uin % pm;
            for (int j = 0; j < count; ++j) {
                if (col_done[j]) continue;
                a[i][j] = ((a[i][j] - (__int128)f * a[pi][j]) % pm + pm) % pm;
            }
        }
        row_done[pi] = 1;
        col_done[pj] = 1;
    }
    while ((int)vals.size() < n) vals.push_back(m);
    std::sort(vals.begin(), vals.end(), std::greater<int>());
    return vals;
}

}  // namespace

std::vector<int> commutator_type(const HeisenbergModel& model, const std::vector<std::vector<long long>>& B) {
    const int n = model.n();
    const int d = 2 * n;
    std::vector<long long> vecs((size_t)4 * n * n * n, 0);
    std::vector<long long> a(n), b(n);
    int cnt = 0;
    for (int j = 0; j < d; ++j) {
        for (int kk = 0; kk < n; ++kk) {
            a[kk] = ((B[2 * kk][j] % model.ring.pm) + model.ring.pm) % model.ring.pm;
            b[kk] = ((B[2 * kk + 1][j] % model.ring.pm) + model.ring.pm) % model.ring.pm;
        }
        for (int u = 0; u < n; ++u) {
            model.bracket_y_into(a.data(), u, &vecs[(size_t)cnt++ * n]);
            model.bracket_x_into(b.data(), u, &vecs[(size_t)cnt++ * n]);
        }
    }
    return span_type_flat(vecs.data(), cnt, n, model.ring.p, model.ring.m, model.ring.pm);
}

AdmissibleTuple ell_of_lattice(const RingModel& model, const std::vector<std::vector<long long>>& B) {
    const int n = model.n;
    if ((int)B.size() != 2 * n) throw std::invalid_argument("ell_of_lattice: matrix must be 2n x 2n");
    auto C = model.decomp.C();
    AdmissibleTuple out;
    out.decomp = model.decomp;
    out.ell.assign(n, 0);
    for (int i = 1; i <= model.decomp.g(); ++i) {
        int f = model.decomp.f[i - 1], e = model.decomp.e[i - 1];
        int lo = 2 * C[i - 1], hi = 2 * C[i];  // rows ]2C_{i-1}, 2C_i], 0-based [lo, hi)
        int eps = model.m;
        for (int r = lo; r < hi; ++r)
            for (int j = 0; j < 2 * n; ++j)
                eps = std::min(eps, val_of(((B[r][j] % model.pm) + model.pm) % model.pm, model.p, model.m));
        if (eps >= model.m)
            throw std::invalid_argument("ell_of_lattice: block " + std::to_string(i) + " vanishes mod p^m");
        int delta = 0;
        for (int d = 0; d < e; ++d) {
            bool found = false;
            for (int r = lo + 2 * d * f; r < lo + 2 * (d + 1) * f && !found; ++r)
                for (int j = 0; j < 2 * n && !found; ++j)
                    if (val_of(((B[r][j] % model.pm) + model.pm) % model.pm, model.p, model.m) == eps) found = true;
            if (found) {
                delta = d;
                break;
            }
        }
        for (int j = C[i - 1] + 1; j <= C[i]; ++j)
            out.ell[j - 1] = (j <= C[i - 1] + delta * f) ? eps + 1 : eps;
    }
    return out;
}

Int count_ideals(const HeisenbergModel& model, int k, const Int& work_limit) {
    const RingModel& R = model.ring;
    const int n = R.n;
    if (k < 0) throw std::invalid_argument("count_ideals: k >= 0 required");
    if (k >= R.m) throw std::invalid_argument("count_ideals: requires k < m (model precision)");

    {
        Int est = 0;
        for (int b = 0; b <= k; ++b) est += hnf_count(n, b, R.p) * hnf_count(2 * n, k - b, R.p);
        if (est > work_limit) throw ResourceLimitError("count_ideals: enumeration too large", est);
    }

    std::vector<long long> pw(32, 1);
    for (int i = 1; i < 32; ++i) pw[i] = pw[i - 1] * R.p;

    Int total = 0;

    // Full 3n x 3n column-Hermite representatives, rows ordered z_1..z_n then
    // x_1, y_1, ..., x_n, y_n.  The z-block (first n columns) is the
    // intersection with the center; a column passes iff its brackets with
    // every generator land back in that block.  The z-rows of the xy-columns
    // never enter the closure test, so each surviving structure stands for
    // exactly prod_i p^{zc_i * 2n} representatives.
    std::vector<int> zc(n, 0);
    std::vector<std::vector<long long>> Z(n, std::vector<long long>(n, 0));

    auto z_member = [&](const std::vector<long long>& w0) {
        std::vector<long long> w = w0;
        for (int i = n - 1; i >= 0; --i) {
            if (w[i] % Z[i][i] != 0) return false;
            long long x = w[i] / Z[i][i];
            for (int r = 0; r <= i; ++r) w[r] -= x * Z[r][i];
        }
        return true;
    };

    const int d = 2 * n;
    std::vector<int> xyc(d, 0);
    std::vector<std::vector<long long>> T(d, std::vector<long long>(d, 0));

    std::function<void(int, int)> xy_cols = [&](int j, int left) {
        if (j == d) {
            if (left != 0) return;
            Int combos = 1;
            for (int i = 0; i < n; ++i) combos *= int_pow(R.p, zc[i]);
            Int all = 1;
            for (int jj = 0; jj < d; ++jj) all *= combos;
            total += all;
            return;
        }
        for (xyc[j] = 0; xyc[j] <= left; ++xyc[j]) {
            T[j][j] = pw[xyc[j]];
            std::function<void(int)> rows = [&](int i) {
                if (i < 0) {
                    std::vector<long long> a(n), b(n);
                    for (int kk = 0; kk < n; ++kk) {
                        a[kk] = T[2 * kk][j];
                        b[kk] = T[2 * kk + 1][j];
                    }
                    for (int u = 0; u < n; ++u) {
                        if (!z_member(model.bracket_with_y(a, u))) return;
                        if (!z_member(model.bracket_with_x(b, u))) return;
                    }
                    xy_cols(j + 1, left - xyc[j]);
                    return;
                }
                for (long long v = 0; v < pw[xyc[i]]; ++v) {
                    T[i][j] = v;
                    rows(i - 1);
                }
                T[i][j] = 0;
            };
            rows(j - 1);
        }
        T[j][j] = 0;
        xyc[j] = 0;
    };

    std::function<void(int, int)> z_cols = [&](int j, int used) {
        if (j == n) {
            xy_cols(0, k - used);
            return;
        }
        for (zc[j] = 0; zc[j] + used <= k; ++zc[j]) {
            Z[j][j] = pw[zc[j]];
            std::function<void(int)> rows = [&](int i) {
                if (i < 0) {
                    z_cols(j + 1, used + zc[j]);
                    return;
                }
                for (long long v = 0; v < pw[zc[i]]; ++v) {
                    Z[i][j] = v;
                    rows(i - 1);
                }
                Z[i][j] = 0;
            };
            rows(j - 1);
        }
        Z[j][j] = 0;
        zc[j] = 0;
    };
    z_cols(0, 0);
    return total;
}

namespace {

// One slice of the layered enumeration: all 2n-dimensional Hermite forms of
// index p^a for a <= k whose first diagonal exponent is a0.
struct LayeredSlice {
    const HeisenbergModel* model;
    int k, a0;
    int n, d;
    long long pw[32];
    std::vector<std::vector<long long>> B;
    std::vector<int> a;
    std::vector<long long> vecs;  // bracket span buffer
    std::vector<long long> xc, yc;
    std::map<std::pair<std::vector<int>, int>, long long> counts;  // (type, b) -> #lattices

    LayeredSlice(const HeisenbergModel* m_, int k_, int a0_)
        : model(m_), k(k_), a0(a0_), n(m_->n()), d(2 * m_->n()),
          B(d, std::vector<long long>(d, 0)), a(d, 0),
          vecs((size_t)4 * n * n * n, 0), xc(n), yc(n) {
        pw[0] = 1;
        for (int i = 1; i < 32; ++i) pw[i] = pw[i - 1] * model->ring.p;
    }

    void leaf(int used) {
        int cnt = 0;
        for (int j = 0; j < d; ++j) {
            for (int kk = 0; kk < n; ++kk) {
                xc[kk] = B[2 * kk][j];
                yc[kk] = B[2 * kk + 1][j];
            }
            for (int u = 0; u < n; ++u) {
                model->bracket_y_into(xc.data(), u, &vecs[(size_t)cnt++ * n]);
                model->bracket_x_into(yc.data(), u, &vecs[(size_t)cnt++ * n]);
            }
        }
        std::vector<int> type = span_type_flat(vecs.data(), cnt, n, model->ring.p, model->ring.m, model->ring.pm);
        counts[{std::move(type), k - used}] += 1;
    }

    void cols(int j, int used) {
        if (j == d) {
            leaf(used);
            return;
        }
        int from = (j == 0) ? a0 : 0;
        int to = (j == 0) ? a0 : k - used;
        for (a[j] = from; a[j] <= to && used + a[j] <= k; ++a[j]) {
            B[j][j] = pw[a[j]];
            rows(j, j - 1, used);
        }
        B[j][j] = 0;
        a[j] = 0;
    }

    void rows(int j, int i, int used) {
        if (i < 0) {
            cols(j + 1, used + a[j]);
            return;
        }
        for (long long v = 0; v < pw[a[i]]; ++v) {
            B[i][j] = v;
            rows(j, i - 1, used);
        }
        B[i][j] = 0;
    }

    Int total() const {
        Int t = 0;
        for (const auto& [key, cnt] : counts) {
            const auto& [type, b] = key;
            Int inner = subgroup_count_by_index(Partition(type), b, model->ring.p);
            if (inner != 0) t += inner * int_pow(model->ring.p, 2 * n * b) * cnt;
        }
        return t;
    }
};

}  // namespace

Int count_ideals_layered(const HeisenbergModel& model, int k, int threads, const Int& work_limit) {
    const RingModel& R = model.ring;
    if (k < 0) throw std::invalid_argument("count_ideals_layered: k >= 0 required");
    if (k >= R.m) throw std::invalid_argument("count_ideals_layered: requires k < m");
    {
        Int est = 0;
        for (int a = 0; a <= k; ++a) est += hnf_count(2 * R.n, a, R.p);
        if (est > work_limit) throw ResourceLimitError("count_ideals_layered: enumeration too large", est);
    }

    auto run_slice = [&](int a0) -> Int {
        LayeredSlice slice(&model, k, a0);
        slice.cols(0, 0);
        return slice.total();
    };

    if (threads <= 1) {
        Int total = 0;
        for (int a0 = 0; a0 <= k; ++a0) total += run_slice(a0);
        return total;
    }
    std::vector<std::future<Int>> futs;
    for (int a0 = 0; a0 <= k; ++a0) futs.push_back(std::async(std::launch::async, run_slice, a0));
    Int total = 0;
    for (auto& f : futs) total += f.get();
    return total;
}

bool lemma_l_check(const DecompType& decomp, const std::vector<int>& ell, int N, int prime,
                   std::vector<Int>* lhs_out, std::vector<Int>* rhs_out) {
    if (!is_admissible(ell, decomp)) throw std::invalid_argument("lemma_l_check: ell not admissible for the type");
    int n = decomp.n();
    int d = 2 * n;
    {
        Int est = 0;
        for (int a = 0; a <= N; ++a) est += hnf_count(d, a, prime);
        if (est > (Int(1) << 25)) throw ResourceLimitError("lemma_l_check: enumeration too large", est);
    }
    RingModel model = build_ring_model(prime, N + 1, decomp);

    std::vector<Int> lhs(N + 1, 0);
    for (int a = 0; a <= N; ++a) {
        for_each_hnf(d, a, prime, [&](const std::vector<std::vector<long long>>& B) {
            AdmissibleTuple got = ell_of_lattice(model, B);
            if (got.ell == ell) lhs[a] += 1;
        });
    }

    long ellsum = std::accumulate(ell.begin(), ell.end(), 0L);
    RatFunc rhs_rf = rf_mul(rf_mul(zeta_ab(2 * n), split_prefactor(decomp.f)),
                            Poly::var(var_t(), (int)(2 * ellsum)));
    auto rhs_coeffs = rf_series(rhs_rf, N).evaluate_p(prime);
    std::vector<Int> rhs;
    for (const Rat& c : rhs_coeffs) {
        if (boost::multiprecision::denominator(c) != 1) throw std::logic_error("lemma_l_check: non-integer coefficient");
        rhs.push_back(Int(boost::multiprecision::numerator(c)));
    }

    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return lhs == rhs;
}

}  // namespace hzeta
