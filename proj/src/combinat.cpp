#include "hzeta/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> r;
    for (int i = 0; i < 32; ++i)
        if (s & (1u << i)) r.push_back(i + 1);
    return r;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) throw std::invalid_argument("Partition: parts not non-increasing");
    }
}

long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

bool Partition::dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.length() != mu.length()) return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (mu.parts[i] > lambda.parts[i]) return false;
    return true;
}

Partition Partition::sorted_from(const std::vector<int>& l) {
    std::vector<int> p = l;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition dual_partition(const Partition& lambda) {
    std::vector<int> d;
    int max = lambda.length() ? lambda.parts[0] : 0;
    for (int i = 1; i <= max; ++i) {
        int c = 0;
        for (int x : lambda.parts)
            if (x >= i) ++c;
        d.push_back(c);
    }
    return Partition(std::move(d));
}

DyckWord::DyckWord(std::string w) : letters(std::move(w)) {
    int bal = 0;
    int zeros = 0;
    for (char c : letters) {
        if (c == '0') {
            ++bal;
            ++zeros;
        } else if (c == '1') {
            --bal;
        } else {
            throw std::invalid_argument("DyckWord: letter not in {0,1}");
        }
        if (bal < 0) throw std::invalid_argument("DyckWord: prefix with more ones than zeros");
    }
    if (bal != 0 || zeros * 2 != (int)letters.size()) throw std::invalid_argument("DyckWord: unbalanced");
}

std::vector<DyckWord> dyck_words(int n) {
    if (n < 1) throw std::invalid_argument("dyck_words: n >= 1 required");
    std::vector<DyckWord> out;
    std::string cur;
    std::function<void(int, int)> rec = [&](int zeros, int ones) {
        if ((int)cur.size() == 2 * n) {
            out.emplace_back(cur);
            return;
        }
        if (zeros < n) {
            cur.push_back('0');
            rec(zeros + 1, ones);
            cur.pop_back();
        }
        if (ones < zeros) {
            cur.push_back('1');
            rec(zeros, ones + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Subset BlockDecomposition::Lset() const {
    Subset s = 0;
    for (int i = 1; i < r; ++i) s |= 1u << (L[i] - 1);
    return s;
}

BlockDecomposition block_decomposition(const DyckWord& w) {
    BlockDecomposition b;
    b.L.push_back(0);
    b.M.push_back(0);
    size_t i = 0;
    const std::string& s = w.letters;
    int zeros = 0, ones = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == '0') ++zeros, ++i;
        while (i < s.size() && s[i] == '1') ++ones, ++i;
        b.L.push_back(zeros);
        b.M.push_back(ones);
        ++b.r;
    }
    return b;
}

DyckWord word_of_blocks(const BlockDecomposition& b) {
    std::string s;
    for (int i = 1; i <= b.r; ++i) {
        s.append(b.L[i] - b.L[i - 1], '0');
        s.append(b.M[i] - b.M[i - 1], '1');
    }
    return DyckWord(s);
}

DyckWord dyck_of_pair(const Partition& mu, const Partition& lambda) {
    if (!Partition::dominates(lambda, mu)) throw std::invalid_argument("dyck_of_pair: pair not dominated");
    int n = lambda.length();
    std::string s;
    int i = 1, j = 1;  // next lambda part, next mu part
    while (i <= n || j <= n) {
        if (i <= n && (j > n || lambda.part(i) >= mu.part(j))) {
            s.push_back('0');
            ++i;
        } else {
            s.push_back('1');
            ++j;
        }
    }
    return DyckWord(s);
}

SuccessiveDifferences successive_differences(const Partition& mu, const Partition& lambda, const DyckWord& w) {
    int n = lambda.length();
    BlockDecomposition b = block_decomposition(w);
    SuccessiveDifferences d;
    d.r.assign(n, 0);
    d.s.assign(n, 0);
    std::vector<char> isM(n + 1, 0), isL(n + 1, 0);
    std::vector<int> blockOfM(n + 1, 0), blockOfL(n + 1, 0);
    for (int i = 1; i <= b.r; ++i) {
        isM[b.M[i]] = 1;
        blockOfM[b.M[i]] = i;
        isL[b.L[i]] = 1;
        blockOfL[b.L[i]] = i;
    }
    for (int j = 1; j <= n; ++j) {
        if (isM[j]) {
            int i = blockOfM[j];
            d.r[j - 1] = mu.part(j) - lambda.part(b.L[i] + 1);  // lambda_{n+1} = 0
        } else {
            d.r[j - 1] = mu.part(j) - mu.part(j + 1);
        }
        if (isL[j]) {
            int i = blockOfL[j];
            d.s[j - 1] = lambda.part(j) - mu.part(b.M[i - 1] + 1);
        } else {
            d.s[j - 1] = lambda.part(j) - lambda.part(j + 1);
        }
    }
    return d;
}

JumpSets jump_sets(const Partition& mu, const Partition& lambda, const DyckWord& w) {
    BlockDecomposition b = block_decomposition(w);
    JumpSets js;
    js.Jmu.assign(b.r, 0);
    js.Jlambda.assign(b.r, 0);
    for (int i = 1; i <= b.r; ++i) {
        for (int j = 1; j <= b.M[i] - b.M[i - 1] - 1; ++j)
            if (mu.part(b.M[i] - j) > mu.part(b.M[i] - j + 1)) js.Jmu[i - 1] |= 1u << (j - 1);
        for (int j = 1; j <= b.L[i] - b.L[i - 1] - 1; ++j)
            if (lambda.part(b.L[i] - j) > lambda.part(b.L[i] - j + 1)) js.Jlambda[i - 1] |= 1u << (j - 1);
    }
    return js;
}

Int beta(const Partition& lambda) {
    int n = lambda.length();
    Subset J = 0;
    for (int j = 1; j <= n - 1; ++j)
        if (lambda.part(j) > lambda.part(j + 1)) J |= 1u << (j - 1);
    return multinomial_at_one(n, J);
}

Poly gaussian_binomial(int a, int b) {
    if (a < b || b < 0) throw std::invalid_argument("gaussian_binomial: need a >= b >= 0");
    Poly num = Poly::one();
    for (int i = a - b + 1; i <= a; ++i) {
        Poly f = Poly::one();
        f.add_term(Monomial::var(var_Y(), i), -1);
        num *= f;
    }
    for (int i = 1; i <= b; ++i) {
        auto q = num.divide_binomial(Monomial::var(var_Y(), i), +1);
        if (!q) throw std::logic_error("gaussian_binomial: non-exact division");
        num = std::move(*q);
    }
    return num;
}

Poly gaussian_multinomial(int n, Subset I) {
    Poly r = Poly::one();
    int top = n;
    auto elems = subset_elements(I);
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        if (*it >= n || *it < 1) throw std::invalid_argument("gaussian_multinomial: I must be a subset of [n-1]");
        r *= gaussian_binomial(top, *it);
        top = *it;
    }
    return r;
}

Int multinomial_at_one(int n, Subset I) {
    Int r = 1;
    int top = n;
    auto elems = subset_elements(I);
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        r *= binomial(top, *it);
        top = *it;
    }
    return r;
}

Subset descent_set(const Perm& sigma) {
    Subset d = 0;
    for (int i = 0; i + 1 < (int)sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) d |= 1u << i;
    return d;
}

int coxeter_length(const Perm& sigma) {
    int inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv;
}

int major_index(const Perm& sigma) {
    int m = 0;
    for (int i = 0; i + 1 < (int)sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) m += i + 1;
    return m;
}

bool WeakOrdering::valid() const {
    Subset full = h() >= 1 ? (1u << (h() - 1)) - 1 : 0;
    return (descent_set(sigma) & ~J) == 0 && (J & ~full) == 0;
}

std::string WeakOrdering::str() const {
    std::string s = "[";
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(sigma[i] + 1);
        if (J & (1u << i)) s += "|";
    }
    return s + "]";
}

std::vector<WeakOrdering> weak_orderings(int h) {
    if (h < 1) throw std::invalid_argument("weak_orderings: h >= 1 required");
    std::vector<WeakOrdering> out;
    Perm sigma(h);
    std::iota(sigma.begin(), sigma.end(), 0);
    Subset full = (1u << (h - 1)) - 1;
    do {
        Subset d = descent_set(sigma);
        for (Subset J = 0; J <= full; ++J)
            if ((d & ~J) == 0) out.push_back(WeakOrdering{sigma, J});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chain> chains(int h) {
    if (h < 1) throw std::invalid_argument("chains: h >= 1 required");
    Subset full = (1u << h) - 1;
    std::vector<Chain> out;
    Chain cur;
    // extend the current chain by any strictly larger proper subset
    std::function<void()> rec = [&]() {
        out.push_back(cur);
        Subset prev = cur.sets.empty() ? 0 : cur.sets.back();
        for (Subset s = 1; s < full; ++s) {
            if (cur.sets.empty()) {
                cur.sets.push_back(s);
                rec();
                cur.sets.pop_back();
            } else if (s != prev && (prev & ~s) == 0 && s > prev) {
                cur.sets.push_back(s);
                rec();
                cur.sets.pop_back();
            }
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

Chain phi(const WeakOrdering& v) {
    Chain c;
    Subset acc = 0;
    for (int i = 0; i < v.h(); ++i) {
        acc |= 1u << v.sigma[i];
        if (v.J & (1u << i)) c.sets.push_back(acc);
    }
    return c;
}

int OrderedSetPartition::g() const {
    Subset u = 0;
    for (Subset b : blocks) u |= b;
    return subset_size(u);
}

std::string OrderedSetPartition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += subset_name(blocks[i]);
    }
    return s + ")";
}

DecompType::DecompType(std::vector<int> e_, std::vector<int> f_) : e(std::move(e_)), f(std::move(f_)) {
    if (e.size() != f.size() || e.empty()) throw std::invalid_argument("DecompType: e, f must have equal positive length");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 1 || f[i] < 1) throw std::invalid_argument("DecompType: entries must be positive");
}

DecompType DecompType::unramified(std::vector<int> f_) {
    std::vector<int> ones(f_.size(), 1);
    return DecompType(std::move(ones), std::move(f_));
}

int DecompType::n() const {
    int s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += e[i] * f[i];
    return s;
}

std::vector<int> DecompType::C() const {
    std::vector<int> c{0};
    for (size_t i = 0; i < e.size(); ++i) c.push_back(c.back() + e[i] * f[i]);
    return c;
}

bool DecompType::is_unramified() const {
    for (int x : e)
        if (x != 1) return false;
    return true;
}

std::string DecompType::str() const {
    std::ostringstream os;
    os << "(e=(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "), f=(";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "))";
    return os.str();
}

std::vector<OrderedSetPartition> compatible_partitions(const DyckWord& w, const std::vector<int>& f) {
    int g = (int)f.size();
    int n = 0;
    for (int x : f) n += x;
    if (n != w.half_length()) throw std::invalid_argument("compatible_partitions: sum f != n");
    BlockDecomposition b = block_decomposition(w);
    std::vector<OrderedSetPartition> out;
    OrderedSetPartition cur;
    Subset full = (1u << g) - 1;
    std::function<void(int, Subset)> rec = [&](int i, Subset used) {
        if (i > b.r) {
            if (used == full) out.push_back(cur);
            return;
        }
        int want = b.L[i] - b.L[i - 1];
        Subset avail = full & ~used;
        for (Subset s = avail;; s = (s - 1) & avail) {
            if (s != 0) {
                int wsum = 0;
                for (int j = 0; j < g; ++j)
                    if (s & (1u << j)) wsum += f[j];
                if (wsum == want) {
                    cur.blocks.push_back(s);
                    rec(i + 1, used | s);
                    cur.blocks.pop_back();
                }
            }
            if (s == 0) break;
        }
    };
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

WeakOrdering phi_A(const OrderedSetPartition& A, const std::vector<WeakOrdering>& vs) {
    if (A.blocks.size() != vs.size()) throw std::invalid_argument("phi_A: block/ordering count mismatch");
    WeakOrdering v;
    int t = 0;
    for (size_t i = 0; i < A.blocks.size(); ++i) {
        auto elems = subset_elements(A.blocks[i]);  // a^{(i)}_1 < a^{(i)}_2 < ...
        int sz = (int)elems.size();
        if (vs[i].h() != sz) throw std::invalid_argument("phi_A: ordering size mismatch");
        for (int j = 0; j < sz; ++j) v.sigma.push_back(elems[vs[i].sigma[j]] - 1);
        for (int j = 1; j <= sz - 1; ++j)
            if (vs[i].J & (1u << (j - 1))) v.J |= 1u << (t + j - 1);
        t += sz;
        if (i + 1 < A.blocks.size()) v.J |= 1u << (t - 1);
    }
    return v;
}

bool partition_of_weak_ordering(const DyckWord& w, const std::vector<int>& f, const WeakOrdering& v,
                                OrderedSetPartition& A, std::vector<int>& t) {
    int g = (int)f.size();
    BlockDecomposition b = block_decomposition(w);
    std::vector<int> Cv(g + 1, 0);
    for (int i = 1; i <= g; ++i) Cv[i] = Cv[i - 1] + f[v.sigma[i - 1]];
    t.assign(1, 0);
    A.blocks.clear();
    int pos = 0;
    for (int i = 1; i <= b.r; ++i) {
        int target = b.L[i];
        int ti = -1;
        for (int j = pos + 1; j <= g; ++j)
            if (Cv[j] == target) {
                ti = j;
                break;
            }
        if (ti < 0) return false;
        if (i < b.r && !(v.J & (1u << (ti - 1)))) return false;
        Subset blk = 0;
        for (int j = pos + 1; j <= ti; ++j) blk |= 1u << v.sigma[j - 1];
        A.blocks.push_back(blk);
        t.push_back(ti);
        pos = ti;
    }
    return pos == g;
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Int ordered_bell(int n) {
    std::vector<Int> a(n + 1);
    a[0] = 1;
    for (int i = 1; i <= n; ++i) {
        a[i] = 0;
        for (int j = 1; j <= i; ++j) a[i] += binomial(i, j) * a[i - j];
    }
    return a[n];
}

}  // namespace hzeta
