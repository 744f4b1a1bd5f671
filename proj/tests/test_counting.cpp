#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hzeta/counting.hpp"
#include "hzeta/varreg.hpp"

using namespace hzeta;

namespace {

Partition random_partition(std::mt19937& rng, int n, int maxpart) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (int)(rng() % (maxpart + 1));
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

Partition random_dominated(std::mt19937& rng, const Partition& lam) {
    std::vector<int> v(lam.length());
    int prev = lam.length() ? lam.parts[0] : 0;
    for (int i = 0; i < lam.length(); ++i) {
        int hi = std::min(lam.parts[i], prev);
        v[i] = hi ? (int)(rng() % (hi + 1)) : 0;
        prev = v[i];
    }
    return Partition(v);
}

Rat at_p(const Poly& f, int p) { return f.evaluate({{var_p(), Rat(p)}}); }

}  // namespace

TEST_CASE("symbolic subgroup counts") {
    CHECK(alpha(Partition({1, 1}), Partition({1, 0})) == Poly::one() + Poly::var(var_p()));
    CHECK(alpha(Partition({2, 1}), Partition({1, 1})) == Poly::one());
    CHECK(alpha(Partition({3, 2}), Partition({3, 2})) == Poly::one());
    CHECK_THROWS_AS(alpha(Partition({1, 0}), Partition({2, 0})), std::invalid_argument);
}

TEST_CASE("brute-force subgroup counts") {
    CHECK(alpha_bruteforce(Partition({1, 1}), Partition({1, 0}), 3) == 4);
    CHECK(alpha_bruteforce(Partition({2}), Partition({1}), 2) == 1);
    CHECK(Rat(alpha_bruteforce(Partition({2, 2}), Partition({1, 1}), 2)) ==
          at_p(alpha(Partition({2, 2}), Partition({1, 1})), 2));
    // total subgroup count of (Z/p^2)^2 split by index
    Int total = 0;
    for (int b = 0; b <= 4; ++b) total += subgroup_count_by_index(Partition({2, 2}), b, 2);
    Int bytypes = 0;
    for (const auto& [mu, c] : subgroup_type_counts(Partition({2, 2}), 2)) bytypes += c;
    CHECK(total == bytypes);
    CHECK(subgroup_count_by_index(Partition({2, 2}), 2, 2) == Rat(at_p(alpha(Partition({2, 2}), Partition({1, 1})), 2) +
                                                                  at_p(alpha(Partition({2, 2}), Partition({2, 0})), 2)));
}

TEST_CASE("symbolic equals brute force on a grid") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + (int)(rng() % 4);
        Partition lam = random_partition(rng, n, 3);
        if (lam.size() > 6) continue;
        Partition mu = random_dominated(rng, lam);
        Poly a = alpha(lam, mu);
        CHECK(a.coefficients_nonnegative());
        CHECK(a.coefficients_integral());
        CHECK(a.is_polynomial());
        for (int p : {2, 3}) CHECK(at_p(a, p) == Rat(alpha_bruteforce(lam, mu, p)));
    }
}

TEST_CASE("block split identities") {
    // constant partitions: trivially true, empty lambda-interval included
    Partition c({2, 2, 2});
    DyckWord wc = dyck_of_pair(c, c);
    CHECK(block_decomposition(wc).r == 1);
    CHECK(check_mu_split(c, c, 1));
    CHECK(check_lambda_split(c, c, 1));

    // empty product case: lambda_{L_{i-1}+1} = mu_{M_{i-1}+1} on some block
    Partition lam({2, 2, 1}), mu({2, 1, 0});
    DyckWord w = dyck_of_pair(mu, lam);
    BlockDecomposition b = block_decomposition(w);
    for (int i = 1; i <= b.r; ++i) {
        CHECK(check_mu_split(lam, mu, i));
        CHECK(check_lambda_split(lam, mu, i));
    }

    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + (int)(rng() % 5);
        Partition L = random_partition(rng, n, 4);
        Partition M = random_dominated(rng, L);
        DyckWord ww = dyck_of_pair(M, L);
        BlockDecomposition bb = block_decomposition(ww);
        Poly prod = Poly::one();
        for (int i = 1; i <= bb.r; ++i) {
            CHECK(check_mu_split(L, M, i));
            CHECK(check_lambda_split(L, M, i));
            prod *= mu_split_rhs(L, M, i);
            prod *= lambda_split_rhs(L, M, i);
        }
        // the regrouped product reproduces the full count
        CHECK(prod == alpha(L, M));
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(subgroup_type_counts(Partition({1, 1, 1, 1, 1, 1, 1, 1, 1}), 2), ResourceLimitError);
    CHECK_THROWS_AS(subgroup_type_counts(Partition({1}), 7), ResourceLimitError);
}
