#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oih/decomposition.hpp"

using namespace oih;
using oih::testing::all_monomials;
using oih::testing::free_module;
using oih::testing::ideal;
using oih::testing::ideal_monomial;

TEST(Res, Examples) {
    auto a = res(ideal_monomial({0, 1}));
    EXPECT_FALSE(a.in_g);
    EXPECT_EQ(a.mono, ideal_monomial({1}));
    auto b = res(Monomial::basis(1, 2, {2}));
    EXPECT_FALSE(b.in_g);
    EXPECT_EQ(b.mono, Monomial::basis(1, 1, {1}));
    auto c = res(Monomial::basis(1, 1, {1}));
    EXPECT_TRUE(c.in_g);
    EXPECT_EQ(c.mono, Monomial::basis(1, 0, {}));
    EXPECT_THROW(res(ideal_monomial({1, 0})), Column1NotEmpty);
    EXPECT_THROW(res(Monomial::basis(1, 0, {})), InvalidInput);
}

TEST(Res, Bijective) {
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {1, 2}}) {
        auto all = all_monomials(c, d, 5, 5);
        for (int n = std::max(1, d); n <= 5; ++n) {
            std::set<std::pair<bool, Monomial>> images;
            int count = 0;
            for (const auto& m : all)
                if (m.width == n && m.column_empty(1)) {
                    auto r = res(m);
                    images.insert({r.in_g, r.mono});
                    ++count;
                }
            EXPECT_EQ(static_cast<int>(images.size()), count);
            // F_{n-1} and G_{n-1} monomials of degree <= 5
            int target = 0;
            for (const auto& m : all)
                if (m.width == n - 1) ++target;
            if (d >= 1)
                for (const auto& m : all_monomials(c, d - 1, n - 1, 5))
                    if (m.width == n - 1) ++target;
            EXPECT_EQ(count, target) << c << "," << d << "," << n;
        }
    }
}

TEST(ComputeQ, Examples) {
    auto p = ideal(1, {ideal_monomial({1})});
    auto q0 = compute_q(p, {0});
    EXPECT_FALSE(q0.q_prime.has_value());
    EXPECT_EQ(q0.m, 1);
    EXPECT_EQ(q0.q_double_prime.generators, std::vector<Monomial>{ideal_monomial({1})});
    auto q1 = compute_q(p, {1});
    EXPECT_EQ(q1.q_double_prime.generators, std::vector<Monomial>{Monomial::basis(1, 1, {})});
    auto z = compute_q(ideal(1, {}), {0});
    EXPECT_TRUE(z.q_double_prime.generators.empty());
    auto z1 = compute_q(free_module(1, 1), {0});
    ASSERT_TRUE(z1.q_prime.has_value());
    EXPECT_TRUE(z1.q_prime->generators.empty());
    EXPECT_TRUE(z1.q_double_prime.generators.empty());
    EXPECT_THROW(compute_q(p, {0, 0}), InvalidInput);
    ModulePresentation two = free_module(1, 0);
    two.summands.push_back({0, 0});
    EXPECT_THROW(compute_q(two, {0}), InvalidInput);
}

TEST(VerifyDecomposition, Examples) {
    auto p = ideal(1, {ideal_monomial({1})});
    auto q = compute_q(p, {0});
    auto chk = check_decomposition(p, q, 3, 4);
    EXPECT_TRUE(chk.holds);
    EXPECT_EQ(chk.lhs, (std::vector<BigInt>{1, 0, 0, 0, 0}));
    EXPECT_TRUE(verify_decomposition(ideal(1, {}), {0}, 2, 4));
    EXPECT_TRUE(verify_decomposition(free_module(1, 2), {1}, 3, 4));
    EXPECT_TRUE(verify_decomposition(ideal(1, {ideal_monomial({2})}), {5}, 3, 4));
    EXPECT_THROW(check_decomposition(p, q, 1, 4), InvalidInput);
}

TEST(VerifyDecomposition, RandomInstances) {
    for (const auto& p : oih::testing::single_summand_corpus(51, 25)) {
        std::vector<int> e(p.c, 0);
        while (true) {
            auto q = compute_q(p, e);
            for (int n = q.m + 1; n <= q.m + 3; ++n) EXPECT_TRUE(check_decomposition(minimalize(p), q, n, 5).holds);
            EXPECT_TRUE(contains_at_generation_width(minimalize(p), q));
            EXPECT_TRUE(check_size(p, q).consistent);
            int k = 0;
            while (k < p.c && e[k] == 2) e[k++] = 0;
            if (k == p.c) break;
            ++e[k];
        }
    }
}

TEST(SizeComparison, MonotoneInE) {
    for (const auto& p : oih::testing::single_summand_corpus(52, 20)) {
        std::vector<int> e(p.c, 0), f(p.c, 0);
        f[0] = 1;
        auto se = size_invariants(compute_q(p, e).q_double_prime).si;
        auto sf = size_invariants(compute_q(p, f).q_double_prime).si;
        EXPECT_TRUE(si_ge(se, sf));
    }
}

TEST(SizeCheck, SquareIdeal) {
    auto p = ideal(1, {ideal_monomial({2})});
    auto q = compute_q(p, {0});
    auto s = check_size(p, q);
    EXPECT_TRUE(s.inequality);
    EXPECT_TRUE(s.consistent);
    EXPECT_TRUE(si_ge(std::nullopt, BigInt(3)));
    EXPECT_FALSE(si_ge(BigInt(3), std::nullopt));
}

TEST(RepeatedDivision, Identity) {
    EXPECT_TRUE(check_repeated_division(ideal(1, {ideal_monomial({2, 1})}), 3));
    EXPECT_TRUE(check_repeated_division(free_module(2, 1), 2));
    for (const auto& p : oih::testing::corpus(53, 15, {2, 2, 3, 3, 3, 2, 1})) {
        int wi = size_invariants(p).wi_plus.value_or(0);
        for (int n = 1; n <= wi + 2; ++n) EXPECT_TRUE(check_repeated_division(p, n));
    }
    EXPECT_THROW(check_repeated_division(free_module(1, 0), 0), InvalidInput);
}

TEST(RepeatedDivision, SingleForm) {
    auto p = ideal(1, {ideal_monomial({2, 1}), ideal_monomial({0, 3})});
    EXPECT_TRUE(check_single_division(p, 3, 1, 2));
    EXPECT_TRUE(check_single_division(p, 3, 1, 4));
    EXPECT_THROW(check_single_division(p, 3, 1, 1), InvalidInput);
}
