#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oih/series.hpp"

using namespace oih;
using oih::testing::free_module;
using oih::testing::ideal;
using oih::testing::ideal_monomial;

namespace {

BiPoly S() { return BiPoly::s(); }
BiPoly T() { return BiPoly::t(); }
BiPoly one() { return BiPoly(1); }
BiPoly omt(int k = 1) { return BiPoly(UniPoly::one_minus_t(k)); }

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
    ModulePresentation r = a;
    int off = static_cast<int>(a.summands.size());
    r.summands.insert(r.summands.end(), b.summands.begin(), b.summands.end());
    for (auto g : b.generators) {
        g.summand += off;
        r.generators.push_back(g);
    }
    return r;
}

}  // namespace

TEST(FreeSeries, Examples) {
    EXPECT_EQ(free_series(1, 0).to_string(), "(1 - t)/(1 - t - s)");
    EXPECT_EQ(free_series(2, 0).to_string(), "(1 - t)^2/(1 - 2*t + t^2 - s)");
    EXPECT_EQ(free_series(1, 1).to_string(), "s*(1 - t)/(1 - t - s)^2");
    EXPECT_THROW(free_series(0, 0), InvalidInput);
}

TEST(FreeSeries, BinomialWindow) {
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {1, 2}, {2, 1}, {3, 0}}) {
        auto w = expand_series(free_series(c, d), 5, 5);
        auto o = widthwise_window(free_module(c, d), true, 5, 5);
        EXPECT_FALSE(first_mismatch(w, o).has_value()) << c << "," << d;
    }
}

TEST(SubmoduleSeries, Examples) {
    EXPECT_TRUE(submodule_series({}, 1, 0).is_zero());
    auto unit = submodule_series({Monomial::basis(1, 0, {})}, 1, 0);
    EXPECT_TRUE(same_function(unit, free_series(1, 0)));
    auto x = submodule_series({ideal_monomial({1})}, 1, 0);
    EXPECT_TRUE(same_function(x, free_series(1, 0) - FactoredRational(one(), {{one() - S(), 1}})));
    EXPECT_THROW(submodule_series({Monomial::basis(1, 1, {1})}, 1, 0), SummandMismatch);
}

TEST(ModuleSeries, PrincipalIdealExamples) {
    EXPECT_EQ(module_series(ideal(1, {ideal_monomial({1})})).series.to_string(), "1/(1 - s)");
    auto sq = module_series(ideal(1, {ideal_monomial({2})})).series;
    EXPECT_TRUE(same_function(sq, FactoredRational(one(), {{one() - S() * (one() + T()), 1}})));
    auto xy = module_series(ideal(1, {ideal_monomial({1, 1})})).series;
    // K[x_1..x_n]/(x_i x_j : i < j) has Hilbert series 1 + n t/(1 - t)
    FactoredRational expected(omt() - S() + BiPoly::term(2, 1, 1), {{omt(), 1}, {one() - S(), 2}});
    EXPECT_TRUE(same_function(xy, expected));
}

TEST(ModuleSeries, SubmoduleMode) {
    auto p = ideal(1, {ideal_monomial({1})});
    auto sub = module_series(p, false).series;
    auto quo = module_series(p, true).series;
    EXPECT_TRUE(same_function(sub + quo, free_series(1, 0)));
}

TEST(ModuleSeries, Breakdown) {
    ModulePresentation p;
    p.c = 2;
    p.summands = {{0, 0}, {1, 1}};
    p.generators = {Monomial::make(2, 1, {}, {{1, 1}}, 0), Monomial::make(2, 2, {1}, {{0, 0}, {2, 0}}, 1)};
    auto h = module_series(p);
    ASSERT_EQ(h.breakdown.size(), 2u);
    EXPECT_GT(h.breakdown[0].automaton_states, 0);
    EXPECT_TRUE(same_function(h.breakdown[1].free, free_series(2, 1)));
    EXPECT_TRUE(h.reduced);
    EXPECT_FALSE(module_series(p, true, false).reduced);
}

TEST(ModuleSeries, OracleEquivalence) {
    for (const auto& p : oih::testing::corpus(1, 40)) {
        for (bool quotient : {true, false}) {
            auto h = module_series(p, quotient);
            auto mism = first_mismatch(expand_series(h.series, 5, 5), widthwise_window(p, quotient, 5, 5));
            EXPECT_FALSE(mism.has_value()) << "at (" << mism->n << "," << mism->j << ")";
        }
    }
}

TEST(ModuleSeries, Additivity) {
    auto ps = oih::testing::corpus(2, 20, {1, 2, 2, 3, 2, 1, 1});
    for (size_t k = 0; k + 1 < ps.size(); k += 2) {
        if (ps[k].c != ps[k + 1].c) continue;
        auto sum = module_series(direct_sum(ps[k], ps[k + 1])).series;
        auto parts = module_series(ps[k]).series + module_series(ps[k + 1]).series;
        EXPECT_TRUE(same_function(sum, parts));
    }
}

TEST(ModuleSeries, ShiftLaw) {
    for (auto p : oih::testing::corpus(3, 10, {2, 2, 2, 3, 2, 1, 0})) {
        auto base = module_series(p).series;
        for (int k : {-2, 1, 3}) {
            p.summands[0].shift = k;
            EXPECT_TRUE(same_function(module_series(p).series, times_t(base, k)));
        }
    }
}

TEST(ModuleSeries, NegativeShiftWindow) {
    ModulePresentation p = free_module(1, 0);
    p.summands[0].shift = -2;
    p.generators = {ideal_monomial({1})};
    auto h = module_series(p);
    EXPECT_EQ(h.series.t_power, -2);
    auto w = expand_series(h.series, 4, 3);
    EXPECT_FALSE(first_mismatch(w, widthwise_window(p, true, 4, 3)).has_value());
    EXPECT_EQ(w.at(3, -2), 1);
}

TEST(ModuleSeries, FiMatchesBruteForce) {
    for (const auto& p : oih::testing::fi_corpus(4, 12)) {
        auto h = module_series(p);
        EXPECT_FALSE(first_mismatch(expand_series(h.series, 4, 5), widthwise_window(p, true, 4, 5)).has_value());
    }
}

TEST(ModuleSeries, GroebnerLeadingTerms) {
    PolyElement f{{1, ideal_monomial({1, 1})}, {-1, ideal_monomial({2, 0})}};
    auto p = with_groebner_elements(ideal(1, {}), {f});
    EXPECT_EQ(p.generators.front(), ideal_monomial({1, 1}));
    auto h = module_series(p);
    EXPECT_FALSE(first_mismatch(expand_series(h.series, 5, 5), widthwise_window(p, true, 5, 5)).has_value());
}

TEST(ThreadCap, EnvironmentOverride) {
    setenv("OIH_THREADS", "1", 1);
    EXPECT_EQ(thread_cap(), 1u);
    auto a = module_series(direct_sum(ideal(1, {ideal_monomial({2})}), ideal(1, {ideal_monomial({1, 1})})));
    setenv("OIH_THREADS", "4", 1);
    EXPECT_EQ(thread_cap(), 4u);
    auto b = module_series(direct_sum(ideal(1, {ideal_monomial({2})}), ideal(1, {ideal_monomial({1, 1})})));
    unsetenv("OIH_THREADS");
    EXPECT_EQ(a.series.to_string(), b.series.to_string());
}
