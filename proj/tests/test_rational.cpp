#include <gtest/gtest.h>

#include <random>

#include "oih/io.hpp"
#include "oih/rational.hpp"

using namespace oih;

namespace {

BiPoly S() { return BiPoly::s(); }
BiPoly T() { return BiPoly::t(); }
BiPoly one() { return BiPoly(1); }
BiPoly omt(int k = 1) { return BiPoly(UniPoly::one_minus_t(k)); }

std::vector<std::vector<BigInt>> rows(const SeriesWindow& w) { return w.table; }
std::vector<std::vector<BigInt>> R(std::initializer_list<std::initializer_list<int>> r) {
    std::vector<std::vector<BigInt>> out;
    for (auto row : r) {
        std::vector<BigInt> v;
        for (int x : row) v.push_back(x);
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(ExpandSeries, FreeModuleRows) {
    FactoredRational r(omt(), {{omt() - S(), 1}});
    EXPECT_EQ(rows(expand_series(r, 2, 2)), R({{1, 0, 0}, {1, 1, 1}, {1, 2, 3}}));
}

TEST(ExpandSeries, GeometricSeries) {
    FactoredRational r(one(), {{one() - S(), 1}});
    EXPECT_EQ(rows(expand_series(r, 3, 1)), R({{1, 0}, {1, 0}, {1, 0}, {1, 0}}));
}

TEST(ExpandSeries, BinomialRows) {
    FactoredRational r(one(), {{one() - S() * (one() + T()), 1}});
    EXPECT_EQ(rows(expand_series(r, 2, 2)), R({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
}

TEST(ExpandSeries, SingularAtOrigin) {
    EXPECT_THROW(FactoredRational(one(), {{S(), 1}}), SingularAtOrigin);
}

TEST(ExpandSeries, NegativeTPower) {
    FactoredRational r(one(), {{one() - S(), 1}}, -2);
    auto w = expand_series(r, 2, 1);
    EXPECT_EQ(w.j_lo, -2);
    EXPECT_EQ(w.at(1, -2), 1);
    EXPECT_EQ(w.at(1, 0), 0);
}

TEST(Reduce, CommonFactor) {
    FactoredRational r(omt(2), {{omt(), 1}, {omt() - S(), 1}});
    auto q = reduce_rational(r);
    EXPECT_EQ(q.to_string(), "(1 - t)/(1 - t - s)");
    EXPECT_TRUE(same_function(q, r));
}

TEST(Reduce, ZeroNumerator) {
    FactoredRational r(BiPoly(), {{omt() - S(), 1}});
    auto q = reduce_rational(r);
    EXPECT_TRUE(q.is_zero());
    EXPECT_TRUE(q.factors.empty());
    EXPECT_EQ(q.to_string(), "0");
}

TEST(Reduce, CancelsTrackedFactor) {
    FactoredRational r(omt() - S(), {{omt() - S(), 1}, {one() - S(), 1}});
    EXPECT_EQ(reduce_rational(r).to_string(), "1/(1 - s)");
}

TEST(Reduce, GcdFallback) {
    // numerator shares a factor with the expanded denominator but not with
    // any single tracked factor
    BiPoly f = omt() - S(), g = one() - S();
    FactoredRational r(f * g, {{f * g, 1}, {one() + S() * T(), 1}});
    auto q = reduce_rational(r);
    EXPECT_EQ(q.to_string(), "1/(1 + s*t)");
}

TEST(Reduce, ExpansionInvariant) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int it = 0; it < 30; ++it) {
        BiPoly num;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) num += BiPoly::term(coef(rng), i, j);
        BiPoly common = omt(it % 3) - S() * (one() + T() * (it % 2));
        FactoredRational r(num * common, {{common, 2}, {one() - S(), 1}});
        auto q = reduce_rational(r);
        EXPECT_EQ(expand_series(q, 4, 4), expand_series(r, 4, 4));
        EXPECT_EQ(gcd_bipoly(q.numerator, q.denominator()), one());
    }
}

TEST(Arithmetic, AddAndShift) {
    FactoredRational a(omt(), {{omt() - S(), 1}});
    FactoredRational b(one(), {{one() - S(), 1}});
    auto sum = a + b, diff = a - b;
    auto wa = expand_series(a, 4, 4), wb = expand_series(b, 4, 4), ws = expand_series(sum, 4, 4),
         wd = expand_series(diff, 4, 4);
    for (int n = 0; n <= 4; ++n)
        for (int j = 0; j <= 4; ++j) {
            EXPECT_EQ(ws.at(n, j), wa.at(n, j) + wb.at(n, j));
            EXPECT_EQ(wd.at(n, j), wa.at(n, j) - wb.at(n, j));
        }
    auto shifted = expand_series(times_t(a, 2), 4, 6);
    for (int n = 0; n <= 4; ++n)
        for (int j = 0; j <= 4; ++j) EXPECT_EQ(shifted.at(n, j + 2), wa.at(n, j));
}

TEST(Arithmetic, MultiplicationCommutesWithExpansion) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int it = 0; it < 10; ++it) {
        BiPoly a, b;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                a += BiPoly::term(coef(rng), i, j);
                b += BiPoly::term(coef(rng), i, j);
            }
        auto wa = expand_series(FactoredRational(a), 4, 4), wb = expand_series(FactoredRational(b), 4, 4);
        auto wab = expand_series(FactoredRational(a * b), 4, 4);
        for (int n = 0; n <= 4; ++n)
            for (int j = 0; j <= 4; ++j) {
                BigInt acc = 0;
                for (int n1 = 0; n1 <= n; ++n1)
                    for (int j1 = 0; j1 <= j; ++j1) acc += wa.at(n1, j1) * wb.at(n - n1, j - j1);
                EXPECT_EQ(acc, wab.at(n, j));
            }
    }
}

TEST(Rendering, Grammar) {
    EXPECT_EQ(FactoredRational(S() * omt(), {{omt() - S(), 2}}).to_string(), "s*(1 - t)/(1 - t - s)^2");
    EXPECT_EQ(FactoredRational(omt(2), {{omt(2) - S(), 1}}).to_string(), "(1 - t)^2/(1 - 2*t + t^2 - s)");
    EXPECT_EQ(FactoredRational(-(one() + S())).to_string(), "-(1 + s)");
    EXPECT_EQ(FactoredRational(one(), {{one() - S(), 1}, {omt(), 1}}).to_string(), "1/((1 - t)*(1 - s))");
}

TEST(Rendering, ParserRoundTrip) {
    std::vector<FactoredRational> cases{
        FactoredRational(S() * omt(), {{omt() - S(), 2}}),
        FactoredRational(-(one() + S() * T()), {{one() - S(), 1}, {omt(), 3}}),
        FactoredRational(one() + T(), {{one() - S(), 1}}, -2),
        FactoredRational(BiPoly::term(3, 2, 1), {}),
    };
    for (const auto& r : cases) {
        auto back = parse_rational(r.to_string());
        EXPECT_TRUE(same_function(back, r)) << r.to_string();
        EXPECT_EQ(expand_series(back, 3, 3), expand_series(r, 3, 3)) << r.to_string();
    }
    EXPECT_THROW(parse_rational("1/(1 - s"), InvalidInput);
    EXPECT_THROW(parse_rational("1/s"), InvalidInput);
}
