#include <gtest/gtest.h>

#include "oih/io.hpp"
#include "oih/series.hpp"

using namespace oih;

namespace {

std::string doc(const std::string& body) { return R"({"schema_version": 1, "c": 1)" + body + "}"; }

}  // namespace

TEST(Document, Minimal) {
    auto d = parse_document_text(doc(""));
    EXPECT_TRUE(d.quotient);
    EXPECT_EQ(d.presentation.c, 1);
    ASSERT_EQ(d.presentation.summands.size(), 1u);
    EXPECT_EQ(d.presentation.summands[0].d, 0);
    EXPECT_TRUE(d.presentation.generators.empty());
}

TEST(Document, FullPresentation) {
    auto d = parse_document_text(doc(R"(, "mode": "submodule", "category": "OI",
        "summands": [{"d": 1, "shift": -1}],
        "generators": [{"summand": 0, "width": 2, "pi": [2], "exponents": [[1], [0]]}])"));
    EXPECT_FALSE(d.quotient);
    EXPECT_EQ(d.presentation.summands[0].shift, -1);
    ASSERT_EQ(d.presentation.generators.size(), 1u);
    EXPECT_EQ(d.presentation.generators[0].to_string(), "x{1,1} e(2) @2");
}

TEST(Document, Errors) {
    auto fails = [](const std::string& text, const std::string& needle) {
        try {
            parse_document_text(text);
        } catch (const Error& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
        return false;
    };
    EXPECT_TRUE(fails(R"({"c": 1})", "schema_version"));
    EXPECT_TRUE(fails(R"({"schema_version": 2, "c": 1})", "schema_version"));
    EXPECT_TRUE(fails(doc(R"(, "extra": 1)"), "unknown field 'extra'"));
    EXPECT_TRUE(fails(doc(R"(, "summands": [{"d": 2}], "generators": [{"width": 2, "pi": [2, 1]}])"),
                      "strictly increasing"));
    EXPECT_TRUE(fails(doc(R"(, "generators": [{"width": 2, "exponents": [[1]]}])"), "column"));
    EXPECT_TRUE(fails(doc(R"(, "mode": "both")"), "mode"));
    EXPECT_TRUE(fails("{", "malformed JSON"));
    EXPECT_TRUE(fails(doc(R"(, "category": "FI", "summands": [{"d": 1}])"), "FI"));
    EXPECT_TRUE(fails(doc(R"(, "generators": [{"summand": 1, "width": 1}])"), "missing summand"));
}

TEST(Document, GroebnerElements) {
    auto d = parse_document_text(doc(R"(, "asserted_groebner": [{"terms": [
        {"coefficient": "-12345678901234567890", "width": 2, "exponents": [[2], [0]]},
        {"coefficient": 1, "width": 2, "exponents": [[1], [1]]}]}])"));
    ASSERT_EQ(d.asserted_groebner.size(), 1u);
    EXPECT_EQ(d.asserted_groebner[0][0].coeff, BigInt("-12345678901234567890"));
    auto p = d.effective();
    ASSERT_EQ(p.generators.size(), 1u);
    EXPECT_EQ(p.generators[0].to_string(), "x{1,1} x{1,2} @2");
    EXPECT_THROW(parse_document_text(doc(R"(, "asserted_groebner": [{"terms": [
        {"coefficient": 1, "width": 1, "exponents": [[1]]},
        {"coefficient": 1, "width": 2, "exponents": [[1], [1]]}]}])")),
                 WidthMismatch);
}

TEST(Document, PresentationRoundTrip) {
    ModulePresentation p;
    p.c = 2;
    p.summands = {{0, 0}, {1, 2}};
    p.generators = {Monomial::make(2, 1, {}, {{1, 2}}, 0), Monomial::make(2, 2, {2}, {{0, 1}, {0, 0}}, 1)};
    Json j = to_json(p);
    j["schema_version"] = kSchemaVersion;
    auto back = parse_document(j).presentation;
    EXPECT_EQ(back.generators, p.generators);
    EXPECT_EQ(back.summands.size(), 2u);
    EXPECT_EQ(back.summands[1].shift, 2);
}

TEST(Document, SeriesJson) {
    Json j = to_json(free_series(1, 1));
    EXPECT_EQ(j["text"], "s*(1 - t)/(1 - t - s)^2");
    EXPECT_EQ(j["denominator"][0]["exponent"], 2);
    EXPECT_EQ(j["t_power"], 0);
}

TEST(Document, CachedSeries) {
    auto d = parse_document_text(doc(R"x(, "cached_series": "1/(1 - s - s*t)")x"));
    ASSERT_TRUE(d.cached_series.has_value());
    auto r = parse_rational(*d.cached_series);
    EXPECT_EQ(expand_series(r, 2, 1).at(2, 1), 2);
}

TEST(Parser, Grammar) {
    EXPECT_TRUE(same_function(parse_rational("(1 - t)/(1 - t - s)"), free_series(1, 0)));
    EXPECT_TRUE(same_function(parse_rational("s*(1-t)/(1-t-s)^2"), free_series(1, 1)));
    auto shifted = parse_rational("t^-2*(1 - t)/(1 - t - s)");
    EXPECT_EQ(shifted.t_power, -2);
    EXPECT_TRUE(same_function(parse_rational("-(2 + 3*s*t^2)"), FactoredRational(-BiPoly(2) - BiPoly::term(3, 1, 2))));
    EXPECT_THROW(parse_rational("1 +"), InvalidInput);
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("q"), InvalidInput);
}
