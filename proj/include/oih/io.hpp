#pragma once

// JSON input documents, JSON rendering of results, and a parser for the
// rendered rational-function grammar.

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oih/oi.hpp"
#include "oih/rational.hpp"

namespace oih {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct InputDocument {
    ModulePresentation presentation;
    bool quotient = true;
    std::vector<PolyElement> asserted_groebner;
    std::optional<std::string> cached_series;  // negative control for the oracle

    // Presentation actually fed to the series engine.
    ModulePresentation effective() const {
        return asserted_groebner.empty() ? presentation : with_groebner_elements(presentation, asserted_groebner);
    }
};

namespace detail {

inline void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidInput(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw InvalidInput("unknown field '" + k + "' in " + where);
}

inline int get_int(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw InvalidInput("missing field '" + key + "' in " + where);
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InvalidInput("field '" + key + "' in " + where + " must be an integer");
    return v.get<int>();
}

inline std::vector<int> get_int_list(const Json& v, const std::string& what) {
    if (!v.is_array()) throw InvalidInput(what + " must be a list of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw InvalidInput(what + " must be a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline Monomial parse_monomial(const Json& j, int c, const std::string& where, bool with_coefficient) {
    std::set<std::string> keys{"summand", "width", "pi", "exponents"};
    if (with_coefficient) keys.insert("coefficient");
    check_keys(j, keys, where);
    int summand = j.contains("summand") ? get_int(j, "summand", where) : 0;
    int width = get_int(j, "width", where);
    std::vector<int> pi = j.contains("pi") ? get_int_list(j.at("pi"), where + ".pi") : std::vector<int>{};
    std::vector<std::vector<int>> cols;
    if (j.contains("exponents")) {
        const auto& e = j.at("exponents");
        if (!e.is_array()) throw InvalidInput(where + ".exponents must be a list of columns");
        for (const auto& col : e) cols.push_back(get_int_list(col, where + ".exponents column"));
    }
    for (size_t k = 1; k < pi.size(); ++k)
        if (pi[k] <= pi[k - 1]) throw InvalidInput(where + ".pi must be strictly increasing");
    return Monomial::make(c, width, pi, cols, summand);
}

inline BigInt parse_coefficient(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        size_t k = s[0] == '-' ? 1 : 0;
        if (s.size() == k) throw InvalidInput(where + ": empty coefficient");
        for (size_t i = k; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidInput(where + ": bad coefficient");
        return BigInt(s);
    }
    throw InvalidInput(where + ": coefficient must be an integer or a decimal string");
}

}  // namespace detail

inline InputDocument parse_document(const Json& j) {
    detail::check_keys(j, {"schema_version", "c", "category", "mode", "summands", "generators",
                           "asserted_groebner", "cached_series"},
                       "document");
    if (!j.contains("schema_version")) throw InvalidInput("missing schema_version");
    if (detail::get_int(j, "schema_version", "document") != kSchemaVersion)
        throw InvalidInput("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    InputDocument doc;
    ModulePresentation& p = doc.presentation;
    p.c = detail::get_int(j, "c", "document");
    if (p.c < 1) throw InvalidInput("c must be positive");
    if (j.contains("category")) {
        const auto& v = j.at("category");
        if (v == "OI")
            p.category = Category::OI;
        else if (v == "FI")
            p.category = Category::FI;
        else
            throw InvalidInput("category must be \"OI\" or \"FI\"");
    }
    if (j.contains("mode")) {
        const auto& v = j.at("mode");
        if (v == "quotient")
            doc.quotient = true;
        else if (v == "submodule")
            doc.quotient = false;
        else
            throw InvalidInput("mode must be \"submodule\" or \"quotient\"");
    }
    if (j.contains("summands")) {
        const auto& s = j.at("summands");
        if (!s.is_array() || s.empty()) throw InvalidInput("summands must be a non-empty list");
        p.summands.clear();
        for (size_t k = 0; k < s.size(); ++k) {
            std::string where = "summands[" + std::to_string(k) + "]";
            detail::check_keys(s[k], {"d", "shift"}, where);
            Summand sm;
            sm.d = detail::get_int(s[k], "d", where);
            sm.shift = s[k].contains("shift") ? detail::get_int(s[k], "shift", where) : 0;
            p.summands.push_back(sm);
        }
    }
    if (j.contains("generators")) {
        const auto& g = j.at("generators");
        if (!g.is_array()) throw InvalidInput("generators must be a list");
        for (size_t k = 0; k < g.size(); ++k)
            p.generators.push_back(detail::parse_monomial(g[k], p.c, "generators[" + std::to_string(k) + "]", false));
    }
    if (j.contains("asserted_groebner")) {
        const auto& g = j.at("asserted_groebner");
        if (!g.is_array()) throw InvalidInput("asserted_groebner must be a list");
        for (size_t k = 0; k < g.size(); ++k) {
            std::string where = "asserted_groebner[" + std::to_string(k) + "]";
            detail::check_keys(g[k], {"terms"}, where);
            if (!g[k].contains("terms") || !g[k].at("terms").is_array())
                throw InvalidInput(where + ".terms must be a list");
            PolyElement el;
            for (const auto& t : g[k].at("terms")) {
                if (!t.is_object() || !t.contains("coefficient")) throw InvalidInput(where + ": term needs a coefficient");
                el.push_back({detail::parse_coefficient(t.at("coefficient"), where),
                              detail::parse_monomial(t, p.c, where, true)});
            }
            doc.asserted_groebner.push_back(std::move(el));
        }
    }
    if (j.contains("cached_series")) {
        if (!j.at("cached_series").is_string()) throw InvalidInput("cached_series must be a string");
        doc.cached_series = j.at("cached_series").get<std::string>();
    }
    p.validate();
    for (const auto& el : doc.asserted_groebner) {
        if (el.empty()) throw InvalidInput("asserted_groebner element without terms");
        ModulePresentation probe = p;
        for (const auto& t : el) probe.generators.push_back(t.mono);
        probe.validate();
        for (const auto& t : el)
            if (t.mono.summand != el.front().mono.summand || t.mono.width != el.front().mono.width)
                throw WidthMismatch("terms of one element must share summand and width");
    }
    return doc;
}

inline InputDocument parse_document_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

inline InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document_text(ss.str());
}

inline Json to_json(const Monomial& m) {
    Json cols = Json::array();
    for (int j = 1; j <= m.width; ++j) cols.push_back(m.column(j));
    return Json{{"summand", m.summand}, {"width", m.width}, {"pi", m.pi}, {"exponents", cols}};
}

inline Json to_json(const ModulePresentation& p) {
    Json sums = Json::array();
    for (const auto& s : p.summands) sums.push_back({{"d", s.d}, {"shift", s.shift}});
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(to_json(g));
    return Json{{"c", p.c}, {"summands", sums}, {"generators", gens}};
}

inline Json to_json(const BiPoly& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back({t.ds, t.dt, t.coeff.str()});
    return terms;
}

inline Json to_json(const FactoredRational& r) {
    Json den = Json::array();
    for (const auto& f : r.factors) den.push_back({{"factor", f.poly.to_string()}, {"exponent", f.exponent}});
    return Json{{"text", r.to_string()},
                {"t_power", r.t_power},
                {"numerator", r.numerator.to_string()},
                {"denominator", den}};
}

// Parser for rendered series: integers, s, t, + - * / ^ and parentheses.
class RationalParser {
public:
    explicit RationalParser(std::string text) : mText(std::move(text)) {}

    FactoredRational parse() {
        Value v = expr();
        skip();
        if (mPos != mText.size()) fail("unexpected '" + std::string(1, mText[mPos]) + "'");
        return FactoredRational(v.num, {{v.den, 1}}, v.tpow);
    }

private:
    struct Value {
        BiPoly num{1};
        BiPoly den{1};
        int tpow = 0;  // extra factor t^tpow
    };

    static Value add(Value a, const Value& b, int sign) {
        int tp = std::min(a.tpow, b.tpow);
        BiPoly x = a.num.shifted(0, a.tpow - tp) * b.den;
        BiPoly y = b.num.shifted(0, b.tpow - tp) * a.den;
        return {sign > 0 ? x + y : x - y, a.den * b.den, tp};
    }
    static Value mul(const Value& a, const Value& b) { return {a.num * b.num, a.den * b.den, a.tpow + b.tpow}; }
    Value div(const Value& a, const Value& b) {
        if (b.num.is_zero()) fail("division by zero");
        int lt = b.num.low_t();
        if (b.num.low_s() > 0) fail("division by a multiple of s");
        return {a.num * b.den, a.den * b.num.unshifted(0, lt), a.tpow - b.tpow - lt};
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("cannot parse series at offset " + std::to_string(mPos) + ": " + why);
    }
    void skip() {
        while (mPos < mText.size() && std::isspace(static_cast<unsigned char>(mText[mPos]))) ++mPos;
    }
    bool eat(char ch) {
        skip();
        if (mPos < mText.size() && mText[mPos] == ch) {
            ++mPos;
            return true;
        }
        return false;
    }
    Value expr() {
        Value v = term();
        while (true) {
            if (eat('+'))
                v = add(v, term(), 1);
            else if (eat('-'))
                v = add(v, term(), -1);
            else
                return v;
        }
    }
    Value term() {
        Value v = unary();
        while (true) {
            if (eat('*'))
                v = mul(v, unary());
            else if (eat('/'))
                v = div(v, unary());
            else
                return v;
        }
    }
    Value unary() {
        if (eat('-')) {
            Value v = unary();
            v.num = -v.num;
            return v;
        }
        return power();
    }
    Value power() {
        Value base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        long long k = integer();
        if (k > 10000) fail("exponent too large");
        if (neg) {
            if (base.num == BiPoly::t() && base.den == BiPoly(1) && base.tpow == 0) return {BiPoly(1), BiPoly(1), -static_cast<int>(k)};
            fail("negative exponents only on t");
        }
        int e = static_cast<int>(k);
        return {base.num.pow(e), base.den.pow(e), base.tpow * e};
    }
    long long integer() {
        skip();
        size_t start = mPos;
        while (mPos < mText.size() && std::isdigit(static_cast<unsigned char>(mText[mPos]))) ++mPos;
        if (start == mPos) fail("expected an integer");
        if (mPos - start > 18) fail("integer too long");
        return std::stoll(mText.substr(start, mPos - start));
    }
    Value atom() {
        skip();
        if (mPos >= mText.size()) fail("unexpected end of input");
        char ch = mText[mPos];
        if (ch == '(') {
            ++mPos;
            Value v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (ch == 's' || ch == 't') {
            ++mPos;
            return {ch == 's' ? BiPoly::s() : BiPoly::t(), BiPoly(1), 0};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = mPos;
            while (mPos < mText.size() && std::isdigit(static_cast<unsigned char>(mText[mPos]))) ++mPos;
            return {BiPoly(BigInt(mText.substr(start, mPos - start))), BiPoly(1), 0};
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string mText;
    size_t mPos = 0;
};

inline FactoredRational parse_rational(const std::string& text) { return RationalParser(text).parse(); }

}  // namespace oih
