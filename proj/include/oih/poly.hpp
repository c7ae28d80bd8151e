#pragma once

// Integer polynomials in t (UniPoly) and in s,t (BiPoly).
//
// A BiPoly is stored as a dense vector of UniPoly rows indexed by the degree
// in s, so all the "univariate in s over Z[t]" algorithms (pseudo-division,
// content, remainder sequences) work on rows directly.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oih/errors.hpp"

namespace oih {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const BigInt& c) {  // NOLINT(implicit): constants promote freely
        if (c != 0) mC.push_back(c);
    }
    UniPoly(int c) : UniPoly(BigInt(c)) {}  // NOLINT
    explicit UniPoly(std::vector<BigInt> coeffs) : mC(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const BigInt& c, int k) {
        UniPoly p;
        if (c == 0) return p;
        p.mC.assign(k + 1, 0);
        p.mC[k] = c;
        return p;
    }
    static UniPoly t() { return monomial(1, 1); }
    // (1 - t)^k
    static UniPoly one_minus_t(int k = 1) {
        UniPoly base(std::vector<BigInt>{1, -1});
        return base.pow(k);
    }

    int degree() const { return static_cast<int>(mC.size()) - 1; }
    bool is_zero() const { return mC.empty(); }
    const std::vector<BigInt>& coeffs() const { return mC; }
    BigInt operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(mC.size())) ? mC[i] : BigInt(0);
    }
    const BigInt& lead() const { return mC.back(); }
    int low_degree() const {
        for (int i = 0; i < static_cast<int>(mC.size()); ++i)
            if (mC[i] != 0) return i;
        return -1;
    }

    template <class T>
    T eval(const T& x) const {
        T acc = 0;
        for (int i = degree(); i >= 0; --i) acc = acc * x + T(mC[i]);
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.mC.size() > mC.size()) mC.resize(o.mC.size());
        for (size_t i = 0; i < o.mC.size(); ++i) mC[i] += o.mC[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.mC.size() > mC.size()) mC.resize(o.mC.size());
        for (size_t i = 0; i < o.mC.size(); ++i) mC[i] -= o.mC[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const BigInt& k) {
        if (k == 0) {
            mC.clear();
            return *this;
        }
        for (auto& x : mC) x *= k;
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& x : a.mC) x = -x;
        return a;
    }
    friend UniPoly operator*(UniPoly a, const BigInt& k) { return a *= k; }
    friend UniPoly operator*(UniPoly a, int k) { return a *= BigInt(k); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.mC.size() + b.mC.size() - 1);
        for (size_t i = 0; i < a.mC.size(); ++i) {
            if (a.mC[i] == 0) continue;
            for (size_t j = 0; j < b.mC.size(); ++j) r[i + j] += a.mC[i] * b.mC[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.mC == b.mC; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(int k) const {
        UniPoly r(1), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    UniPoly shifted(int k) const {
        if (is_zero()) return {};
        std::vector<BigInt> r(k, 0);
        r.insert(r.end(), mC.begin(), mC.end());
        return UniPoly(std::move(r));
    }
    UniPoly derivative() const {
        std::vector<BigInt> r;
        for (size_t i = 1; i < mC.size(); ++i) r.push_back(mC[i] * static_cast<int>(i));
        return UniPoly(std::move(r));
    }
    // p(t + a)
    UniPoly taylor_shift(const BigInt& a) const {
        std::vector<BigInt> c = mC;
        int n = static_cast<int>(c.size());
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j) c[j] += a * c[j + 1];
        return UniPoly(std::move(c));
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : mC) g = gcd_int(g, x);
        return g;
    }
    UniPoly primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (lead() < 0) g = -g;
        UniPoly r = *this;
        for (auto& x : r.mC) x /= g;
        return r;
    }

    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= degree(); ++i) {
            if (mC[i] == 0) continue;
            BigInt c = mC[i];
            bool neg = c < 0;
            if (neg) c = -c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (i == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!mC.empty() && mC.back() == 0) mC.pop_back();
    }
    std::vector<BigInt> mC;
};

inline std::optional<UniPoly> try_divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (a.is_zero()) return UniPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(a.degree() - b.degree() + 1);
    const BigInt& lb = b.lead();
    const auto& bc = b.coeffs();
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        BigInt qc, rem;
        boost::multiprecision::divide_qr(r[k], lb, qc, rem);
        if (rem != 0) return std::nullopt;
        q[k - db] = qc;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= qc * bc[i];
    }
    for (int k = 0; k < db; ++k)
        if (r[k] != 0) return std::nullopt;
    return UniPoly(std::move(q));
}

inline UniPoly divexact(const UniPoly& a, const UniPoly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw NonDivisible("UniPoly division leaves a remainder");
    return *q;
}

// lead(b)^k * a = q*b + r with deg r < deg b; returns r.
inline UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        BigInt la = a.lead();
        UniPoly sub = UniPoly::monomial(la, a.degree() - db) * b;
        a = a * b.lead() - sub;
    }
    return a;
}

// Greatest common divisor in Z[t], positive leading coefficient.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.primitive() * b.content();
    if (b.is_zero()) return a.primitive() * a.content();
    BigInt cg = gcd_int(a.content(), b.content());
    UniPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return UniPoly(cg);
        UniPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive();
    }
    return x.primitive() * cg;
}

// Splits p = (1 - t)^k * q with q(1) != 0; returns k and overwrites p by q.
inline int strip_one_minus_t(UniPoly& p) {
    if (p.is_zero()) return 0;
    static const UniPoly f = UniPoly::one_minus_t();
    int k = 0;
    while (p.eval(BigInt(1)) == 0) {
        p = divexact(p, f);
        ++k;
    }
    return k;
}

class BiPoly {
public:
    struct Term {
        int ds, dt;
        BigInt coeff;
    };

    BiPoly() = default;
    BiPoly(const BigInt& c) {  // NOLINT
        if (c != 0) mRows.emplace_back(c);
    }
    BiPoly(int c) : BiPoly(BigInt(c)) {}  // NOLINT
    BiPoly(const UniPoly& p) {            // NOLINT: polynomial in t only
        if (!p.is_zero()) mRows.push_back(p);
    }
    explicit BiPoly(std::vector<UniPoly> rows) : mRows(std::move(rows)) { trim(); }

    static BiPoly term(const BigInt& c, int ds, int dt) {
        if (c == 0) return {};
        std::vector<UniPoly> rows(ds + 1);
        rows[ds] = UniPoly::monomial(c, dt);
        return BiPoly(std::move(rows));
    }
    static BiPoly s() { return term(1, 1, 0); }
    static BiPoly t() { return term(1, 0, 1); }
    static BiPoly from_terms(const std::vector<Term>& terms) {
        BiPoly r;
        for (const auto& x : terms) r += term(x.coeff, x.ds, x.dt);
        return r;
    }

    bool is_zero() const { return mRows.empty(); }
    int deg_s() const { return static_cast<int>(mRows.size()) - 1; }
    int deg_t() const {
        int d = -1;
        for (const auto& r : mRows) d = std::max(d, r.degree());
        return d;
    }
    const std::vector<UniPoly>& rows() const { return mRows; }
    UniPoly row(int i) const {
        return (i >= 0 && i < static_cast<int>(mRows.size())) ? mRows[i] : UniPoly();
    }
    const UniPoly& lead_row() const { return mRows.back(); }
    BigInt coeff(int ds, int dt) const { return row(ds)[dt]; }
    BigInt constant_term() const { return coeff(0, 0); }
    bool is_constant() const { return mRows.size() <= 1 && row(0).degree() <= 0; }

    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (int i = 0; i < static_cast<int>(mRows.size()); ++i)
            for (int j = 0; j <= mRows[i].degree(); ++j)
                if (mRows[i][j] != 0) out.push_back({i, j, mRows[i][j]});
        return out;
    }
    size_t term_count() const {
        size_t n = 0;
        for (const auto& r : mRows)
            for (const auto& c : r.coeffs()) n += (c != 0);
        return n;
    }

    BiPoly& operator+=(const BiPoly& o) {
        if (o.mRows.size() > mRows.size()) mRows.resize(o.mRows.size());
        for (size_t i = 0; i < o.mRows.size(); ++i) mRows[i] += o.mRows[i];
        trim();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        if (o.mRows.size() > mRows.size()) mRows.resize(o.mRows.size());
        for (size_t i = 0; i < o.mRows.size(); ++i) mRows[i] -= o.mRows[i];
        trim();
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) {
        for (auto& r : a.mRows) r = -r;
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<UniPoly> r(a.mRows.size() + b.mRows.size() - 1);
        for (size_t i = 0; i < a.mRows.size(); ++i) {
            if (a.mRows[i].is_zero()) continue;
            for (size_t j = 0; j < b.mRows.size(); ++j)
                if (!b.mRows[j].is_zero()) r[i + j] += a.mRows[i] * b.mRows[j];
        }
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(BiPoly a, const UniPoly& k) {
        for (auto& r : a.mRows) r *= k;
        a.trim();
        return a;
    }
    friend BiPoly operator*(BiPoly a, const BigInt& k) { return a * UniPoly(k); }
    friend BiPoly operator*(BiPoly a, int k) { return a * UniPoly(k); }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.mRows == b.mRows; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int k) const {
        BiPoly r(1), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    // multiply by s^a t^b
    BiPoly shifted(int a, int b) const {
        if (is_zero()) return {};
        std::vector<UniPoly> r(a);
        for (const auto& row : mRows) r.push_back(row.shifted(b));
        return BiPoly(std::move(r));
    }
    // Exact division by s^a t^b; caller guarantees divisibility.
    BiPoly unshifted(int a, int b) const {
        std::vector<UniPoly> r;
        for (size_t i = a; i < mRows.size(); ++i) {
            auto c = mRows[i].coeffs();
            if (!c.empty()) c.erase(c.begin(), c.begin() + std::min<size_t>(b, c.size()));
            r.emplace_back(std::move(c));
        }
        return BiPoly(std::move(r));
    }
    int low_s() const {
        for (size_t i = 0; i < mRows.size(); ++i)
            if (!mRows[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
    int low_t() const {
        int m = -1;
        for (const auto& r : mRows)
            if (!r.is_zero()) m = (m < 0) ? r.low_degree() : std::min(m, r.low_degree());
        return m;
    }
    BiPoly derivative_s() const {
        std::vector<UniPoly> r;
        for (size_t i = 1; i < mRows.size(); ++i) r.push_back(mRows[i] * BigInt(static_cast<int>(i)));
        return BiPoly(std::move(r));
    }
    // evaluate at t = x, leaving a polynomial in s
    template <class T>
    std::vector<T> eval_t(const T& x) const {
        std::vector<T> out;
        for (const auto& r : mRows) out.push_back(r.eval(x));
        return out;
    }
    template <class T>
    T eval(const T& s, const T& t) const {
        T acc = 0;
        for (int i = deg_s(); i >= 0; --i) acc = acc * s + mRows[i].eval(t);
        return acc;
    }

    // Terms in canonical order (s ascending, then t ascending), e.g. "1 - t - s".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& x : terms()) {
            BigInt c = x.coeff;
            bool neg = c < 0;
            if (neg) c = -c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            std::string mono;
            if (x.ds > 0) mono += x.ds > 1 ? "s^" + std::to_string(x.ds) : "s";
            if (x.dt > 0) {
                if (!mono.empty()) mono += "*";
                mono += x.dt > 1 ? "t^" + std::to_string(x.dt) : "t";
            }
            if (mono.empty())
                os << c;
            else if (c == 1)
                os << mono;
            else
                os << c << "*" << mono;
        }
        return os.str();
    }

private:
    void trim() {
        while (!mRows.empty() && mRows.back().is_zero()) mRows.pop_back();
    }
    std::vector<UniPoly> mRows;
};

inline std::optional<BiPoly> try_divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (a.is_zero()) return BiPoly();
    int db = b.deg_s();
    if (a.deg_s() < db) return std::nullopt;
    if (a.deg_t() < b.deg_t()) return std::nullopt;
    std::vector<UniPoly> r = a.rows();
    std::vector<UniPoly> q(a.deg_s() - db + 1);
    const auto& brows = b.rows();
    for (int k = a.deg_s(); k >= db; --k) {
        if (r[k].is_zero()) continue;
        auto qc = try_divexact(r[k], brows[db]);
        if (!qc) return std::nullopt;
        for (int i = 0; i <= db; ++i)
            if (!brows[i].is_zero()) r[k - db + i] -= *qc * brows[i];
        q[k - db] = std::move(*qc);
    }
    for (int k = 0; k < db; ++k)
        if (!r[k].is_zero()) return std::nullopt;
    return BiPoly(std::move(q));
}

inline BiPoly divexact(const BiPoly& a, const BiPoly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw NonDivisible("BiPoly division leaves a remainder");
    return *q;
}

// Content of a as a polynomial in s over Z[t].
inline UniPoly content_s(const BiPoly& a) {
    UniPoly g;
    for (const auto& r : a.rows()) {
        if (r.is_zero()) continue;
        g = gcd(g, r);
        if (g.degree() == 0 && g.lead() == 1) break;
    }
    return g;
}

inline BiPoly primitive_s(const BiPoly& a) {
    if (a.is_zero()) return {};
    UniPoly g = content_s(a);
    std::vector<UniPoly> rows;
    for (const auto& r : a.rows()) rows.push_back(divexact(r, g));
    return BiPoly(std::move(rows));
}

// lead_s(b)^k * a = q*b + r in Z[t][s]; returns r.
inline BiPoly pseudo_rem_s(BiPoly a, const BiPoly& b, BiPoly* quotient = nullptr,
                           int* steps = nullptr) {
    int db = b.deg_s();
    const UniPoly& lb = b.lead_row();
    BiPoly q;
    int k = 0;
    while (!a.is_zero() && a.deg_s() >= db) {
        int shift = a.deg_s() - db;
        BiPoly top = BiPoly(a.lead_row()).shifted(shift, 0);
        a = a * lb - top * b;
        q = q * lb + top;
        ++k;
    }
    if (quotient) *quotient = q;
    if (steps) *steps = k;
    return a;
}

// Sign normalization: the first term in canonical order is positive.
inline BiPoly normalize_sign(const BiPoly& a) {
    if (a.is_zero()) return a;
    return a.terms().front().coeff < 0 ? -a : a;
}

// gcd over Q[s,t], returned primitive with a positive first canonical term.
inline BiPoly gcd_bipoly(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
    if (a.is_zero()) return normalize_sign(primitive_s(b) * content_s(b).primitive());
    if (b.is_zero()) return normalize_sign(primitive_s(a) * content_s(a).primitive());
    UniPoly cg = gcd(content_s(a), content_s(b)).primitive();
    BiPoly x = primitive_s(a), y = primitive_s(b);
    if (x.deg_s() < y.deg_s()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.deg_s() == 0) {
            x = BiPoly(1);
            break;
        }
        BiPoly r = pseudo_rem_s(x, y);
        x = std::move(y);
        y = primitive_s(r);
    }
    return normalize_sign(primitive_s(x) * cg);
}

}  // namespace oih
