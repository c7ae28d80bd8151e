#pragma once

// Bivariate rational functions with a factored denominator, and their
// Taylor expansion at the origin.

#include <map>
#include <string>
#include <vector>

#include "oih/poly.hpp"

namespace oih {

struct DenominatorFactor {
    BiPoly poly;
    int exponent = 1;
};

// t^t_power * numerator / prod factor^exponent
struct FactoredRational {
    BiPoly numerator;
    std::vector<DenominatorFactor> factors;
    int t_power = 0;
    bool reduced = false;

    FactoredRational() = default;
    FactoredRational(BiPoly num) : numerator(std::move(num)) {}  // NOLINT
    FactoredRational(BiPoly num, std::vector<DenominatorFactor> den, int tp = 0)
        : numerator(std::move(num)), factors(std::move(den)), t_power(tp) {
        normalize();
    }

    bool is_zero() const { return numerator.is_zero(); }

    BiPoly denominator() const {
        BiPoly d(1);
        for (const auto& f : factors) d *= f.poly.pow(f.exponent);
        return d;
    }

    // Canonical bookkeeping: positive constant term on every factor, equal
    // factors merged, unit factors dropped, nonnegative t-powers folded into
    // the numerator, factors sorted.
    void normalize() {
        std::vector<DenominatorFactor> merged;
        for (auto& f : factors) {
            if (f.exponent == 0) continue;
            if (f.exponent < 0) throw InvalidInput("negative denominator exponent");
            if (f.poly.is_zero() || f.poly.constant_term() == 0)
                throw SingularAtOrigin("denominator factor " + f.poly.to_string() +
                                       " vanishes at the origin");
            if (f.poly.constant_term() < 0) {
                f.poly = -f.poly;
                if (f.exponent % 2) numerator = -numerator;
            }
            if (f.poly == BiPoly(1)) continue;
            bool found = false;
            for (auto& m : merged)
                if (m.poly == f.poly) {
                    m.exponent += f.exponent;
                    found = true;
                    break;
                }
            if (!found) merged.push_back(f);
        }
        std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
            int da = a.poly.deg_s() + a.poly.deg_t(), db = b.poly.deg_s() + b.poly.deg_t();
            if (da != db) return da < db;
            if (a.poly.deg_s() != b.poly.deg_s()) return a.poly.deg_s() < b.poly.deg_s();
            return a.poly.to_string() < b.poly.to_string();
        });
        factors = std::move(merged);
        if (numerator.is_zero()) {
            factors.clear();
            t_power = 0;
        } else if (t_power > 0) {
            numerator = numerator.shifted(0, t_power);
            t_power = 0;
        } else if (t_power < 0) {
            int v = std::min(numerator.low_t(), -t_power);
            if (v > 0) {
                numerator = numerator.unshifted(0, v);
                t_power += v;
            }
        }
    }

    std::string to_string() const;
};

inline int exponent_of(const std::vector<DenominatorFactor>& fs, const BiPoly& p) {
    for (const auto& f : fs)
        if (f.poly == p) return f.exponent;
    return 0;
}

inline FactoredRational add(const FactoredRational& a, const FactoredRational& b, int sign = 1) {
    if (b.is_zero()) return a;
    if (a.is_zero()) {
        FactoredRational r = b;
        if (sign < 0) r.numerator = -r.numerator;
        r.reduced = false;
        return r;
    }
    std::vector<DenominatorFactor> den = a.factors;
    for (const auto& f : b.factors) {
        bool found = false;
        for (auto& d : den)
            if (d.poly == f.poly) {
                d.exponent = std::max(d.exponent, f.exponent);
                found = true;
            }
        if (!found) den.push_back(f);
    }
    auto lift = [&](const FactoredRational& x) {
        BiPoly n = x.numerator;
        for (const auto& d : den) {
            int miss = d.exponent - exponent_of(x.factors, d.poly);
            if (miss > 0) n *= d.poly.pow(miss);
        }
        return n;
    };
    int tp = std::min(a.t_power, b.t_power);
    BiPoly na = lift(a).shifted(0, a.t_power - tp);
    BiPoly nb = lift(b).shifted(0, b.t_power - tp);
    return FactoredRational(sign > 0 ? na + nb : na - nb, std::move(den), tp);
}

inline FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
    return add(a, b, 1);
}
inline FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) {
    return add(a, b, -1);
}
inline FactoredRational times_t(FactoredRational r, int k) {
    r.t_power += k;
    r.normalize();
    return r;
}

// a == b as rational functions, by cross multiplication.
inline bool same_function(const FactoredRational& a, const FactoredRational& b) {
    int tp = std::min(a.t_power, b.t_power);
    BiPoly lhs = (a.numerator * b.denominator()).shifted(0, a.t_power - tp);
    BiPoly rhs = (b.numerator * a.denominator()).shifted(0, b.t_power - tp);
    return lhs == rhs;
}

// Cancel common factors. Tracked factors are tried by exact division first,
// then gcds split whatever partial cancellation is left.
inline FactoredRational reduce_rational(const FactoredRational& in) {
    FactoredRational r = in;
    r.normalize();
    if (r.numerator.is_zero()) {
        r.reduced = true;
        return r;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& f : r.factors) {
            while (f.exponent > 0) {
                auto q = try_divexact(r.numerator, f.poly);
                if (!q) break;
                r.numerator = std::move(*q);
                --f.exponent;
            }
        }
        std::vector<DenominatorFactor> extra;
        for (auto& f : r.factors) {
            if (f.exponent == 0) continue;
            BiPoly g = gcd_bipoly(r.numerator, f.poly);
            if (g.is_constant()) continue;
            r.numerator = divexact(r.numerator, g);
            BiPoly rest = divexact(f.poly, g);
            if (f.exponent > 1) extra.push_back({f.poly, f.exponent - 1});
            f.poly = rest;
            f.exponent = 1;
            changed = true;
        }
        for (auto& e : extra) r.factors.push_back(e);
        r.normalize();
    }
    r.reduced = true;
    return r;
}

struct SeriesWindow {
    int N = 0, J = 0;
    int j_lo = 0;  // lowest t-degree in the table (negative only for negative shifts)
    std::vector<std::vector<BigInt>> table;

    BigInt at(int n, int j) const {
        if (n < 0 || n > N || j < j_lo || j > J) return 0;
        return table[n][j - j_lo];
    }
    friend bool operator==(const SeriesWindow& a, const SeriesWindow& b) {
        return a.N == b.N && a.J == b.J && a.j_lo == b.j_lo && a.table == b.table;
    }
};

namespace detail {
using Grid = std::vector<std::vector<BigInt>>;

// R := S / f modulo (s^{N+1}, t^{J+1}), in place.
inline void divide_series(Grid& g, const BiPoly& f) {
    BigInt c0 = f.constant_term();
    if (c0 == 0) throw SingularAtOrigin("denominator vanishes at the origin");
    auto terms = f.terms();
    int N = static_cast<int>(g.size()) - 1;
    int J = static_cast<int>(g[0].size()) - 1;
    for (int n = 0; n <= N; ++n)
        for (int j = 0; j <= J; ++j) {
            BigInt v = g[n][j];
            for (const auto& x : terms) {
                if (x.ds == 0 && x.dt == 0) continue;
                if (x.ds > n || x.dt > j) continue;
                v -= x.coeff * g[n - x.ds][j - x.dt];
            }
            if (c0 == 1) {
                g[n][j] = std::move(v);
            } else {
                BigInt q, rem;
                boost::multiprecision::divide_qr(v, c0, q, rem);
                if (rem != 0) throw NonDivisible("series coefficients are not integral");
                g[n][j] = q;
            }
        }
}
}  // namespace detail

inline SeriesWindow expand_series(const FactoredRational& r, int N, int J) {
    if (N < 0 || J < 0) throw InvalidInput("negative expansion bounds");
    for (const auto& f : r.factors)
        if (f.poly.constant_term() == 0) throw SingularAtOrigin("denominator vanishes at the origin");
    SeriesWindow w;
    w.N = N;
    w.J = J;
    w.j_lo = std::min(0, r.t_power);
    int Jt = J - r.t_power;  // degree needed in numerator/denominator
    w.table.assign(N + 1, std::vector<BigInt>(J - w.j_lo + 1, BigInt(0)));
    if (Jt < 0 || r.numerator.is_zero()) return w;
    detail::Grid g(N + 1, std::vector<BigInt>(Jt + 1, BigInt(0)));
    for (const auto& x : r.numerator.terms())
        if (x.ds <= N && x.dt <= Jt) g[x.ds][x.dt] = x.coeff;
    for (const auto& f : r.factors)
        for (int k = 0; k < f.exponent; ++k) detail::divide_series(g, f.poly);
    for (int n = 0; n <= N; ++n)
        for (int j = w.j_lo; j <= J; ++j) {
            int jj = j - r.t_power;
            if (jj >= 0 && jj <= Jt) w.table[n][j - w.j_lo] = g[n][jj];
        }
    return w;
}

// Grammar: [t^k*]NUM[/DEN] where NUM is a product of an integer, a monomial,
// a power of (1 - t) and a remaining polynomial, and DEN a '*'-joined list of
// parenthesized factors with optional ^e, in normalized order (wrapped in one
// more pair of parentheses when there are several).
inline std::string FactoredRational::to_string() const {
    if (numerator.is_zero()) return "0";
    std::vector<std::string> parts;
    if (t_power != 0) parts.push_back("t^" + std::to_string(t_power));
    int ls = numerator.low_s(), lt = numerator.low_t();
    BiPoly rest = numerator.unshifted(ls, lt);
    int k = 0;
    static const BiPoly omt(UniPoly::one_minus_t());
    while (!rest.is_constant()) {
        auto q = try_divexact(rest, omt);
        if (!q) break;
        rest = std::move(*q);
        ++k;
    }
    bool neg = rest.terms().front().coeff < 0;
    if (neg) rest = -rest;
    std::string mono;
    if (ls > 0) mono += ls > 1 ? "s^" + std::to_string(ls) : "s";
    if (lt > 0) mono += std::string(mono.empty() ? "" : "*") + (lt > 1 ? "t^" + std::to_string(lt) : "t");
    if (rest.is_constant()) {
        if (rest != BiPoly(1) || (mono.empty() && k == 0)) parts.push_back(rest.to_string());
    }
    if (!mono.empty()) parts.push_back(mono);
    if (k > 0) parts.push_back(k > 1 ? "(1 - t)^" + std::to_string(k) : "(1 - t)");
    bool multi = false;
    if (!rest.is_constant()) {
        multi = parts.empty() && factors.empty();
        parts.push_back(multi ? rest.to_string() : "(" + rest.to_string() + ")");
    }
    std::string num;
    for (size_t i = 0; i < parts.size(); ++i) num += (i ? "*" : "") + parts[i];
    if (neg) num = "-" + (multi ? "(" + num + ")" : num);
    if (factors.empty()) return num;
    std::string den;
    for (size_t i = 0; i < factors.size(); ++i) {
        den += i ? "*" : "";
        den += "(" + factors[i].poly.to_string() + ")";
        if (factors[i].exponent > 1) den += "^" + std::to_string(factors[i].exponent);
    }
    bool wrap = factors.size() > 1;
    return num + "/" + (wrap ? "(" + den + ")" : den);
}

}  // namespace oih
