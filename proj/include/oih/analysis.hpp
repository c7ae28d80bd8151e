#pragma once

// Structural checks on computed series: denominator shape, Artinian
// criterion, and the asymptotic invariants read off width-wise data.

#include <optional>
#include <string>
#include <vector>

#include "oih/hilbert.hpp"
#include "oih/rational.hpp"
#include "oih/series.hpp"

namespace oih {

struct ShapeFactor {
    int c_j = 0;     // (1-t)^{c_j} - s f_j(t)
    UniPoly f;
    int exponent = 1;
};

struct ShapeReport {
    int a = 0;  // exponent of (1-t)
    std::vector<ShapeFactor> factors;
    std::optional<BiPoly> leftover;
    bool conformant = true;
    bool c1_conformant = true;  // factors in {1-t, 1-t-s, 1-s(1+...+t^e)}

    int b() const {
        int r = 0;
        for (const auto& f : factors) r += f.exponent;
        return r;
    }
};

namespace detail {

using QSeries = std::vector<Rational>;  // truncated power series in u

inline QSeries qmul(const QSeries& a, const QSeries& b, size_t prec) {
    QSeries r(prec, Rational(0));
    for (size_t i = 0; i < a.size() && i < prec; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < prec; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline QSeries qinverse(const QSeries& a, size_t prec) {
    QSeries r(prec, Rational(0));
    r[0] = 1 / a[0];
    for (size_t i = 1; i < prec; ++i) {
        Rational acc = 0;
        for (size_t k = 1; k <= i && k < a.size(); ++k) acc += a[k] * r[i - k];
        r[i] = -acc / a[0];
    }
    return r;
}

inline std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    if (n == 0 || n > BigInt(1) << 60) return {};
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Looks for a factor (1-t)^{c'} - s f(t) of P (primitive in s, deg_s >= 1).
// A root at t = t0 is lifted to a power series in u = t - t0; the factor is
// then read off and confirmed by exact division.
inline std::optional<std::pair<BiPoly, BiPoly>> find_linear_factor(const BiPoly& P) {
    UniPoly a0 = P.row(0);
    if (a0.is_zero()) return std::nullopt;
    UniPoly tmp = a0;
    int cmax = strip_one_minus_t(tmp);
    int D = P.deg_t();
    size_t prec = static_cast<size_t>(D) + 1;
    for (int t0 : {2, 3, 4, 6, 8, 12, 14, 18, 20}) {
        BigInt T0 = t0;
        BigInt lc = P.lead_row().eval(T0);
        if (lc == 0 || a0.eval(T0) == 0) continue;
        std::vector<BigInt> vals = P.eval_t(T0);
        BiPoly dP = P.derivative_s();
        std::vector<BigInt> dvals = dP.eval_t(T0);
        auto horner = [](const std::vector<BigInt>& c, const Rational& x) {
            Rational acc = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
            return acc;
        };
        auto divs = divisors(lc);
        if (divs.empty()) continue;
        // P(s, u + t0) as rows over Q
        std::vector<QSeries> Q;
        for (const auto& row : P.rows()) {
            UniPoly sh = row.taylor_shift(T0);
            QSeries q(prec, Rational(0));
            for (size_t i = 0; i < prec; ++i) q[i] = Rational(sh[static_cast<int>(i)]);
            Q.push_back(std::move(q));
        }
        for (int cp = 0; cp <= cmax; ++cp) {
            BigInt num = boost::multiprecision::pow(BigInt(1 - t0), cp);
            for (const auto& dv : divs)
                for (int sg : {1, -1}) {
                    Rational r = Rational(num) / Rational(BigInt(dv * sg));
                    if (horner(vals, r) != 0) continue;
                    Rational der = horner(dvals, r);
                    if (der == 0) continue;
                    QSeries sig(prec, Rational(0));
                    sig[0] = r;
                    for (size_t i = 1; i < prec; ++i) {
                        QSeries acc(i + 1, Rational(0));
                        QSeries s_trunc(sig.begin(), sig.begin() + i);
                        for (int k = static_cast<int>(Q.size()) - 1; k >= 0; --k) {
                            acc = qmul(acc, s_trunc, i + 1);
                            for (size_t m = 0; m <= i; ++m) acc[m] += Q[k][m];
                        }
                        sig[i] = -acc[i] / der;
                    }
                    QSeries g = qinverse(sig, prec);
                    QSeries base(prec, Rational(0));
                    base[0] = 1 - t0;
                    if (prec > 1) base[1] = -1;
                    QSeries ft = g;
                    for (int k = 0; k < cp; ++k) ft = qmul(ft, base, prec);
                    // back to powers of t: f(t) = ft(t - t0)
                    std::vector<Rational> fc(prec, Rational(0));
                    {
                        std::vector<Rational> c = ft;
                        int n = static_cast<int>(c.size());
                        for (int i = 0; i < n; ++i)
                            for (int j = n - 2; j >= i; --j) c[j] -= Rational(t0) * c[j + 1];
                        fc = c;
                    }
                    std::vector<BigInt> fi;
                    bool integral = true;
                    for (const auto& x : fc) {
                        if (denominator(x) != 1) {
                            integral = false;
                            break;
                        }
                        fi.push_back(numerator(x));
                    }
                    if (!integral) continue;
                    UniPoly f(fi);
                    BiPoly L = BiPoly(UniPoly::one_minus_t(cp)) - BiPoly(f).shifted(1, 0);
                    auto q = try_divexact(P, L);
                    if (q) return std::make_pair(L, *q);
                }
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline bool is_geometric_sum(const UniPoly& f) {
    if (f.is_zero()) return false;
    for (int i = 0; i <= f.degree(); ++i)
        if (f[i] != 1) return false;
    return true;
}

inline ShapeReport validate_shape(const FactoredRational& in, int c) {
    FactoredRational r = in.reduced ? in : reduce_rational(in);
    ShapeReport rep;
    BiPoly leftover(1);
    auto add_factor = [&](int cj, const UniPoly& f, int e) {
        for (auto& x : rep.factors)
            if (x.c_j == cj && x.f == f) {
                x.exponent += e;
                return;
            }
        rep.factors.push_back({cj, f, e});
    };
    auto reject = [&](const BiPoly& p, int e) {
        leftover *= p.pow(e);
        rep.conformant = false;
        rep.c1_conformant = false;
    };
    for (const auto& fac : r.factors) {
        int e = fac.exponent;
        UniPoly cont = content_s(fac.poly);
        BiPoly P = divexact(fac.poly, BiPoly(cont));
        int k = strip_one_minus_t(cont);
        rep.a += k * e;
        if (cont.degree() > 0) reject(BiPoly(cont), e);
        while (P.deg_s() >= 1) {
            BiPoly lin;
            if (P.deg_s() == 1) {
                lin = P;
                P = BiPoly(1);
            } else {
                auto found = detail::find_linear_factor(P);
                if (!found) {
                    reject(P, e);
                    break;
                }
                lin = found->first;
                P = found->second;
            }
            if (lin.row(0).eval(BigInt(0)) < 0) lin = -lin;
            UniPoly p0 = lin.row(0);
            UniPoly f = -lin.row(1);
            int cj = strip_one_minus_t(p0);
            bool ok = p0 == UniPoly(1) && f.eval(BigInt(0)) == 1 && f.eval(BigInt(1)) > 0 && cj <= c;
            if (!ok) {
                reject(lin, e);
                continue;
            }
            add_factor(cj, f, e);
            bool c1ok = (cj == 1 && f == UniPoly(1)) || (cj == 0 && is_geometric_sum(f));
            if (!c1ok) rep.c1_conformant = false;
        }
    }
    if (!rep.conformant) rep.leftover = leftover;
    std::sort(rep.factors.begin(), rep.factors.end(), [](const ShapeFactor& x, const ShapeFactor& y) {
        if (x.c_j != y.c_j) return x.c_j > y.c_j;
        if (x.f.degree() != y.f.degree()) return x.f.degree() < y.f.degree();
        return x.f.coeffs() < y.f.coeffs();
    });
    return rep;
}

inline ShapeReport validate_shape(const HilbertResult& h, int c) { return validate_shape(h.series, c); }

struct ArtinianCertificate {
    bool verdict = false;
    int a = 0;
    int b = 0;
    int e = 0;                 // number of pseudo-division steps
    BiPoly g_tilde;            // polynomial part of the division
    BiPoly h;                  // remainder with all (1-t) factors removed
    int l = 0;                 // (1-t)-adic valuation of the remainder
    std::vector<UniPoly> f;    // f_j with multiplicity
    std::string reason;
};

inline ArtinianCertificate artinian_test(const FactoredRational& in, int c) {
    FactoredRational r = in.reduced ? in : reduce_rational(in);
    ShapeReport rep = validate_shape(r, c);
    if (!rep.conformant) throw NotConformant("series denominator does not have the proven shape");
    ArtinianCertificate cert;
    cert.a = rep.a;
    cert.b = rep.b();
    for (const auto& fac : rep.factors) {
        if (fac.c_j > 0) {
            cert.verdict = false;
            cert.reason = "denominator factor with c_j = " + std::to_string(fac.c_j) + " > 0";
            return cert;
        }
        for (int k = 0; k < fac.exponent; ++k) cert.f.push_back(fac.f);
    }
    BiPoly P(1);
    for (const auto& f : cert.f) P *= BiPoly(1) - BiPoly(f).shifted(1, 0);
    BiPoly q;
    int steps = 0;
    BiPoly R = pseudo_rem_s(r.numerator, P, &q, &steps);
    cert.e = steps;
    cert.g_tilde = q;
    if (R.is_zero()) {
        cert.verdict = true;
        cert.reason = "remainder vanishes";
        return cert;
    }
    UniPoly cont = content_s(R);
    int l = strip_one_minus_t(cont);
    cert.l = l;
    cert.h = divexact(R, BiPoly(UniPoly::one_minus_t(l)));
    cert.verdict = l >= rep.a;
    cert.reason = cert.verdict ? "remainder absorbs (1-t)^a" : "remainder keeps a pole at t = 1";
    return cert;
}

inline ArtinianCertificate artinian_test(const HilbertResult& h, int c) { return artinian_test(h.series, c); }

struct DimensionFit {
    int A = 0;
    BigInt B;
    int n_lo = 0, n_hi = 0;
};

struct AsymptoticInvariants {
    int A = 0;
    BigInt B;
    BigInt M;
    int L = 0;
    Rational limit_estimate;
    int n_lo = 0, n_hi = 0;
    bool exact_fit = false;
};

// Width used as the base of the default "n >> 0" windows.
inline int generation_width(const ModulePresentation& p) {
    auto si = size_invariants(p);
    int w = si.wi_plus.value_or(0);
    for (const auto& s : p.summands) w = std::max(w, s.d);
    return w;
}

inline DimensionFit asymptotic_dimension(const ModulePresentation& p, int lo, int hi, bool quotient = true) {
    if (hi - lo + 1 < 4) throw InvalidInput("dimension window needs at least 4 widths");
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) {
        try {
            dims.push_back(dim_deg_width(p, n, quotient).krull_dim);
        } catch (const ZeroModule&) {
            throw NoStableFit("module vanishes at width " + std::to_string(n) + "; no dimension to fit");
        }
    }
    int len = static_cast<int>(dims.size());
    int A = dims[len - 1] - dims[len - 2];
    int from = len / 2;
    for (int i = from; i < len; ++i)
        if (dims[i] - dims[len - 1] != A * (i - (len - 1)))
            throw NoStableFit("dimension is not linear on the upper half of [" + std::to_string(lo) + "," +
                              std::to_string(hi) + "]; try a larger window");
    if (A < 0 || A > p.c) throw NoStableFit("fitted slope outside [0, c]");
    return {A, BigInt(dims[len - 1]) - BigInt(A) * hi, lo, hi};
}

namespace detail {
// Smallest linear recurrence (order <= len/2, one extra equation checked)
// satisfied by v; returns the characteristic polynomial coefficients
// x^k - sum c_i x^i as a rational vector, lowest degree first.
inline std::optional<std::vector<Rational>> find_recurrence(const std::vector<BigInt>& v) {
    int len = static_cast<int>(v.size());
    for (int k = 1; 2 * k + 1 <= len; ++k) {
        // v[n+k] = sum_i c_i v[n+i], n = 0..k-1 determine c
        std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k + 1));
        for (int n = 0; n < k; ++n) {
            for (int i = 0; i < k; ++i) A[n][i] = Rational(v[n + i]);
            A[n][k] = Rational(v[n + k]);
        }
        bool singular = false;
        for (int col = 0; col < k && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (A[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            std::swap(A[piv], A[col]);
            for (int r = 0; r < k; ++r) {
                if (r == col || A[r][col] == 0) continue;
                Rational f = A[r][col] / A[col][col];
                for (int j = col; j <= k; ++j) A[r][j] -= f * A[col][j];
            }
        }
        if (singular) continue;
        std::vector<Rational> coef(k);
        for (int i = 0; i < k; ++i) coef[i] = A[i][k] / A[i][i];
        bool ok = true;
        for (int n = 0; n + k < len; ++n) {
            Rational acc = 0;
            for (int i = 0; i < k; ++i) acc += coef[i] * Rational(v[n + i]);
            if (acc != Rational(v[n + k])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<Rational> chr(k + 1);
        for (int i = 0; i < k; ++i) chr[i] = -coef[i];
        chr[k] = 1;
        return chr;
    }
    return std::nullopt;
}
}  // namespace detail

inline AsymptoticInvariants asymptotic_multiplicity(const ModulePresentation& p, int lo, int hi,
                                                    bool quotient = true) {
    if (hi - lo + 1 < 6) throw InvalidInput("multiplicity window needs at least 6 widths");
    std::vector<BigInt> deg;
    for (int n = lo; n <= hi; ++n) {
        try {
            deg.push_back(dim_deg_width(p, n, quotient).multiplicity);
        } catch (const ZeroModule&) {
            throw NoStableFit("module vanishes at width " + std::to_string(n));
        }
    }
    auto chr = detail::find_recurrence(deg);
    if (!chr) throw NoStableFit("no exact recurrence for deg M_n on the window; try a larger window");
    // integer roots of the characteristic polynomial with multiplicity
    std::vector<Rational> poly = *chr;
    BigInt Mbest = 0;
    int multBest = 0, total = 0;
    int k = static_cast<int>(poly.size()) - 1;
    BigInt c0 = 0;
    {
        BigInt l = 1;
        for (const auto& x : poly) l = boost::multiprecision::lcm(l, denominator(x));
        c0 = numerator(poly[0] * Rational(l));
        if (c0 < 0) c0 = -c0;
    }
    std::vector<Rational> work = poly;
    for (const auto& r : detail::divisors(c0)) {
        int mult = 0;
        while (work.size() > 1) {
            Rational acc = 0;
            for (auto it = work.rbegin(); it != work.rend(); ++it) acc = acc * Rational(r) + *it;
            if (acc != 0) break;
            std::vector<Rational> q(work.size() - 1);
            Rational carry = 0;
            for (int i = static_cast<int>(work.size()) - 1; i >= 1; --i) {
                carry = work[i] + carry * Rational(r);
                q[i - 1] = carry;
            }
            work = q;
            ++mult;
        }
        total += mult;
        if (mult > 0 && r > Mbest) {
            Mbest = r;
            multBest = mult;
        }
    }
    if (total != k || Mbest == 0)
        throw NoStableFit("recurrence roots are not all positive integers");
    AsymptoticInvariants out;
    auto dim = asymptotic_dimension(p, lo, hi, quotient);
    out.A = dim.A;
    out.B = dim.B;
    out.M = Mbest;
    out.L = multBest - 1;
    out.limit_estimate = Rational(deg.back()) /
                         Rational(boost::multiprecision::pow(Mbest, static_cast<unsigned>(hi)) *
                                  boost::multiprecision::pow(BigInt(hi), static_cast<unsigned>(out.L)));
    out.n_lo = lo;
    out.n_hi = hi;
    out.exact_fit = true;
    return out;
}

struct PolynomialFit {
    std::vector<Rational> coeffs;  // p(n) = sum coeffs[i] n^i
    int from = 0;                  // p(n) = a(n) for n in [from, to]
    int to = 0;

    Rational operator()(int n) const {
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
        return acc;
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (coeffs[i] == 0) continue;
            Rational c = coeffs[i];
            bool neg = c < 0;
            if (neg) c = -c;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string cs = c.str();
            if (i == 0)
                out += cs;
            else
                out += (c == 1 ? "" : cs + "*") + (i > 1 ? "n^" + std::to_string(i) : "n");
        }
        return out.empty() ? "0" : out;
    }
};

// Lowest-degree polynomial matching a(n) on the longest tail where some
// difference order is constant (at least two equal entries).
inline PolynomialFit fit_polynomial_tail(const std::vector<BigInt>& a, int n_lo, int max_degree = -1) {
    int len = static_cast<int>(a.size());
    std::vector<std::vector<BigInt>> diff{a};
    while (static_cast<int>(diff.back().size()) > 1) {
        const auto& p = diff.back();
        std::vector<BigInt> q;
        for (size_t i = 1; i < p.size(); ++i) q.push_back(p[i] - p[i - 1]);
        diff.push_back(std::move(q));
    }
    for (int k = 0; k + 1 < len; ++k) {
        if (max_degree >= 0 && k > max_degree) break;
        const auto& dk = diff[k];
        int m = static_cast<int>(dk.size());
        int start = m - 1;
        while (start > 0 && dk[start - 1] == dk[m - 1]) --start;
        if (m - start < 2) continue;
        int n0 = n_lo + start;  // a(n) polynomial of degree k for n >= n0
        // Newton forward form from n0, converted to the monomial basis
        std::vector<Rational> coeffs(k + 1, Rational(0));
        std::vector<Rational> basis{Rational(1)};  // C(n - n0, i) in powers of n
        for (int i = 0; i <= k; ++i) {
            Rational di = Rational(diff[i][start]);
            for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += di * basis[j];
            std::vector<Rational> nb(basis.size() + 1, Rational(0));
            for (size_t j = 0; j < basis.size(); ++j) {
                nb[j + 1] += basis[j] / (i + 1);
                nb[j] -= basis[j] * Rational(n0 + i) / (i + 1);
            }
            basis = std::move(nb);
        }
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        PolynomialFit fit{coeffs, n0, n_lo + len - 1};
        bool ok = true;
        for (int n = n0; n < n_lo + len; ++n)
            if (fit(n) != Rational(a[n - n_lo])) ok = false;
        if (ok) return fit;
    }
    throw NoStableFit("finite differences do not stabilize on the window");
}

inline PolynomialFit fixed_degree_polynomial(const FactoredRational& h, int j, int lo, int hi, int max_degree = -1) {
    if (hi - lo + 1 < j + 4) throw InvalidInput("window must have at least j + 4 widths");
    auto w = expand_series(h, hi, j);
    std::vector<BigInt> a;
    for (int n = lo; n <= hi; ++n) a.push_back(w.at(n, j));
    return fit_polynomial_tail(a, lo, max_degree);
}

inline PolynomialFit fixed_degree_polynomial(const HilbertResult& h, int j, int lo, int hi, int max_degree = -1) {
    return fixed_degree_polynomial(h.series, j, lo, hi, max_degree);
}

}  // namespace oih
