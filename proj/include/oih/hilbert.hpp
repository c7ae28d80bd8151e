#pragma once

// Width-wise Hilbert series over P_n, the classical oracle for everything
// computed through automata.

#include <map>
#include <optional>
#include <vector>

#include "oih/oi.hpp"
#include "oih/poly.hpp"

namespace oih {

using ExpVec = std::vector<int>;

// Numerator N(I) of H_{P/I} = N(I)/(1-t)^V for a monomial ideal I; N does not
// depend on V as long as V covers the support. Pivot recursion
//   N(I) = N(I + p) + t^{deg p} N(I : p),  p = x^e,
// memoized per instance.
class IdealHilbert {
public:
    UniPoly numerator(std::vector<ExpVec> gens) {
        if (!minimalize(gens)) return {};
        if (gens.empty()) return UniPoly(1);
        compress(gens);
        auto it = mMemo.find(gens);
        if (it != mMemo.end()) return it->second;
        UniPoly r = compute(gens);
        mMemo.emplace(std::move(gens), r);
        return r;
    }

private:
    static bool divides(const ExpVec& a, const ExpVec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }
    static int degree(const ExpVec& a) {
        int d = 0;
        for (int x : a) d += x;
        return d;
    }
    // false for the unit ideal
    static bool minimalize(std::vector<ExpVec>& gens) {
        std::sort(gens.begin(), gens.end(), [](const ExpVec& a, const ExpVec& b) {
            int da = degree(a), db = degree(b);
            return da != db ? da < db : a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<ExpVec> out;
        for (auto& g : gens) {
            if (degree(g) == 0) return false;
            bool red = false;
            for (const auto& h : out)
                if (divides(h, g)) {
                    red = true;
                    break;
                }
            if (!red) out.push_back(std::move(g));
        }
        gens = std::move(out);
        std::sort(gens.begin(), gens.end());
        return true;
    }
    static void compress(std::vector<ExpVec>& gens) {
        size_t V = gens[0].size();
        std::vector<bool> used(V, false);
        for (const auto& g : gens)
            for (size_t i = 0; i < V; ++i) used[i] = used[i] || g[i] != 0;
        for (auto& g : gens) {
            ExpVec h;
            for (size_t i = 0; i < V; ++i)
                if (used[i]) h.push_back(g[i]);
            g = std::move(h);
        }
        std::sort(gens.begin(), gens.end());
    }

    UniPoly compute(const std::vector<ExpVec>& gens) {
        size_t V = gens[0].size();
        std::vector<int> count(V, 0);
        for (const auto& g : gens)
            for (size_t i = 0; i < V; ++i) count[i] += g[i] != 0;
        // split off pure powers in variables nobody else uses
        UniPoly factor(1);
        std::vector<ExpVec> rest;
        for (const auto& g : gens) {
            int support = 0, var = -1;
            for (size_t i = 0; i < V; ++i)
                if (g[i]) {
                    ++support;
                    var = static_cast<int>(i);
                }
            if (support == 1 && count[var] == 1)
                factor *= UniPoly(1) - UniPoly::monomial(1, g[var]);
            else
                rest.push_back(g);
        }
        if (rest.empty()) return factor;
        if (rest.size() < gens.size()) return factor * numerator(std::move(rest));

        size_t piv = 0;
        for (size_t i = 1; i < V; ++i)
            if (count[i] > count[piv]) piv = i;
        int e = 0;
        for (const auto& g : gens)
            if (g[piv] && (e == 0 || g[piv] < e)) e = g[piv];

        std::vector<ExpVec> plus, colon;
        ExpVec p(V, 0);
        p[piv] = e;
        plus.push_back(p);
        for (const auto& g : gens) {
            if (g[piv] < e) plus.push_back(g);
            ExpVec h = g;
            h[piv] = std::max(0, h[piv] - e);
            colon.push_back(std::move(h));
        }
        return numerator(std::move(plus)) + numerator(std::move(colon)).shifted(e);
    }

    std::map<std::vector<ExpVec>, UniPoly> mMemo;
};

// Inclusion-exclusion over subsets; independent cross-check for small inputs.
inline UniPoly ideal_numerator_inclusion_exclusion(const std::vector<ExpVec>& gens) {
    if (gens.size() > 20) throw InvalidInput("inclusion-exclusion limited to 20 generators");
    UniPoly r;
    size_t k = gens.size();
    size_t V = k ? gens[0].size() : 0;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        ExpVec l(V, 0);
        int bits = 0;
        for (size_t g = 0; g < k; ++g)
            if (mask >> g & 1) {
                ++bits;
                for (size_t i = 0; i < V; ++i) l[i] = std::max(l[i], gens[g][i]);
            }
        int deg = 0;
        for (int x : l) deg += x;
        r += UniPoly::monomial(bits % 2 ? -1 : 1, deg);
    }
    return r;
}

// t^t_power * num / (1-t)^pole
struct UniSeries {
    UniPoly num;
    int pole = 0;
    int t_power = 0;

    BigInt coefficient(int j) const {
        BigInt r = 0;
        int jj = j - t_power;
        for (int k = 0; k <= num.degree() && k <= jj; ++k) {
            if (num[k] == 0) continue;
            r += num[k] * binomial_multiset(pole, jj - k);
        }
        return r;
    }
    std::vector<BigInt> coefficients(int J) const {
        std::vector<BigInt> out;
        for (int j = 0; j <= J; ++j) out.push_back(coefficient(j));
        return out;
    }
    bool is_zero() const { return num.is_zero(); }

    // number of degree-m monomials in V variables
    static BigInt binomial_multiset(int V, int m) {
        if (m < 0) return 0;
        if (V == 0) return m == 0 ? 1 : 0;
        BigInt r = 1;
        for (int i = 1; i <= m; ++i) r = r * (V - 1 + i) / i;
        return r;
    }
};

struct WidthSeries {
    UniSeries quotient;   // H_{F_n/M_n}
    UniSeries submodule;  // H_{M_n}
};

// All e_pi for pi: [d] -> [n].
inline std::vector<std::vector<int>> basis_maps(int d, int n) {
    std::vector<std::vector<int>> out;
    for_each_increasing(d, n, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

// Hilbert series at width n of F_n / <gens>, gens given as width-n monomials.
inline WidthSeries hilbert_of_generators(int c, int n, const std::vector<Summand>& summands,
                                         const std::vector<Monomial>& gens, bool use_shifts = true) {
    std::map<std::pair<int, std::vector<int>>, std::vector<ExpVec>> groups;
    for (const auto& g : gens) {
        if (g.width != n) throw WidthMismatch("generator width differs from the requested width");
        groups[{g.summand, g.pi}].push_back(g.exps);
    }
    int tmin = 0;
    if (use_shifts)
        for (const auto& s : summands) tmin = std::min(tmin, s.shift);
    IdealHilbert hilb;
    WidthSeries out;
    out.quotient.pole = out.submodule.pole = c * n;
    out.quotient.t_power = out.submodule.t_power = tmin;
    for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
        int sh = (use_shifts ? summands[i].shift : 0) - tmin;
        for (const auto& pi : basis_maps(summands[i].d, n)) {
            auto it = groups.find({i, pi});
            UniPoly N = it == groups.end() ? UniPoly(1) : hilb.numerator(it->second);
            out.quotient.num += N.shifted(sh);
            out.submodule.num += (UniPoly(1) - N).shifted(sh);
        }
    }
    return out;
}

inline WidthSeries hilbert_width(const ModulePresentation& p, int n, bool use_shifts = true) {
    return hilbert_of_generators(p.c, n, p.summands, expand_to_width(p, n), use_shifts);
}

struct DimDeg {
    int krull_dim = 0;
    BigInt multiplicity;
};

inline DimDeg dim_deg(const UniSeries& h) {
    if (h.is_zero()) throw ZeroModule("the module is zero in this width");
    UniPoly g = h.num;
    int k = strip_one_minus_t(g);
    return {h.pole - k, g.eval(BigInt(1))};
}

inline DimDeg dim_deg_width(const ModulePresentation& p, int n, bool quotient = true) {
    auto w = hilbert_width(p, n);
    return dim_deg(quotient ? w.quotient : w.submodule);
}

struct SizeInvariants {
    std::optional<int> wi_plus;       // nullopt means -infinity
    std::optional<int> e_plus_at_wi;  // nullopt means -infinity
    std::optional<BigInt> si;         // nullopt means +infinity
};

inline SizeInvariants size_invariants(const ModulePresentation& p) {
    auto gens = minimal_generators(p.generators);
    if (gens.empty()) return {};
    int wi = 0;
    for (const auto& g : gens) wi = std::max(wi, g.width);
    auto T = expand_generators(gens, wi);
    int e = 0;
    for (const auto& m : T) e = std::max(e, m.degree());
    auto w = hilbert_of_generators(p.c, wi, p.summands, T, false);
    BigInt si = 0;
    for (int j = 0; j <= e; ++j) si += w.quotient.coefficient(j);
    return {wi, e, si};
}

}  // namespace oih
