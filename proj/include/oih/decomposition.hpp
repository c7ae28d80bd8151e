#pragma once

// Width-lowering map Res, the modules Q'(e) and Q''(e), and width-wise checks
// of the resulting decomposition and of the repeated-division identities.

#include <optional>
#include <vector>

#include "oih/hilbert.hpp"
#include "oih/oi.hpp"

namespace oih {

struct ResImage {
    Monomial mono;
    bool in_g = false;  // true: lands in G = F^{OI,d-1}, false: in F
};

inline ResImage res(const Monomial& m) {
    if (m.width < 1) throw InvalidInput("res needs width at least 1");
    if (!m.column_empty(1)) throw Column1NotEmpty("monomial " + m.to_string() + " uses column 1");
    ResImage out;
    Monomial& r = out.mono;
    r.summand = m.summand;
    r.c = m.c;
    r.width = m.width - 1;
    r.exps.assign(m.exps.begin() + m.c, m.exps.end());
    int d = m.d();
    out.in_g = d >= 1 && m.pi[0] == 1;
    for (int k = out.in_g ? 1 : 0; k < d; ++k) r.pi.push_back(m.pi[k] - 1);
    r.validate();
    return out;
}

// x_{i,1} e_pi for every basis element of every summand at width n.
inline std::vector<Monomial> column_one_generators(int c, int n, const std::vector<Summand>& summands) {
    std::vector<Monomial> out;
    if (n < 1) return out;
    for (int s = 0; s < static_cast<int>(summands.size()); ++s)
        for (const auto& pi : basis_maps(summands[s].d, n))
            for (int i = 1; i <= c; ++i) {
                Monomial m = Monomial::basis(c, n, pi, s);
                m.exp(i, 1) = 1;
                out.push_back(std::move(m));
            }
    return out;
}

struct DecompositionResult {
    std::vector<int> e;
    std::optional<ModulePresentation> q_prime;  // absent when d = 0
    ModulePresentation q_double_prime;
    int m = 0;
};

inline void require_single_summand(const ModulePresentation& p) {
    p.validate();
    if (p.summands.size() != 1 || p.category != Category::OI)
        throw InvalidInput("decomposition works on a monomial submodule of a single free OI-module");
}

// Generation width used for the decomposition: wi+ and at least d.
inline int decomposition_width(const ModulePresentation& p) {
    int m = p.summands[0].d;
    for (const auto& g : minimal_generators(p.generators)) m = std::max(m, g.width);
    return m;
}

inline DecompositionResult compute_q(const ModulePresentation& input, const std::vector<int>& e) {
    require_single_summand(input);
    if (static_cast<int>(e.size()) != input.c) throw InvalidInput("e needs c entries");
    for (int x : e)
        if (x < 0) throw InvalidInput("e must be non-negative");
    ModulePresentation p = minimalize(input);
    p.summands[0].shift = 0;
    int d = p.summands[0].d;
    DecompositionResult out;
    out.e = e;
    out.m = decomposition_width(p);
    out.q_double_prime.c = p.c;
    out.q_double_prime.summands = {{d, 0}};
    if (d >= 1) {
        ModulePresentation qp;
        qp.c = p.c;
        qp.summands = {{d - 1, 0}};
        for (const auto& g : colon_width(p, out.m, e))
            if (g.pi[0] == 1 && g.column_empty(1)) qp.generators.push_back(res(g).mono);
        out.q_prime = minimalize(qp);
    }
    for (const auto& g : colon_width(p, out.m + 1, e))
        if ((d == 0 || g.pi[0] >= 2) && g.column_empty(1)) out.q_double_prime.generators.push_back(res(g).mono);
    out.q_double_prime = minimalize(out.q_double_prime);
    return out;
}

struct DecompositionCheck {
    bool holds = true;
    std::vector<BigInt> lhs, rhs;  // dims in degrees 0..J
};

// Compares F_n/(M_n : x^e + x_1 F_n) with G_{n-1}/Q'_{n-1} + F_{n-1}/Q''_{n-1}.
inline DecompositionCheck check_decomposition(const ModulePresentation& p, const DecompositionResult& q, int n,
                                              int J) {
    if (n < q.m + 1) throw InvalidInput("decomposition holds from width m + 1 on");
    std::vector<Summand> one{{p.summands[0].d, 0}};
    auto gens = colon_width(p, n, q.e);
    auto x1 = column_one_generators(p.c, n, one);
    gens.insert(gens.end(), x1.begin(), x1.end());
    for (auto& g : gens) g.summand = 0;
    DecompositionCheck out;
    out.lhs = hilbert_of_generators(p.c, n, one, minimalize_same_width(gens), false).quotient.coefficients(J);
    out.rhs = hilbert_width(q.q_double_prime, n - 1, false).quotient.coefficients(J);
    if (q.q_prime) {
        auto g = hilbert_width(*q.q_prime, n - 1, false).quotient.coefficients(J);
        for (int j = 0; j <= J; ++j) out.rhs[j] += g[j];
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

inline bool verify_decomposition(const ModulePresentation& p, const std::vector<int>& e, int n, int J) {
    auto q = compute_q(p, e);
    return check_decomposition(minimalize(p), q, n, J).holds;
}

// si(M) >= si(Q''(e)), with equality iff M_n = Q''_n for n >= m (checked up
// to m + extra).
struct SizeCheck {
    std::optional<BigInt> si_m, si_q;  // nullopt is +infinity
    bool inequality = true;
    bool equality = false;
    bool same_components = false;
    bool consistent = true;
};

inline bool si_ge(const std::optional<BigInt>& a, const std::optional<BigInt>& b) {
    if (!a) return true;
    if (!b) return false;
    return *a >= *b;
}

inline SizeCheck check_size(const ModulePresentation& input, const DecompositionResult& q, int extra = 3) {
    ModulePresentation p = minimalize(input);
    p.summands[0].shift = 0;
    SizeCheck out;
    out.si_m = size_invariants(p).si;
    out.si_q = size_invariants(q.q_double_prime).si;
    out.inequality = si_ge(out.si_m, out.si_q);
    out.equality = out.si_m == out.si_q;
    out.same_components = true;
    for (int n = q.m; n <= q.m + extra; ++n)
        if (expand_to_width(p, n) != expand_to_width(q.q_double_prime, n)) out.same_components = false;
    out.consistent = out.inequality && out.equality == out.same_components;
    return out;
}

// M_m is contained in Q''(e)_m.
inline bool contains_at_generation_width(const ModulePresentation& p, const DecompositionResult& q) {
    auto qm = expand_to_width(q.q_double_prime, q.m);
    for (const auto& g : expand_to_width(p, q.m)) {
        bool in = false;
        for (const auto& h : qm)
            if (divides_same_width(h, g)) {
                in = true;
                break;
            }
        if (!in) return false;
    }
    return true;
}

// Numerator over (1-t)^{cn} of F_n/(T + x_1F_n) restricted colon by x^e, T = M_n.
inline UniPoly colon_quotient_numerator(const ModulePresentation& p, int n, const std::vector<int>& e,
                                        bool add_column_one) {
    auto gens = colon_width(p, n, e);
    if (add_column_one) {
        auto x1 = column_one_generators(p.c, n, p.summands);
        gens.insert(gens.end(), x1.begin(), x1.end());
    }
    return hilbert_of_generators(p.c, n, p.summands, minimalize_same_width(gens), false).quotient.num;
}

inline int column_one_bound(const ModulePresentation& p, int n) {
    int r = 0;
    for (const auto& g : expand_to_width(p, n))
        for (int i = 1; i <= p.c; ++i) r = std::max(r, g.exp(i, 1));
    return r + 1;
}

// H_{F/T} = sum_{0 <= e_l <= r} t^{|e|}/(1-t)^{gamma(e)} H_{F/(T : x^e + x_1 F)},
// checked as a polynomial identity after clearing (1-t)^{cn+c}.
inline bool check_repeated_division(const ModulePresentation& p, int n, int r_override = 0) {
    if (n < 1) throw InvalidInput("repeated division needs width at least 1");
    int c = p.c;
    int r = r_override > 0 ? r_override : column_one_bound(p, n);
    UniPoly lhs = colon_quotient_numerator(p, n, std::vector<int>(c, 0), false) * UniPoly::one_minus_t(c);
    UniPoly rhs;
    std::vector<int> e(c, 0);
    while (true) {
        int gamma = 0, total = 0;
        for (int x : e) {
            gamma += x == r;
            total += x;
        }
        rhs += (colon_quotient_numerator(p, n, e, true) * UniPoly::one_minus_t(c - gamma)).shifted(total);
        int k = 0;
        while (k < c && e[k] == r) e[k++] = 0;
        if (k == c) break;
        ++e[k];
    }
    return lhs == rhs;
}

// Single linear form l = x_{i,1}: sum_{e<r} t^e H_{F/(T:l^e+lF)} + t^r/(1-t) H_{F/(T:l^r+lF)}.
inline bool check_single_division(const ModulePresentation& p, int n, int i, int r) {
    if (n < 1 || i < 1 || i > p.c || r < 0) throw InvalidInput("bad repeated division parameters");
    auto numerator = [&](int power) {
        std::vector<int> e(p.c, 0);
        e[i - 1] = power;
        auto gens = colon_width(p, n, e);
        for (const auto& g : column_one_generators(p.c, n, p.summands))
            if (g.exp(i, 1) == 1) gens.push_back(g);
        return hilbert_of_generators(p.c, n, p.summands, minimalize_same_width(gens), false).quotient.num;
    };
    auto stable = [&](int power) {
        std::vector<int> e(p.c, 0);
        e[i - 1] = power;
        return e;
    };
    if (colon_width(p, n, stable(r)) != colon_width(p, n, stable(r + 1)))
        throw InvalidInput("T : l^r differs from T : l^(r+1)");
    UniPoly lhs = colon_quotient_numerator(p, n, std::vector<int>(p.c, 0), false) * UniPoly::one_minus_t(1);
    UniPoly rhs;
    for (int e = 0; e < r; ++e) rhs += (numerator(e) * UniPoly::one_minus_t(1)).shifted(e);
    rhs += numerator(r).shifted(r);
    return lhs == rhs;
}

}  // namespace oih
