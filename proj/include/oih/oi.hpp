#pragma once

// Monomials of free OI-modules over (X^{OI,1})^{tensor c}, OI-morphisms and
// OI-divisibility, width-wise generators, monomial orders.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oih/errors.hpp"
#include "oih/poly.hpp"

namespace oih {

struct OIMorphism {
    int source = 0;
    int target = 0;
    std::vector<int> images;  // 1-indexed, strictly increasing

    static OIMorphism identity(int n) {
        OIMorphism e{n, n, std::vector<int>(n)};
        std::iota(e.images.begin(), e.images.end(), 1);
        return e;
    }
    void validate() const {
        if (static_cast<int>(images.size()) != source)
            throw InvalidInput("morphism image list has the wrong length");
        for (int i = 0; i < source; ++i) {
            if (images[i] < 1 || images[i] > target) throw InvalidInput("morphism image out of range");
            if (i > 0 && images[i] <= images[i - 1])
                throw InvalidInput("morphism images must be strictly increasing");
        }
    }
    int operator()(int i) const { return images[i - 1]; }
    friend bool operator==(const OIMorphism&, const OIMorphism&) = default;
};

inline OIMorphism compose(const OIMorphism& outer, const OIMorphism& inner) {
    if (inner.target != outer.source) throw WidthMismatch("cannot compose morphisms");
    OIMorphism r{inner.source, outer.target, {}};
    for (int x : inner.images) r.images.push_back(outer(x));
    return r;
}

// All strictly increasing maps [m] -> [n].
inline void for_each_increasing(int m, int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (m > n || m < 0) return;
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    while (true) {
        fn(v);
        int i = m - 1;
        while (i >= 0 && v[i] == n - m + i + 1) --i;
        if (i < 0) return;
        ++v[i];
        for (int k = i + 1; k < m; ++k) v[k] = v[k - 1] + 1;
    }
}

inline std::vector<OIMorphism> all_morphisms(int m, int n) {
    std::vector<OIMorphism> out;
    for_each_increasing(m, n, [&](const std::vector<int>& v) { out.push_back({m, n, v}); });
    return out;
}

struct Monomial {
    int summand = 0;
    int c = 1;
    int width = 0;
    std::vector<int> pi;    // images of [d] in [width], 1-indexed
    std::vector<int> exps;  // column-major: exps[(j-1)*c + (i-1)] is the exponent of x_{i,j}

    static Monomial make(int c, int width, std::vector<int> pi, const std::vector<std::vector<int>>& columns,
                         int summand = 0) {
        Monomial m;
        m.summand = summand;
        m.c = c;
        m.width = width;
        m.pi = std::move(pi);
        m.exps.assign(static_cast<size_t>(c) * width, 0);
        if (!columns.empty() && static_cast<int>(columns.size()) != width)
            throw InvalidInput("exponent matrix needs one column per width position");
        for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
            if (static_cast<int>(columns[j].size()) != c)
                throw InvalidInput("each exponent column needs c entries");
            for (int i = 0; i < c; ++i) m.exps[j * c + i] = columns[j][i];
        }
        m.validate();
        return m;
    }
    // Unit monomial e_pi.
    static Monomial basis(int c, int width, std::vector<int> pi, int summand = 0) {
        return make(c, width, std::move(pi), {}, summand);
    }

    int d() const { return static_cast<int>(pi.size()); }
    int exp(int i, int j) const { return exps[(j - 1) * c + (i - 1)]; }
    int& exp(int i, int j) { return exps[(j - 1) * c + (i - 1)]; }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool column_empty(int j) const {
        for (int i = 1; i <= c; ++i)
            if (exp(i, j) != 0) return false;
        return true;
    }
    std::vector<int> column(int j) const {
        return {exps.begin() + (j - 1) * c, exps.begin() + j * c};
    }

    void validate() const {
        if (c < 1) throw InvalidInput("c must be positive");
        if (width < 0) throw InvalidInput("negative width");
        if (static_cast<int>(exps.size()) != c * width) throw InvalidInput("exponent matrix size mismatch");
        for (int x : exps)
            if (x < 0) throw InvalidInput("negative exponent");
        OIMorphism{d(), width, pi}.validate();
    }

    // x{1,2}^2 x{2,3} e(1,3) @3 ; the unit of a d=0 summand prints as 1 @n
    std::string to_string() const {
        std::ostringstream os;
        bool any = false;
        for (int j = 1; j <= width; ++j)
            for (int i = 1; i <= c; ++i) {
                int a = exp(i, j);
                if (a == 0) continue;
                os << (any ? " " : "") << "x{" << i << "," << j << "}";
                if (a > 1) os << "^" << a;
                any = true;
            }
        if (!pi.empty()) {
            os << (any ? " " : "") << "e(";
            for (size_t k = 0; k < pi.size(); ++k) os << (k ? "," : "") << pi[k];
            os << ")";
            any = true;
        }
        if (!any) os << "1";
        os << " @" << width;
        return os.str();
    }

    auto key() const { return std::tie(summand, width, pi, exps, c); }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key() == b.key(); }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Structural order for containers; compare_monomials is the monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

struct Summand {
    int d = 0;
    int shift = 0;
};

enum class Category { OI, FI };

struct ModulePresentation {
    int c = 1;
    std::vector<Summand> summands{{0, 0}};
    std::vector<Monomial> generators;
    Category category = Category::OI;

    void validate() const {
        if (c < 1) throw InvalidInput("c must be positive");
        if (summands.empty()) throw InvalidInput("at least one free summand is required");
        for (const auto& s : summands)
            if (s.d < 0) throw InvalidInput("negative summand rank d");
        if (category == Category::FI)
            for (const auto& s : summands)
                if (s.d != 0) throw NotAnIdeal("FI presentations are supported only for d = 0");
        for (const auto& g : generators) {
            if (g.summand < 0 || g.summand >= static_cast<int>(summands.size()))
                throw InvalidInput("generator refers to a missing summand");
            if (g.c != c) throw InvalidInput("generator has the wrong number of variable rows");
            if (g.d() != summands[g.summand].d)
                throw InvalidInput("generator basis map has the wrong source width");
            g.validate();
        }
    }
};

inline Monomial apply_morphism(const OIMorphism& eps, const Monomial& m) {
    if (eps.source != m.width) throw WidthMismatch("morphism source width differs from monomial width");
    Monomial r;
    r.summand = m.summand;
    r.c = m.c;
    r.width = eps.target;
    r.exps.assign(static_cast<size_t>(m.c) * eps.target, 0);
    for (int j = 1; j <= m.width; ++j)
        for (int i = 1; i <= m.c; ++i) r.exp(i, eps(j)) = m.exp(i, j);
    for (int x : m.pi) r.pi.push_back(eps(x));
    return r;
}

namespace detail {
inline bool column_le(const Monomial& g, int jg, const Monomial& m, int jm) {
    for (int i = 1; i <= g.c; ++i)
        if (g.exp(i, jg) > m.exp(i, jm)) return false;
    return true;
}

// Backtracking over eps(k) for k = 1..g.width; `fixed` pins eps(g.pi) = m.pi.
inline bool divides_search(const Monomial& g, const Monomial& m, int k, int lo, std::vector<int>& img,
                           const std::vector<int>& fixed, std::vector<OIMorphism>* witnesses) {
    if (k > g.width) {
        if (witnesses) witnesses->push_back({g.width, m.width, img});
        return true;
    }
    int remaining = g.width - k;
    int hi = m.width - remaining;
    int a = lo, b = hi;
    if (fixed[k] > 0) a = b = fixed[k];
    bool found = false;
    for (int x = a; x <= b; ++x) {
        if (x < lo || x > hi) continue;
        if (!column_le(g, k, m, x)) continue;
        img.push_back(x);
        found = divides_search(g, m, k + 1, x + 1, img, fixed, witnesses) || found;
        img.pop_back();
        if (found && !witnesses) return true;
    }
    return found;
}
}  // namespace detail

// g | m in the OI sense; with a witness list every eps is enumerated.
inline bool oi_divides(const Monomial& g, const Monomial& m, std::vector<OIMorphism>* witnesses = nullptr) {
    if (g.summand != m.summand) throw SummandMismatch("divisibility across different summands");
    if (g.c != m.c || g.d() != m.d()) throw SummandMismatch("monomials live in different free modules");
    if (witnesses) witnesses->clear();
    if (g.width > m.width || g.degree() > m.degree()) return false;
    std::vector<int> fixed(g.width + 1, 0);
    for (int k = 0; k < g.d(); ++k) fixed[g.pi[k]] = m.pi[k];
    for (int k = 1; k <= g.width; ++k) {
        if (fixed[k] == 0) continue;
        // pinned columns must stay in increasing position order automatically
        if (fixed[k] - k < 0 || (m.width - fixed[k]) < (g.width - k)) return false;
    }
    std::vector<int> img;
    return detail::divides_search(g, m, 1, 1, img, fixed, witnesses);
}

// Same summand, width and basis element, coefficient divides.
inline bool divides_same_width(const Monomial& g, const Monomial& m) {
    if (g.summand != m.summand || g.width != m.width || g.pi != m.pi) return false;
    for (size_t k = 0; k < g.exps.size(); ++k)
        if (g.exps[k] > m.exps[k]) return false;
    return true;
}

// Removes duplicates and monomials divisible (same width) by another one.
inline std::vector<Monomial> minimalize_same_width(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (divides_same_width(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Unique minimal monomial generating set under OI-divisibility.
inline std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    gens = minimalize_same_width(std::move(gens));
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.width != b.width) return a.width < b.width;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.summand == g.summand && oi_divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline ModulePresentation minimalize(ModulePresentation p) {
    p.generators = minimal_generators(std::move(p.generators));
    return p;
}

inline std::vector<Monomial> expand_generators(const std::vector<Monomial>& gens, int n) {
    std::vector<Monomial> all;
    for (const auto& g : gens) {
        if (g.width > n) continue;
        for_each_increasing(g.width, n, [&](const std::vector<int>& v) {
            all.push_back(apply_morphism({g.width, n, v}, g));
        });
    }
    return minimalize_same_width(std::move(all));
}

// Minimal generators of M_n as a P_n-module.
inline std::vector<Monomial> expand_to_width(const ModulePresentation& p, int n) {
    if (n < 0) throw InvalidInput("negative width");
    return expand_generators(p.generators, n);
}

// Minimal generators of M_n : x_{.,1}^e.
inline std::vector<Monomial> colon_width(const ModulePresentation& p, int n, const std::vector<int>& e) {
    if (static_cast<int>(e.size()) != p.c) throw InvalidInput("colon exponent needs c entries");
    std::vector<Monomial> out;
    for (auto m : expand_to_width(p, n)) {
        if (n >= 1)
            for (int i = 1; i <= p.c; ++i) m.exp(i, 1) -= std::min(e[i - 1], m.exp(i, 1));
        out.push_back(std::move(m));
    }
    return minimalize_same_width(std::move(out));
}

// Monomial order: summand index first (smaller index is larger), then
// (width, pi) lexicographically, then lex on coefficients with
// x_{i,j} > x_{i',j'} iff j > j' or (j = j' and i > i').
inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    if (a.summand != b.summand) return b.summand <=> a.summand;
    if (a.width != b.width) return a.width <=> b.width;
    if (a.pi != b.pi) return a.pi <=> b.pi;
    for (int j = a.width; j >= 1; --j)
        for (int i = a.c; i >= 1; --i)
            if (a.exp(i, j) != b.exp(i, j)) return a.exp(i, j) <=> b.exp(i, j);
    return std::strong_ordering::equal;
}

struct PolyTerm {
    BigInt coeff;
    Monomial mono;
};
using PolyElement = std::vector<PolyTerm>;

inline Monomial leading_monomial(const PolyElement& element) {
    // combine like terms first so cancellations are honoured
    std::map<Monomial, BigInt> acc;
    for (const auto& t : element) acc[t.mono] += t.coeff;
    std::optional<Monomial> best;
    for (const auto& [m, k] : acc) {
        if (k == 0) continue;
        if (!best || compare_monomials(m, *best) > 0) best = m;
    }
    if (!best) throw ZeroElement("leading monomial of the zero element");
    return *best;
}

// Leading monomials of elements asserted to form a Groebner basis.
inline ModulePresentation with_groebner_elements(ModulePresentation p, const std::vector<PolyElement>& basis) {
    for (const auto& el : basis) p.generators.push_back(leading_monomial(el));
    return p;
}

inline Monomial permute_columns(const Monomial& m, const std::vector<int>& sigma) {
    Monomial r = m;
    for (int j = 1; j <= m.width; ++j)
        for (int i = 1; i <= m.c; ++i) r.exp(i, sigma[j - 1]) = m.exp(i, j);
    return r;
}

// OI generators of the FI ideal generated by gens.
inline std::vector<Monomial> symmetrize_fi_ideal(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        if (g.d() != 0) throw NotAnIdeal("FI symmetrization needs d = 0 generators");
        std::vector<int> sigma(g.width);
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            out.push_back(permute_columns(g, sigma));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return minimal_generators(std::move(out));
}

inline ModulePresentation symmetrize(ModulePresentation p) {
    for (const auto& s : p.summands)
        if (s.d != 0) throw NotAnIdeal("FI symmetrization needs d = 0 summands");
    p.generators = symmetrize_fi_ideal(p.generators);
    p.category = Category::OI;
    return p;
}

// Width-n generators of an FI ideal by brute force over all injections.
inline std::vector<Monomial> fi_expand_to_width(const std::vector<Monomial>& gens, int n) {
    std::vector<Monomial> all;
    for (const auto& g : gens) {
        if (g.d() != 0) throw NotAnIdeal("FI expansion needs d = 0 generators");
        if (g.width > n) continue;
        std::vector<int> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + g.width, 1);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<int> img;
            for (int k = 0; k < n; ++k)
                if (pick[k]) img.push_back(k + 1);
            std::vector<int> order(g.width);
            std::iota(order.begin(), order.end(), 0);
            do {
                Monomial r;
                r.summand = g.summand;
                r.c = g.c;
                r.width = n;
                r.exps.assign(static_cast<size_t>(g.c) * n, 0);
                for (int j = 1; j <= g.width; ++j)
                    for (int i = 1; i <= g.c; ++i) r.exp(i, img[order[j - 1]]) = g.exp(i, j);
                all.push_back(std::move(r));
            } while (std::next_permutation(order.begin(), order.end()));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return minimalize_same_width(std::move(all));
}

}  // namespace oih
