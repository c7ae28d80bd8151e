#pragma once

// Seeded random presentations shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "oih/automata.hpp"
#include "oih/oi.hpp"
#include "oih/words.hpp"

namespace oih::testing {

struct CorpusLimits {
    int max_c = 2;
    int max_d = 2;
    int max_generators = 3;
    int max_width = 3;
    int max_degree = 3;
    int max_summands = 2;
    int max_shift = 2;
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Monomial random_monomial(std::mt19937_64& rng, int c, int d, int max_width, int max_degree, int summand = 0) {
    int width = uniform(rng, d, std::max(d, max_width));
    if (width == 0) width = uniform(rng, d, std::max(d, max_width));  // the unit is allowed but rare
    std::vector<int> slots(width);
    for (int k = 0; k < width; ++k) slots[k] = k + 1;
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> pi(slots.begin(), slots.begin() + d);
    std::sort(pi.begin(), pi.end());
    Monomial m = Monomial::basis(c, width, pi, summand);
    if (width > 0) {
        int degree = uniform(rng, 0, max_degree);
        for (int k = 0; k < degree; ++k) m.exps[uniform(rng, 0, c * width - 1)] += 1;
    }
    return m;
}

inline ModulePresentation random_presentation(std::mt19937_64& rng, const CorpusLimits& lim = {}) {
    ModulePresentation p;
    p.c = uniform(rng, 1, lim.max_c);
    p.summands.clear();
    int k = uniform(rng, 1, lim.max_summands);
    for (int i = 0; i < k; ++i) p.summands.push_back({uniform(rng, 0, lim.max_d), uniform(rng, 0, lim.max_shift)});
    int g = uniform(rng, 0, lim.max_generators);
    for (int i = 0; i < g; ++i) {
        int s = uniform(rng, 0, k - 1);
        p.generators.push_back(random_monomial(rng, p.c, p.summands[s].d, lim.max_width, lim.max_degree, s));
    }
    return p;
}

inline std::vector<ModulePresentation> corpus(unsigned long long seed, int count, const CorpusLimits& lim = {}) {
    std::mt19937_64 rng(seed);
    std::vector<ModulePresentation> out;
    for (int i = 0; i < count; ++i) out.push_back(random_presentation(rng, lim));
    return out;
}

// Single-summand, unshifted presentations for the decomposition checks.
inline std::vector<ModulePresentation> single_summand_corpus(unsigned long long seed, int count,
                                                            CorpusLimits lim = {}) {
    lim.max_summands = 1;
    lim.max_shift = 0;
    return corpus(seed, count, lim);
}

// FI ideals (d = 0, one summand).
inline std::vector<ModulePresentation> fi_corpus(unsigned long long seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<ModulePresentation> out;
    for (int i = 0; i < count; ++i) {
        ModulePresentation p;
        p.c = uniform(rng, 1, 2);
        p.category = Category::FI;
        int g = uniform(rng, 1, 3);
        for (int k = 0; k < g; ++k) p.generators.push_back(random_monomial(rng, p.c, 0, 3, 3));
        out.push_back(std::move(p));
    }
    return out;
}

inline Monomial ideal_monomial(const std::vector<int>& exps) {
    std::vector<std::vector<int>> cols;
    for (int a : exps) cols.push_back({a});
    return Monomial::make(1, static_cast<int>(exps.size()), {}, cols);
}

inline ModulePresentation ideal(int c, std::vector<Monomial> gens) {
    ModulePresentation p;
    p.c = c;
    p.generators = std::move(gens);
    return p;
}

inline ModulePresentation free_module(int c, int d) {
    ModulePresentation p;
    p.c = c;
    p.summands = {{d, 0}};
    return p;
}

// Every monomial of F^{OI,d} with width <= max_width and degree <= max_degree.
inline std::vector<Monomial> all_monomials(int c, int d, int max_width, int max_degree) {
    std::vector<Monomial> out;
    for (int w = d; w <= max_width; ++w)
        for_each_increasing(d, w, [&](const std::vector<int>& pi) {
            Monomial m = Monomial::basis(c, w, pi);
            std::function<void(int, int)> fill = [&](int k, int left) {
                if (k == c * w) {
                    out.push_back(m);
                    return;
                }
                for (int a = 0; a <= left; ++a) {
                    m.exps[k] = a;
                    fill(k + 1, left - a);
                }
                m.exps[k] = 0;
            };
            fill(0, max_degree);
        });
    return out;
}

// Every word of L_std with at most max_tau tau-letters and max_xi xi-letters,
// found by walking the L_std automaton.
inline std::vector<Word> lstd_words(int c, int d, int max_tau, int max_xi) {
    Dfa a = lstd_dfa(c, d);
    std::vector<Word> out;
    Word w;
    std::function<void(int, int, int)> walk = [&](int q, int taus, int xis) {
        if (a.accepting[q]) out.push_back(w);
        for (int s = 0; s < a.alphabet; ++s) {
            int r = a.next(q, s);
            if (r < 0) continue;
            Letter l = letter_from_code(s, c);
            if (l.is_xi() ? xis == max_xi : taus == max_tau) continue;
            w.push_back(l);
            walk(r, taus + l.is_tau(), xis + l.is_xi());
            w.pop_back();
        }
    };
    walk(a.initial, 0, 0);
    return out;
}

}  // namespace oih::testing
