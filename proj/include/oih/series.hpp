#pragma once

// Equivariant Hilbert series of monomial submodules and quotients.

#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "oih/automata.hpp"
#include "oih/hilbert.hpp"
#include "oih/oi.hpp"
#include "oih/rational.hpp"

namespace oih {

// s^d (1-t)^c / ((1-t)^c - s)^{d+1}
inline FactoredRational free_series(int c, int d) {
    if (c < 1 || d < 0) throw InvalidInput("free_series needs c >= 1 and d >= 0");
    BiPoly omt(UniPoly::one_minus_t(c));
    BiPoly num = omt.shifted(d, 0);
    FactoredRational r(num, {{omt - BiPoly::s(), d + 1}});
    r.reduced = true;
    return r;
}

// Minimal DFA for the union of mu^{-1}(Mon<g>) over gens, inside L_std.
inline Dfa submodule_automaton(const std::vector<Monomial>& gens, int c, int d) {
    Dfa lstd = lstd_dfa(c, d);
    Dfa acc = Dfa::empty_language(c + d + 1);
    bool first = true;
    for (const auto& g : gens) {
        if (g.c != c || g.d() != d) throw SummandMismatch("generator does not live in F^{OI,d}");
        Dfa one = minimize(determinize(intersect(generator_language(g), lstd)));
        acc = first ? one : dfa_union(acc, one);
        first = false;
    }
    return acc;
}

inline FactoredRational submodule_series(const std::vector<Monomial>& gens, int c, int d,
                                         int* automaton_states = nullptr) {
    if (gens.empty()) {
        if (automaton_states) *automaton_states = 0;
        return FactoredRational();
    }
    Dfa a = submodule_automaton(minimal_generators(gens), c, d);
    if (automaton_states) *automaton_states = a.states;
    return reduce_rational(generating_function(a, standard_weights(c, d)));
}

struct SummandSeries {
    int summand = 0;
    FactoredRational submodule;  // H of N^i
    FactoredRational free;       // H of F^{OI,d_i}
    int automaton_states = 0;
};

struct HilbertResult {
    FactoredRational series;
    std::vector<SummandSeries> breakdown;
    bool quotient = true;
    bool reduced = false;
};

// Parallelism cap from OIH_THREADS (default: hardware concurrency).
inline unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OIH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return hw;
}

inline HilbertResult module_series(const ModulePresentation& input, bool as_quotient = true, bool reduce = true) {
    input.validate();
    ModulePresentation p = input.category == Category::FI ? symmetrize(input) : input;
    int k = static_cast<int>(p.summands.size());
    std::vector<std::vector<Monomial>> groups(k);
    for (const auto& g : p.generators) groups[g.summand].push_back(g);

    HilbertResult res;
    res.quotient = as_quotient;
    res.breakdown.resize(k);
    auto work = [&](int i) {
        auto& b = res.breakdown[i];
        b.summand = i;
        b.free = free_series(p.c, p.summands[i].d);
        b.submodule = submodule_series(groups[i], p.c, p.summands[i].d, &b.automaton_states);
    };
    unsigned cap = std::min<unsigned>(thread_cap(), static_cast<unsigned>(k));
    if (cap <= 1) {
        for (int i = 0; i < k; ++i) work(i);
    } else {
        for (int start = 0; start < k; start += static_cast<int>(cap)) {
            std::vector<std::future<void>> jobs;
            for (int i = start; i < std::min(k, start + static_cast<int>(cap)); ++i)
                jobs.push_back(std::async(std::launch::async, work, i));
            for (auto& j : jobs) j.get();
        }
    }
    FactoredRational total;
    for (int i = 0; i < k; ++i) {
        const auto& b = res.breakdown[i];
        FactoredRational part = as_quotient ? b.free - b.submodule : b.submodule;
        total = total + times_t(part, p.summands[i].shift);
    }
    res.series = reduce ? reduce_rational(total) : total;
    res.reduced = reduce;
    return res;
}

// Width-wise table of dim_K [M_n]_j (or of the quotient) straight from
// hilbert_width; FI presentations go through the brute-force expansion.
inline SeriesWindow widthwise_window(const ModulePresentation& p, bool quotient, int N, int J) {
    p.validate();
    SeriesWindow w;
    w.N = N;
    w.J = J;
    for (const auto& s : p.summands) w.j_lo = std::min(w.j_lo, s.shift);
    for (int n = 0; n <= N; ++n) {
        auto gens = p.category == Category::FI ? minimalize_same_width(fi_expand_to_width(p.generators, n))
                                               : expand_to_width(p, n);
        auto ws = hilbert_of_generators(p.c, n, p.summands, gens);
        const UniSeries& u = quotient ? ws.quotient : ws.submodule;
        std::vector<BigInt> row;
        for (int j = w.j_lo; j <= J; ++j) row.push_back(u.coefficient(j));
        w.table.push_back(std::move(row));
    }
    return w;
}

struct WindowMismatch {
    int n = 0, j = 0;
    BigInt series, widthwise;
};

inline std::optional<WindowMismatch> first_mismatch(const SeriesWindow& a, const SeriesWindow& b) {
    int jlo = std::min(a.j_lo, b.j_lo);
    for (int n = 0; n <= std::min(a.N, b.N); ++n)
        for (int j = jlo; j <= std::min(a.J, b.J); ++j)
            if (a.at(n, j) != b.at(n, j)) return WindowMismatch{n, j, a.at(n, j), b.at(n, j)};
    return std::nullopt;
}

}  // namespace oih
