#pragma once

// Words over {xi_1..xi_c, tau_0..tau_d}, the evaluation map eta and the
// bijection between standard words and monomials of F^{OI,d}.
//
// Text notation: whitespace separated tokens "x<i>" for xi_i and "t<j>" for
// tau_j, e.g. "x1 x1 t1 t0"; the empty word is the empty string.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "oih/errors.hpp"
#include "oih/oi.hpp"

namespace oih {

struct Letter {
    enum class Kind { Xi, Tau };
    Kind kind = Kind::Xi;
    int index = 1;

    static Letter xi(int i) { return {Kind::Xi, i}; }
    static Letter tau(int j) { return {Kind::Tau, j}; }
    bool is_xi() const { return kind == Kind::Xi; }
    bool is_tau() const { return kind == Kind::Tau; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Letters are numbered xi_1..xi_c -> 0..c-1 and tau_0..tau_d -> c..c+d.
inline int letter_code(const Letter& a, int c) { return a.is_xi() ? a.index - 1 : c + a.index; }
inline Letter letter_from_code(int code, int c) {
    return code < c ? Letter::xi(code + 1) : Letter::tau(code - c);
}

inline std::string to_string(const Word& w) {
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += (w[k].is_xi() ? 'x' : 't') + std::to_string(w[k].index);
    }
    return out;
}

inline Word parse_word(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Word w;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 't'))
            throw InvalidInput("bad letter '" + tok + "'");
        for (size_t k = 1; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw InvalidInput("bad letter '" + tok + "'");
        int idx = std::stoi(tok.substr(1));
        if (tok[0] == 'x' && idx < 1) throw InvalidInput("xi indices start at 1");
        w.push_back(tok[0] == 'x' ? Letter::xi(idx) : Letter::tau(idx));
    }
    return w;
}

// (monomial part, position tuple); columns grow on demand
struct EtaValue {
    int c = 1;
    std::vector<int> exps;  // column-major, as in Monomial
    std::vector<int> positions;

    int columns() const { return static_cast<int>(exps.size()) / c; }
    int exp(int i, int j) const { return j <= columns() ? exps[(j - 1) * c + (i - 1)] : 0; }
    friend bool operator==(const EtaValue& a, const EtaValue& b) {
        if (a.c != b.c || a.positions != b.positions) return false;
        int n = std::max(a.columns(), b.columns());
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= a.c; ++i)
                if (a.exp(i, j) != b.exp(i, j)) return false;
        return true;
    }
};

// T_i: every x_{k,l} becomes x_{k,l+1}; positions from slot i on grow by one.
inline EtaValue shift(int i, EtaValue v) {
    v.exps.insert(v.exps.begin(), v.c, 0);
    if (i >= 1)
        for (int j = i; j <= static_cast<int>(v.positions.size()); ++j) ++v.positions[j - 1];
    return v;
}

inline EtaValue eta(const Word& w, int c, int d) {
    EtaValue v;
    v.c = c;
    v.positions.assign(d, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->is_xi()) {
            if (it->index < 1 || it->index > c) throw InvalidInput("xi index out of range");
            if (v.exps.empty()) v.exps.assign(c, 0);
            v.exps[it->index - 1] += 1;
        } else {
            if (it->index < 0 || it->index > d) throw InvalidInput("tau index out of range");
            v = shift(it->index, std::move(v));
        }
    }
    return v;
}

inline bool is_standard(const Word& w) {
    for (size_t k = 1; k < w.size(); ++k)
        if (w[k - 1].is_xi() && w[k].is_xi() && w[k - 1].index > w[k].index) return false;
    return true;
}

// w = w_1 tau_{i_1} ... w_m tau_{i_m}: standard simple blocks, tau indices
// 1..d each at least once in weakly increasing order, then only tau_0.
inline bool is_in_Lstd(const Word& w, int c, int d) {
    int level = 0;       // largest tau index seen, d+1 once tau_0 appeared
    int last_xi = 0;     // index of the preceding xi inside the current block
    for (const auto& a : w) {
        if (a.is_xi()) {
            if (a.index < 1 || a.index > c) return false;
            if (a.index < last_xi) return false;
            last_xi = a.index;
        } else {
            int j = a.index;
            if (j < 0 || j > d) return false;
            if (j == 0) {
                if (level < d) return false;
                level = d + 1;
            } else {
                if (level > d) return false;
                if (j != level && j != level + 1) return false;
                level = j;
            }
            last_xi = 0;
        }
    }
    return last_xi == 0 && level >= d;
}

// mu: standard word -> monomial of width #tau
inline Monomial decode(const Word& w, int c, int d, int summand = 0) {
    if (!is_in_Lstd(w, c, d)) throw NotInLanguage("word '" + to_string(w) + "' is not in L_std");
    int width = 0;
    for (const auto& a : w) width += a.is_tau();
    EtaValue v = eta(w, c, d);
    Monomial m;
    m.summand = summand;
    m.c = c;
    m.width = width;
    m.exps.assign(static_cast<size_t>(c) * width, 0);
    for (int j = 1; j <= std::min(width, v.columns()); ++j)
        for (int i = 1; i <= c; ++i) m.exp(i, j) = v.exp(i, j);
    m.pi = v.positions;
    m.validate();
    return m;
}

// mu^{-1}: xi^{u_1} tau_{iota(1)} ... xi^{u_m} tau_{iota(m)}
inline Word encode(const Monomial& m) {
    Word w;
    int d = m.d();
    for (int k = 1; k <= m.width; ++k) {
        for (int i = 1; i <= m.c; ++i)
            for (int r = 0; r < m.exp(i, k); ++r) w.push_back(Letter::xi(i));
        int iota = 0;
        for (int j = 1; j <= d; ++j) {
            int prev = j == 1 ? 0 : m.pi[j - 2];
            if (prev < k && k <= m.pi[j - 1]) iota = j;
        }
        w.push_back(Letter::tau(iota));
    }
    return w;
}

}  // namespace oih
