#pragma once

// Finite automata over the letter codes of words.hpp, the languages L_std
// and mu^{-1}(Mon<g>), and transfer-matrix generating functions.

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <utility>
#include <vector>

#include "oih/oi.hpp"
#include "oih/rational.hpp"
#include "oih/words.hpp"

namespace oih {

constexpr int kEpsilon = -1;

struct Nfa {
    int alphabet = 0;
    std::vector<std::vector<std::pair<int, int>>> out;  // (symbol or kEpsilon, target)
    std::vector<int> initial;
    std::vector<bool> accepting;

    int size() const { return static_cast<int>(out.size()); }
    int add_state(bool acc = false) {
        out.emplace_back();
        accepting.push_back(acc);
        return size() - 1;
    }
    void add(int from, int symbol, int to) { out[from].emplace_back(symbol, to); }

    std::vector<int> closure(std::vector<int> set) const {
        std::vector<bool> seen(size(), false);
        std::vector<int> stack;
        for (int q : set)
            if (!seen[q]) {
                seen[q] = true;
                stack.push_back(q);
            }
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (auto [a, r] : out[q])
                if (a == kEpsilon && !seen[r]) {
                    seen[r] = true;
                    stack.push_back(r);
                }
        }
        std::vector<int> res;
        for (int q = 0; q < size(); ++q)
            if (seen[q]) res.push_back(q);
        return res;
    }
    bool accepts(const std::vector<int>& word) const {
        auto cur = closure(initial);
        for (int a : word) {
            std::vector<int> nxt;
            for (int q : cur)
                for (auto [b, r] : out[q])
                    if (b == a) nxt.push_back(r);
            cur = closure(nxt);
            if (cur.empty()) return false;
        }
        for (int q : cur)
            if (accepting[q]) return true;
        return false;
    }
};

struct Dfa {
    int alphabet = 0;
    int states = 0;
    std::vector<int> delta;  // states * alphabet, -1 for a missing transition
    int initial = 0;
    std::vector<bool> accepting;

    static Dfa empty_language(int alphabet) {
        Dfa d;
        d.alphabet = alphabet;
        d.states = 1;
        d.delta.assign(alphabet, -1);
        d.accepting = {false};
        return d;
    }
    int next(int q, int a) const { return delta[static_cast<size_t>(q) * alphabet + a]; }
    int& next(int q, int a) { return delta[static_cast<size_t>(q) * alphabet + a]; }
    int add_state(bool acc) {
        delta.resize(delta.size() + alphabet, -1);
        accepting.push_back(acc);
        return states++;
    }
    bool accepts(const std::vector<int>& word) const {
        int q = initial;
        for (int a : word) {
            q = next(q, a);
            if (q < 0) return false;
        }
        return accepting[q];
    }
};

inline std::vector<int> word_codes(const Word& w, int c) {
    std::vector<int> out;
    for (const auto& a : w) out.push_back(letter_code(a, c));
    return out;
}

// L_std as a DFA; state = (tau level, index of the preceding xi in the block).
inline Dfa lstd_dfa(int c, int d) {
    if (c < 1 || d < 0) throw InvalidInput("lstd_dfa needs c >= 1 and d >= 0");
    Dfa a;
    a.alphabet = c + d + 1;
    int levels = d + 2;  // 0..d, then d+1 for the tau_0 tail
    auto id = [&](int level, int last) { return level * (c + 1) + last; };
    for (int level = 0; level < levels; ++level)
        for (int last = 0; last <= c; ++last) a.add_state(last == 0 && level >= d);
    for (int level = 0; level < levels; ++level)
        for (int last = 0; last <= c; ++last) {
            int q = id(level, last);
            for (int i = std::max(last, 1); i <= c; ++i) a.next(q, i - 1) = id(level, i);
            if (level >= d) a.next(q, c) = id(d + 1, 0);
            if (level <= d)
                for (int j = std::max(level, 1); j <= std::min(level + 1, d); ++j) a.next(q, c + j) = id(j, 0);
        }
    a.initial = id(0, 0);
    return a;
}

// L-bar_{i_1} N_{w_1} tau_{i_1} ... L-bar_{i_m} N_{w_m} tau_{i_m} L-bar_0, with
// N_w = xi_1* xi_1^{a_1} ... xi_c* xi_c^{a_c}. This divisor language only
// contains the standard-form divisors, which is all that survives the
// intersection with L_std.
inline Nfa generator_language(const Monomial& g) {
    int c = g.c, d = g.d();
    Nfa A;
    A.alphabet = c + d + 1;
    auto loop_block = [&](int p, int tau) {
        int b = A.add_state();
        for (int i = 0; i < c; ++i) {
            A.add(p, i, b);
            A.add(b, i, b);
        }
        A.add(b, c + tau, p);
        A.add(p, c + tau, p);
    };
    Word w = encode(g);
    int cur = A.add_state();
    A.initial = {cur};
    std::vector<int> block(c, 0);
    for (const auto& letter : w) {
        if (letter.is_xi()) {
            ++block[letter.index - 1];
            continue;
        }
        loop_block(cur, letter.index);
        int q = cur;
        for (int i = 1; i <= c; ++i) {
            int q0 = A.add_state();
            A.add(q, kEpsilon, q0);
            A.add(q0, i - 1, q0);
            q = q0;
            for (int r = 0; r < block[i - 1]; ++r) {
                int q1 = A.add_state();
                A.add(q, i - 1, q1);
                q = q1;
            }
        }
        int nxt = A.add_state();
        A.add(q, c + letter.index, nxt);
        cur = nxt;
        std::fill(block.begin(), block.end(), 0);
    }
    loop_block(cur, 0);
    A.accepting[cur] = true;
    return A;
}

inline Nfa unite(const Nfa& a, const Nfa& b) {
    if (a.alphabet != b.alphabet) throw InvalidInput("alphabets differ");
    Nfa r = a;
    int off = a.size();
    for (int q = 0; q < b.size(); ++q) {
        r.add_state(b.accepting[q]);
        for (auto [s, t] : b.out[q]) r.add(off + q, s, off + t);
    }
    for (int q : b.initial) r.initial.push_back(off + q);
    return r;
}

inline Nfa intersect(const Nfa& a, const Dfa& d) {
    if (a.alphabet != d.alphabet) throw InvalidInput("alphabets differ");
    Nfa r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> ids;
    std::queue<std::pair<int, int>> work;
    auto get = [&](int p, int q) {
        auto [it, fresh] = ids.emplace(std::make_pair(p, q), r.size());
        if (fresh) {
            r.add_state(a.accepting[p] && d.accepting[q]);
            work.push({p, q});
        }
        return it->second;
    };
    for (int p : a.initial) r.initial.push_back(get(p, d.initial));
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop();
        int from = ids[{p, q}];
        for (auto [s, t] : a.out[p]) {
            if (s == kEpsilon) {
                r.add(from, kEpsilon, get(t, q));
            } else {
                int q2 = d.next(q, s);
                if (q2 >= 0) r.add(from, s, get(t, q2));
            }
        }
    }
    return r;
}

inline Dfa determinize(const Nfa& a) {
    Dfa d;
    d.alphabet = a.alphabet;
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sets;
    auto get = [&](std::vector<int> set) {
        auto [it, fresh] = ids.emplace(set, d.states);
        if (fresh) {
            bool acc = false;
            for (int q : set) acc = acc || a.accepting[q];
            d.add_state(acc);
            sets.push_back(std::move(set));
        }
        return it->second;
    };
    d.initial = get(a.closure(a.initial));
    for (int k = 0; k < d.states; ++k) {
        std::vector<std::vector<int>> moves(a.alphabet);
        for (int q : sets[k])
            for (auto [s, t] : a.out[q])
                if (s != kEpsilon) moves[s].push_back(t);
        for (int s = 0; s < a.alphabet; ++s) {
            if (moves[s].empty()) continue;
            auto target = a.closure(moves[s]);
            int id = get(std::move(target));
            d.next(k, s) = id;
        }
    }
    return d;
}

// Trim to useful states, refine the partition until stable, then renumber in
// breadth-first order from the initial state so equal languages give equal
// automata.
inline Dfa minimize(const Dfa& a) {
    int n = a.states, k = a.alphabet;
    std::vector<bool> reach(n, false), coreach(n, false);
    std::vector<int> stack{a.initial};
    reach[a.initial] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int s = 0; s < k; ++s) {
            int r = a.next(q, s);
            if (r >= 0 && !reach[r]) {
                reach[r] = true;
                stack.push_back(r);
            }
        }
    }
    std::vector<std::vector<int>> rev(n);
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < k; ++s)
            if (a.next(q, s) >= 0) rev[a.next(q, s)].push_back(q);
    for (int q = 0; q < n; ++q)
        if (a.accepting[q] && reach[q]) {
            coreach[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int p : rev[q])
            if (!coreach[p]) {
                coreach[p] = true;
                stack.push_back(p);
            }
    }
    if (!coreach[a.initial]) return Dfa::empty_language(k);
    auto live = [&](int q) { return q >= 0 && reach[q] && coreach[q]; };

    std::vector<int> cls(n, -1);
    for (int q = 0; q < n; ++q)
        if (live(q)) cls[q] = a.accepting[q] ? 1 : 0;
    int count = 0;
    while (true) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n, -1);
        for (int q = 0; q < n; ++q) {
            if (!live(q)) continue;
            std::vector<int> key{cls[q]};
            for (int s = 0; s < k; ++s) {
                int r = a.next(q, s);
                key.push_back(live(r) ? cls[r] : -1);
            }
            auto [it, fresh] = sig.emplace(std::move(key), static_cast<int>(sig.size()));
            next[q] = it->second;
        }
        int c2 = static_cast<int>(sig.size());
        cls = std::move(next);
        if (c2 == count) break;
        count = c2;
    }

    Dfa r;
    r.alphabet = k;
    std::vector<int> rep(count, -1), newid(count, -1);
    for (int q = 0; q < n; ++q)
        if (live(q) && rep[cls[q]] < 0) rep[cls[q]] = q;
    std::queue<int> work;
    newid[cls[a.initial]] = r.add_state(a.accepting[a.initial]);
    work.push(cls[a.initial]);
    while (!work.empty()) {
        int b = work.front();
        work.pop();
        int q = rep[b];
        for (int s = 0; s < k; ++s) {
            int t = a.next(q, s);
            if (!live(t)) continue;
            int bt = cls[t];
            if (newid[bt] < 0) {
                newid[bt] = r.add_state(a.accepting[t]);
                work.push(bt);
            }
            r.next(newid[b], s) = newid[bt];
        }
    }
    r.initial = 0;
    return r;
}

inline Dfa dfa_union(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) throw InvalidInput("alphabets differ");
    Dfa r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto get = [&](int p, int q) {
        auto [it, fresh] = ids.emplace(std::make_pair(p, q), r.states);
        if (fresh) {
            bool acc = (p >= 0 && a.accepting[p]) || (q >= 0 && b.accepting[q]);
            r.add_state(acc);
            pairs.push_back({p, q});
        }
        return it->second;
    };
    r.initial = get(a.initial, b.initial);
    for (int k = 0; k < r.states; ++k) {
        auto [p, q] = pairs[k];
        for (int s = 0; s < r.alphabet; ++s) {
            int p2 = p >= 0 ? a.next(p, s) : -1;
            int q2 = q >= 0 ? b.next(q, s) : -1;
            if (p2 < 0 && q2 < 0) continue;
            int id = get(p2, q2);
            r.next(k, s) = id;
        }
    }
    return minimize(r);
}

inline std::string to_dot(const Dfa& a, int c) {
    std::ostringstream os;
    os << "digraph dfa {\n  rankdir=LR;\n";
    for (int q = 0; q < a.states; ++q)
        os << "  q" << q << " [shape=" << (a.accepting[q] ? "doublecircle" : "circle") << "];\n";
    os << "  start [shape=point];\n  start -> q" << a.initial << ";\n";
    for (int q = 0; q < a.states; ++q)
        for (int s = 0; s < a.alphabet; ++s)
            if (a.next(q, s) >= 0) {
                Letter l = letter_from_code(s, c);
                os << "  q" << q << " -> q" << a.next(q, s) << " [label=\"" << (l.is_xi() ? 'x' : 't')
                   << l.index << "\"];\n";
            }
    os << "}\n";
    return os.str();
}

// Weight of a letter as s^first t^second.
using LetterWeight = std::pair<int, int>;

inline std::vector<LetterWeight> standard_weights(int c, int d) {
    std::vector<LetterWeight> w(c + d + 1, {1, 0});
    for (int i = 0; i < c; ++i) w[i] = {0, 1};
    return w;
}

namespace detail {

// Solves A x = b for a small polynomial system by fraction-free elimination.
// Returns (X, D) with x = X / D and D = +-det A.
inline std::pair<std::vector<BiPoly>, BiPoly> bareiss_solve(std::vector<std::vector<BiPoly>> M) {
    int k = static_cast<int>(M.size());
    BiPoly prev(1);
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!M[r][col].is_zero() && (piv < 0 || M[r][col].term_count() < M[piv][col].term_count())) piv = r;
        if (piv < 0) throw InternalError("singular transfer system");
        std::swap(M[piv], M[col]);
        for (int i = col + 1; i < k; ++i) {
            for (int j = col + 1; j <= k; ++j) {
                BiPoly v = M[col][col] * M[i][j] - M[i][col] * M[col][j];
                M[i][j] = prev == BiPoly(1) ? std::move(v) : divexact(v, prev);
            }
            M[i][col] = BiPoly();
        }
        prev = M[col][col];
    }
    BiPoly D = M[k - 1][k - 1];
    std::vector<BiPoly> X(k);
    for (int i = k - 1; i >= 0; --i) {
        BiPoly acc = D * M[i][k];
        for (int j = i + 1; j < k; ++j)
            if (!M[i][j].is_zero()) acc -= M[i][j] * X[j];
        X[i] = divexact(acc, M[i][i]);
    }
    return {X, D};
}

struct FactorTable {
    std::vector<BiPoly> polys;
    std::vector<std::vector<BiPoly>> powers;

    FactorTable() { polys.emplace_back(UniPoly::one_minus_t()); }

    const BiPoly& power(int idx, int e) {
        if (powers.size() < polys.size()) powers.resize(polys.size());
        auto& p = powers[idx];
        if (p.empty()) p.emplace_back(1);
        while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * polys[idx]);
        return p[e];
    }
    // Multiplies the tracked denominator by f, reusing known factors.
    void absorb(BiPoly f, std::vector<int>& exps) {
        if (f.constant_term() < 0) f = -f;
        for (size_t i = 0; i < polys.size() && !f.is_constant(); ++i) {
            while (!f.is_constant()) {
                auto q = try_divexact(f, polys[i]);
                if (!q) break;
                f = std::move(*q);
                if (exps.size() <= i) exps.resize(polys.size(), 0);
                ++exps[i];
            }
        }
        if (!f.is_constant()) {
            polys.push_back(f);
            exps.resize(polys.size(), 0);
            ++exps.back();
        }
        exps.resize(polys.size(), 0);
    }
};

// Tarjan's SCC decomposition; components come out sinks first.
inline std::vector<std::vector<int>> strongly_connected(const Dfa& a, const std::vector<bool>& live) {
    int n = a.states;
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on(n, false);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    struct Frame {
        int q, s;
    };
    for (int root = 0; root < n; ++root) {
        if (!live[root] || index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.s < a.alphabet) {
                int r = a.next(f.q, f.s++);
                if (r < 0 || !live[r]) continue;
                if (index[r] < 0) {
                    index[r] = low[r] = counter++;
                    stack.push_back(r);
                    on[r] = true;
                    call.push_back({r, 0});
                } else if (on[r]) {
                    low[f.q] = std::min(low[f.q], index[r]);
                }
                continue;
            }
            int q = f.q;
            call.pop_back();
            if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
            if (low[q] == index[q]) {
                std::vector<int> comp;
                int x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on[x] = false;
                    comp.push_back(x);
                } while (x != q);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

}  // namespace detail

// u^T (I - sum_a rho(a) M_a)^{-1} e_1, i.e. the weighted count of accepted
// words. The system x_p = [p accepting] + sum_a rho(a) x_{delta(p,a)} is
// block triangular along strongly connected components; each block is solved
// by fraction-free elimination and the block determinants become the tracked
// denominator factors.
inline FactoredRational generating_function(const Dfa& a, const std::vector<LetterWeight>& weight) {
    if (static_cast<int>(weight.size()) != a.alphabet) throw InvalidInput("one weight per letter required");
    Dfa m = minimize(a);
    int n = m.states;
    std::vector<bool> live(n, true);
    bool any = false;
    for (int q = 0; q < n; ++q) any = any || m.accepting[q];
    if (!any) return FactoredRational();

    auto comps = detail::strongly_connected(m, live);
    std::vector<int> comp_of(n, -1), local(n, -1);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int k = 0; k < static_cast<int>(comps[ci].size()); ++k) {
            comp_of[comps[ci][k]] = ci;
            local[comps[ci][k]] = k;
        }
    detail::FactorTable table;
    std::vector<BiPoly> num(n);
    std::vector<std::vector<int>> den(n);
    auto w = [&](int s) { return BiPoly::term(1, weight[s].first, weight[s].second); };

    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        const auto& C = comps[ci];
        int k = static_cast<int>(C.size());
        std::vector<int> D(table.polys.size(), 0);
        for (int q : C)
            for (int s = 0; s < m.alphabet; ++s) {
                int r = m.next(q, s);
                if (r < 0 || comp_of[r] == ci) continue;
                if (D.size() < den[r].size()) D.resize(den[r].size(), 0);
                for (size_t i = 0; i < den[r].size(); ++i) D[i] = std::max(D[i], den[r][i]);
            }
        auto common = [&]() {
            BiPoly p(1);
            for (size_t i = 0; i < D.size(); ++i)
                if (D[i]) p *= table.power(static_cast<int>(i), D[i]);
            return p;
        };
        std::vector<std::vector<BiPoly>> M(k, std::vector<BiPoly>(k + 1));
        for (int x = 0; x < k; ++x) {
            int q = C[x];
            M[x][x] = BiPoly(1);
            BiPoly rhs = m.accepting[q] ? common() : BiPoly();
            for (int s = 0; s < m.alphabet; ++s) {
                int r = m.next(q, s);
                if (r < 0) continue;
                if (comp_of[r] == ci) {
                    M[x][local[r]] -= w(s);
                } else {
                    BiPoly term = w(s) * num[r];
                    for (size_t i = 0; i < D.size(); ++i) {
                        int have = i < den[r].size() ? den[r][i] : 0;
                        if (D[i] > have) term *= table.power(static_cast<int>(i), D[i] - have);
                    }
                    rhs += term;
                }
            }
            M[x][k] = std::move(rhs);
        }
        bool trivial = k == 1 && M[0][0] == BiPoly(1);
        if (trivial) {
            num[C[0]] = M[0][1];
            den[C[0]] = D;
            continue;
        }
        auto [X, det] = detail::bareiss_solve(std::move(M));
        if (det.constant_term() < 0) {
            det = -det;
            for (auto& x : X) x = -x;
        }
        std::vector<int> E = D;
        table.absorb(det, E);
        for (int x = 0; x < k; ++x) {
            num[C[x]] = std::move(X[x]);
            den[C[x]] = E;
        }
    }
    std::vector<DenominatorFactor> factors;
    const auto& e0 = den[m.initial];
    for (size_t i = 0; i < e0.size(); ++i)
        if (e0[i]) factors.push_back({table.polys[i], e0[i]});
    return FactoredRational(num[m.initial], std::move(factors));
}

}  // namespace oih
