#pragma once

// Random instance generators and small oracles shared by the tests, the
// acceptance runner and the benchmark.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hdsim/automaton.hpp"
#include "hdsim/game.hpp"
#include "hdsim/generators.hpp"
#include "hdsim/muller.hpp"

namespace hdsim::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<std::string> letters(int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

/// Random automaton; `deterministic` keeps at most one transition per (state, letter).
inline ParityAutomaton random_automaton(Rng& rng, int max_states, int symbols, int max_priority,
                                        bool deterministic = false)
{
    ParityAutomaton a;
    a.alphabet = letters(symbols);
    a.state_count = uniform(rng, 1, max_states);
    a.initial = 0;
    for (State q = 0; q < a.state_count; ++q)
        for (Symbol s = 0; s < symbols; ++s) {
            int count = deterministic ? uniform(rng, 0, 5) > 0 : uniform(rng, 0, 2);
            for (int i = 0; i < count; ++i) {
                Transition t{q, s, uniform(rng, 0, a.state_count - 1), uniform(rng, 0, max_priority)};
                if (std::find(a.transitions.begin(), a.transitions.end(), t) == a.transitions.end())
                    a.transitions.push_back(t);
            }
        }
    for (const auto& t : a.transitions) a.max_priority = std::max(a.max_priority, t.priority);
    return canonical(std::move(a));
}

inline GameArena random_arena(Rng& rng, int max_vertices, int max_degree)
{
    GameArena arena;
    arena.vertex_count = 0;
    const int n = uniform(rng, 1, max_vertices);
    for (int v = 0; v < n; ++v) arena.add_vertex(uniform(rng, 0, 1) ? Player::Adam : Player::Eve);
    arena.initial = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int degree = uniform(rng, 1, max_degree);
        for (int i = 0; i < degree; ++i) arena.edges.push_back({v, uniform(rng, 0, n - 1)});
    }
    return arena;
}

inline ParityGame random_parity_game(Rng& rng, int max_vertices, int max_priority, int max_degree = 3)
{
    ParityGame g;
    g.arena = random_arena(rng, max_vertices, max_degree);
    for (size_t e = 0; e < g.arena.edges.size(); ++e) g.priority.push_back(uniform(rng, 0, max_priority));
    g.max_priority = *std::max_element(g.priority.begin(), g.priority.end());
    return g;
}

inline TwoDimGame random_2d_game(Rng& rng, int max_vertices, int d1, int d2, int max_degree = 3)
{
    TwoDimGame g;
    g.arena = random_arena(rng, max_vertices, max_degree);
    for (size_t e = 0; e < g.arena.edges.size(); ++e) {
        g.priority.push_back({uniform(rng, 0, d1), uniform(rng, 0, d2)});
        g.max_p1 = std::max(g.max_p1, g.priority.back().p1);
        g.max_p2 = std::max(g.max_p2, g.priority.back().p2);
    }
    return g;
}

inline DnfFormula random_dnf(Rng& rng, int max_vars, int max_terms, int max_term_size)
{
    DnfFormula f;
    f.var_count = uniform(rng, 1, max_vars);
    const int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) {
        std::vector<int> pool;
        for (int j = 1; j <= f.var_count; ++j) pool.insert(pool.end(), {j, -j});
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(uniform(rng, 1, std::min<int>(max_term_size, static_cast<int>(pool.size()))));
        f.terms.push_back(pool);
    }
    return canonical(std::move(f));
}

/// Every formula with exactly `vars` variables and `terms` terms (terms are nonempty literal sets).
inline std::vector<DnfFormula> all_dnfs(int vars, int terms)
{
    std::vector<std::vector<int>> sets;
    const int lits = 2 * vars;
    for (int mask = 1; mask < (1 << lits); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < lits; ++i)
            if (mask >> i & 1) t.push_back(i < vars ? i + 1 : -(i - vars + 1));
        sets.push_back(t);
    }
    std::vector<DnfFormula> out;
    std::vector<size_t> pick(terms, 0);
    while (true) {
        DnfFormula f;
        f.var_count = vars;
        for (size_t p : pick) f.terms.push_back(sets[p]);
        out.push_back(canonical(std::move(f)));
        int k = terms - 1;
        while (k >= 0 && ++pick[k] == sets.size()) pick[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

/// All words over `symbols` letters with length in [lo, hi].
inline std::vector<std::vector<Symbol>> all_words(int symbols, int lo, int hi)
{
    std::vector<std::vector<Symbol>> out;
    std::vector<std::vector<Symbol>> layer{{}};
    for (int len = 0; len <= hi; ++len) {
        if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
        std::vector<std::vector<Symbol>> next;
        for (const auto& w : layer)
            for (Symbol s = 0; s < symbols; ++s) {
                next.push_back(w);
                next.back().push_back(s);
            }
        layer = std::move(next);
    }
    return out;
}

/// Every UP word u v^omega with |u| <= max_u and 1 <= |v| <= max_v.
inline std::vector<UpWord> all_up_words(int symbols, int max_u, int max_v)
{
    std::vector<UpWord> out;
    for (const auto& u : all_words(symbols, 0, max_u))
        for (const auto& v : all_words(symbols, 1, max_v)) out.push_back({u, v});
    return out;
}

inline UpWord random_up_word(Rng& rng, int symbols, int max_u, int max_v)
{
    UpWord w;
    for (int i = uniform(rng, 0, max_u); i > 0; --i) w.prefix.push_back(uniform(rng, 0, symbols - 1));
    for (int i = uniform(rng, 1, max_v); i > 0; --i) w.period.push_back(uniform(rng, 0, symbols - 1));
    return w;
}

/// Colours seen infinitely often on u v^omega: exactly those of v.
inline ColorSet inf_set(const MullerCondition& c, const UpWord& w)
{
    ColorSet s(c.size());
    for (Symbol x : w.period) s.set(x);
    return s;
}

/// Random permutation of 0..n-1.
inline std::vector<int> random_permutation(Rng& rng, int n)
{
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Same automaton with states renamed by `perm`.
inline ParityAutomaton permute_states(const ParityAutomaton& a, const std::vector<int>& perm)
{
    ParityAutomaton out = a;
    out.initial = perm[a.initial];
    for (auto& t : out.transitions) {
        t.src = perm[t.src];
        t.dst = perm[t.dst];
    }
    return canonical(std::move(out));
}

/// Text of the one-state automaton with (0,a,0,2) and (0,b,0,1).
inline const char* kA1 = "pa A1\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 2\ntrans 0 b 0 1\nend\n";

} // namespace hdsim::testing
