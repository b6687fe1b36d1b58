/*
 * Copyright 2026 The hdsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hdsim/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hdsim/errors.hpp"
#include "hdsim/zielonka.hpp"

namespace hdsim {

namespace {

// Reachable-only product: positions are discovered on demand and expanded in order.
template <size_t N>
class Positions {
  public:
    using Key = std::array<int, N>;

    explicit Positions(GameArena& arena) : arena_(arena) { arena_.vertex_count = 0; }

    Vertex get(const Key& key, Player owner)
    {
        auto [it, fresh] = ids_.emplace(key, arena_.vertex_count);
        if (fresh) {
            arena_.add_vertex(owner);
            keys_.push_back(key);
        }
        return it->second;
    }

    size_t size() const { return keys_.size(); }
    Key key(Vertex v) const { return keys_[v]; }

  private:
    GameArena& arena_;
    std::map<Key, Vertex> ids_;
    std::vector<Key> keys_;
};

// Copy of `b` with its symbols renumbered to follow `alphabet`.
ParityAutomaton align(const ParityAutomaton& b, const std::vector<std::string>& alphabet)
{
    if (b.alphabet == alphabet) return b;
    ParityAutomaton out = b;
    out.alphabet = alphabet;
    for (auto& t : out.transitions) {
        auto it = std::find(alphabet.begin(), alphabet.end(), b.alphabet[t.symbol]);
        t.symbol = static_cast<Symbol>(it - alphabet.begin());
    }
    return canonical(std::move(out));
}

std::string describe(const ParityAutomaton& a, const UpWord& w)
{
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < w.prefix.size(); ++i) out << (i ? "," : "") << a.alphabet[w.prefix[i]];
    out << ")(";
    for (size_t i = 0; i < w.period.size(); ++i) out << (i ? "," : "") << a.alphabet[w.period[i]];
    out << ")^w";
    return out.str();
}

} // namespace

void require_same_alphabet(const ParityAutomaton& a, const ParityAutomaton& b)
{
    std::set<std::string> x(a.alphabet.begin(), a.alphabet.end()), y(b.alphabet.begin(), b.alphabet.end());
    if (x != y) throw ValidationError("alphabet mismatch between '" + a.name + "' and '" + b.name + "'");
}

TwoDimGame build_sim_game(const ParityAutomaton& a_in, const ParityAutomaton& b_in)
{
    validate(a_in);
    validate(b_in);
    require_same_alphabet(a_in, b_in);
    const ParityAutomaton a = complete(a_in);
    const ParityAutomaton b = complete(align(b_in, a_in.alphabet));
    const TransitionTable ta(a), tb(b);
    const int symbols = static_cast<int>(a.alphabet.size());

    // key = {phase, p, q, letter, c1}; phase 0 is Adam's (p, q), phase 1 Eve's (p', q, letter, c1)
    TwoDimGame g;
    g.name = "sim_" + a.name + "_" + b.name;
    Positions<5> pos(g.arena);
    g.arena.initial = pos.get({0, b.initial, a.initial, 0, 0}, Player::Adam);
    for (Vertex v = 0; v < g.arena.vertex_count; ++v) {
        auto [phase, p, q, s, c1] = pos.key(v);
        auto edge = [&](Vertex w, PriorityPair pr) {
            g.arena.edges.push_back({v, w});
            g.priority.push_back(pr);
        };
        if (phase == 0) {
            for (Symbol x = 0; x < symbols; ++x)
                for (const auto& tr : tb.out(p, x)) edge(pos.get({1, tr.dst, q, x, tr.priority}, Player::Eve), {0, 0});
        } else {
            for (const auto& tr : ta.out(q, s)) edge(pos.get({0, p, tr.dst, 0, 0}, Player::Adam), {c1, tr.priority});
        }
    }
    for (const auto& p : g.priority) {
        g.max_p1 = std::max(g.max_p1, p.p1);
        g.max_p2 = std::max(g.max_p2, p.p2);
    }
    return g;
}

bool check_simulation(const ParityAutomaton& a, const ParityAutomaton& b, TwoDimMethod method,
                      const EnumLimits& limits)
{
    const TwoDimGame g = build_sim_game(a, b);
    const Player w = method == TwoDimMethod::Enum ? solve_2d_enum(g, limits).winner : solve_2d_muller(g);
    return w == Player::Eve;
}

bool check_hd_with_det(const ParityAutomaton& h, const ParityAutomaton& det, const HdOptions& options)
{
    validate(h);
    validate(det);
    if (!is_deterministic(det)) throw ValidationError("det is nondeterministic");
    require_same_alphabet(h, det);

    if (options.sample > 0) {
        const ParityAutomaton d = align(det, h.alphabet);
        std::mt19937_64 rng(options.seed);
        const int symbols = static_cast<int>(h.alphabet.size());
        std::uniform_int_distribution<int> sym(0, symbols - 1), len(0, 3), plen(1, 3);
        for (int i = 0; i < options.sample && symbols > 0; ++i) {
            UpWord w;
            for (int k = len(rng); k > 0; --k) w.prefix.push_back(sym(rng));
            for (int k = plen(rng); k > 0; --k) w.period.push_back(sym(rng));
            if (member_up(h, w) != member_up(d, w))
                throw ValidationError("language mismatch witnessed by uv^w = " + describe(h, w));
        }
    }
    return check_simulation(h, det, options.method, options.limits);
}

TwoDimGame build_token_game_1(const ParityAutomaton& a_in)
{
    validate(a_in);
    const ParityAutomaton a = complete(a_in);
    const TransitionTable t(a);
    const int symbols = static_cast<int>(a.alphabet.size());

    // phase 0: Adam picks a letter; 1: Eve moves her token; 2: Adam moves his token.
    // key = {phase, eve, adam, letter, eve priority}
    TwoDimGame g;
    g.name = "token1_" + a.name;
    Positions<5> pos(g.arena);
    g.arena.initial = pos.get({0, a.initial, a.initial, 0, 0}, Player::Adam);
    for (Vertex v = 0; v < g.arena.vertex_count; ++v) {
        auto [phase, q, p, s, ce] = pos.key(v);
        auto edge = [&](Vertex w, PriorityPair pr) {
            g.arena.edges.push_back({v, w});
            g.priority.push_back(pr);
        };
        if (phase == 0) {
            for (Symbol x = 0; x < symbols; ++x) edge(pos.get({1, q, p, x, 0}, Player::Eve), {0, 0});
        } else if (phase == 1) {
            for (const auto& tr : t.out(q, s)) edge(pos.get({2, tr.dst, p, s, tr.priority}, Player::Adam), {0, 0});
        } else {
            for (const auto& tr : t.out(p, s)) edge(pos.get({0, q, tr.dst, 0, 0}, Player::Adam), {tr.priority, ce});
        }
    }
    for (const auto& p : g.priority) {
        g.max_p1 = std::max(g.max_p1, p.p1);
        g.max_p2 = std::max(g.max_p2, p.p2);
    }
    return g;
}

MullerGame build_token_game_2(const ParityAutomaton& a_in)
{
    validate(a_in);
    const ParityAutomaton a = complete(a_in);
    const TransitionTable t(a);
    const int symbols = static_cast<int>(a.alphabet.size());

    // key = {phase, eve, adam1, adam2, letter, eve priority}
    GameArena arena;
    Positions<6> pos(arena);
    std::vector<std::array<int, 3>> edge_color;
    arena.initial = pos.get({0, a.initial, a.initial, a.initial, 0, 0}, Player::Adam);
    for (Vertex v = 0; v < arena.vertex_count; ++v) {
        auto [phase, q, p1, p2, s, ce] = pos.key(v);
        auto edge = [&](Vertex w, std::array<int, 3> c) {
            arena.edges.push_back({v, w});
            edge_color.push_back(c);
        };
        if (phase == 0) {
            for (Symbol x = 0; x < symbols; ++x) edge(pos.get({1, q, p1, p2, x, 0}, Player::Eve), {0, 0, 0});
        } else if (phase == 1) {
            for (const auto& tr : t.out(q, s))
                edge(pos.get({2, tr.dst, p1, p2, s, tr.priority}, Player::Adam), {0, 0, 0});
        } else {
            for (const auto& t1 : t.out(p1, s))
                for (const auto& t2 : t.out(p2, s))
                    edge(pos.get({0, q, t1.dst, t2.dst, 0, 0}, Player::Adam), {ce, t1.priority, t2.priority});
        }
    }

    std::map<std::array<int, 3>, int> index;
    for (const auto& c : edge_color) index.emplace(c, 0);
    std::vector<std::array<int, 3>> colors;
    for (auto& [c, id] : index) {
        id = static_cast<int>(colors.size());
        colors.push_back(c);
    }
    std::vector<int> color;
    color.reserve(edge_color.size());
    for (const auto& c : edge_color) color.push_back(index.at(c));
    return MullerGame{std::move(arena), std::move(color), token2_condition(colors)};
}

TokenGame build_token_game(const ParityAutomaton& a, int k)
{
    if (k == 1) return build_token_game_1(a);
    if (k == 2) return build_token_game_2(a);
    throw ValidationError("token games are built for k = 1 or k = 2 only");
}

Player solve_token(const ParityAutomaton& a, int k, TwoDimMethod method, const EnumLimits& limits)
{
    if (k == 1) {
        const TwoDimGame g = build_token_game_1(a);
        return method == TwoDimMethod::Enum ? solve_2d_enum(g, limits).winner : solve_2d_muller(g);
    }
    if (k == 2) return solve_parity_recursive(muller_game_to_parity(build_token_game_2(a))).winner;
    throw ValidationError("token games are built for k = 1 or k = 2 only");
}

} // namespace hdsim
