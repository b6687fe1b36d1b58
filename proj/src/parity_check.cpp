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

#include <algorithm>

#include "cycles.hpp"
#include "hdsim/errors.hpp"
#include "hdsim/solvers.hpp"

namespace hdsim {

namespace {

// Edges that survive once `who` is fixed to `s` on its own vertices.
std::vector<char> restrict_to(const GameArena& arena, Player who, const PositionalStrategy& s)
{
    std::vector<char> active(arena.edges.size(), 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(arena.edges.size()); ++e) {
        Vertex v = arena.edges[e].src;
        if (arena.owner[v] == who && s.choice[v] != e) active[e] = 0;
    }
    return active;
}

// Keeps only edges whose source is reachable from `from` through active edges.
void keep_reachable(const GameArena& arena, std::vector<char>& active, std::span<const Vertex> from)
{
    auto seen = detail::reach(arena.vertex_count, arena.edges, active, from);
    for (size_t e = 0; e < active.size(); ++e)
        if (!seen[arena.edges[e].src]) active[e] = 0;
}

// Some active cycle has a maximum priority of parity `loser`.
bool parity_cycle(const ParityGame& g, const std::vector<char>& active, Player loser)
{
    const int first = loser == Player::Eve ? 0 : 1;
    for (int p = first; p <= g.max_priority; p += 2)
        if (detail::cycle_with_maxima(g.arena.vertex_count, g.arena.edges, active, g.priority, p, g.priority, p))
            return true;
    return false;
}

} // namespace

Player solve_parity_brute(const ParityGame& g, const EnumLimits& limits)
{
    validate_game(g);
    StrategySpace space(g.arena, Player::Eve);
    if (space.size() > limits.max_strategies) throw ResourceError("instance too large for brute oracle");

    const Vertex start[] = {g.arena.initial};
    auto wins = [&](const PositionalStrategy& s) {
        auto active = restrict_to(g.arena, Player::Eve, s);
        keep_reachable(g.arena, active, start);
        return !parity_cycle(g, active, Player::Adam);
    };
    return first_strategy(space, wins, limits.exec) ? Player::Eve : Player::Adam;
}

bool verify_parity_strategy(const ParityGame& g, Player who, const PositionalStrategy& s,
                            const std::vector<char>& region)
{
    const auto& arena = g.arena;
    std::vector<char> active(arena.edges.size(), 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(arena.edges.size()); ++e) {
        const auto [src, dst] = arena.edges[e];
        if (!region[src]) continue;
        if (arena.owner[src] == who) {
            if (s.choice[src] < 0) return false;
            if (s.choice[src] != e) continue;
        }
        if (!region[dst]) return false;
        active[e] = 1;
    }
    for (Vertex v = 0; v < arena.vertex_count; ++v)
        if (region[v] && arena.owner[v] == who &&
            (s.choice[v] < 0 || arena.edges[s.choice[v]].src != v))
            return false;
    return !parity_cycle(g, active, opponent(who));
}

bool verify_eve_strategy(const TwoDimGame& g, const PositionalStrategy& s)
{
    validate_strategy(g.arena, Player::Eve, s);
    auto active = restrict_to(g.arena, Player::Eve, s);
    const Vertex start[] = {g.arena.initial};
    keep_reachable(g.arena, active, start);

    std::vector<int> first(g.priority.size()), second(g.priority.size());
    for (size_t e = 0; e < g.priority.size(); ++e) {
        first[e] = g.priority[e].p1;
        second[e] = g.priority[e].p2;
    }
    for (int p1 = 0; p1 <= g.max_p1; p1 += 2)
        for (int p2 = 1; p2 <= g.max_p2; p2 += 2)
            if (detail::cycle_with_maxima(g.arena.vertex_count, g.arena.edges, active, first, p1, second, p2))
                return false;
    return true;
}

bool check_good(const TwoDimGame& g)
{
    validate_game(g);
    std::vector<char> active(g.arena.edges.size(), 1);
    const Vertex start[] = {g.arena.initial};
    keep_reachable(g.arena, active, start);

    std::vector<int> first(g.priority.size()), second(g.priority.size());
    for (size_t e = 0; e < g.priority.size(); ++e) {
        first[e] = g.priority[e].p1;
        second[e] = g.priority[e].p2;
    }
    for (int p2 = 0; p2 <= g.max_p2; p2 += 2)
        for (int p1 = 1; p1 <= g.max_p1; p1 += 2)
            if (detail::cycle_with_maxima(g.arena.vertex_count, g.arena.edges, active, second, p2, first, p1))
                return false;
    return true;
}

} // namespace hdsim
