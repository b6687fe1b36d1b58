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

#include <map>

#include "hdsim/errors.hpp"
#include "hdsim/solvers.hpp"
#include "hdsim/zielonka.hpp"

namespace hdsim {

TwoDimResult solve_2d_enum(const TwoDimGame& g, const EnumLimits& limits)
{
    validate_game(g);
    StrategySpace space(g.arena, Player::Eve);
    if (space.size() > limits.max_strategies) throw ResourceError("instance too large for strategy enumeration");

    auto found = first_strategy(space, [&](const PositionalStrategy& s) { return verify_eve_strategy(g, s); },
                                limits.exec);
    if (!found) return {Player::Adam, std::nullopt};
    return {Player::Eve, space.decode(*found)};
}

MullerGame as_muller_game(const TwoDimGame& g)
{
    std::map<PriorityPair, int> index;
    for (const auto& p : g.priority) index.emplace(p, 0);
    std::vector<std::pair<int, int>> colors;
    for (auto& [pair, id] : index) {
        id = static_cast<int>(colors.size());
        colors.emplace_back(pair.p1, pair.p2);
    }
    std::vector<int> color;
    color.reserve(g.priority.size());
    for (const auto& p : g.priority) color.push_back(index.at(p));
    return MullerGame{g.arena, std::move(color), implication_condition(colors)};
}

Player solve_2d_muller(const TwoDimGame& g)
{
    validate_game(g);
    return solve_parity_recursive(muller_game_to_parity(as_muller_game(g))).winner;
}

} // namespace hdsim
