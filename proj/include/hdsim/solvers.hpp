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

#pragma once

#include <optional>
#include <vector>

#include "hdsim/game.hpp"
#include "hdsim/strategy_enum.hpp"

namespace hdsim {

struct ParitySolution {
    Player winner = Player::Eve;       // owner of the initial vertex's region
    std::vector<Player> region;        // winner per vertex
    PositionalStrategy eve;            // defined on Eve vertices of Eve's region
    PositionalStrategy adam;           // defined on Adam vertices of Adam's region
};

/// Recursive attractor-based (Zielonka) solver over edge priorities.
ParitySolution solve_parity_recursive(const ParityGame& g);

/**
 * Oracle: Eve wins iff some positional Eve strategy leaves no reachable cycle
 * with odd maximum. Throws ResourceError when the strategy count exceeds the limit.
 */
Player solve_parity_brute(const ParityGame& g, const EnumLimits& limits = {});

/**
 * Checks that `s` wins for `who` from every vertex of `region`: the region is
 * closed under the strategy and the opponent's moves, and no cycle inside it
 * has a maximum of the opponent's parity.
 */
bool verify_parity_strategy(const ParityGame& g, Player who, const PositionalStrategy& s,
                            const std::vector<char>& region);

/// No cycle reachable under `s` with even max first priority and odd max second priority.
bool verify_eve_strategy(const TwoDimGame& g, const PositionalStrategy& s);

struct TwoDimResult {
    Player winner = Player::Eve;
    std::optional<PositionalStrategy> witness;
};

/// Enumerates positional Eve strategies; the witness is the first winning one.
TwoDimResult solve_2d_enum(const TwoDimGame& g, const EnumLimits& limits = {});

/// Muller view of the 2-D condition, reduced to a parity game via its Zielonka tree.
Player solve_2d_muller(const TwoDimGame& g);

/// The 2-D game as a Muller game over the (p1, p2) pairs that occur on edges.
MullerGame as_muller_game(const TwoDimGame& g);

/// No play satisfies the second priority function while violating the first.
bool check_good(const TwoDimGame& g);

} // namespace hdsim
