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

#include <cstdint>
#include <variant>

#include "hdsim/automaton.hpp"
#include "hdsim/game.hpp"
#include "hdsim/solvers.hpp"

namespace hdsim {

enum class TwoDimMethod { Enum, Muller };

/**
 * Simulation game "does `a` simulate `b`" as a 2-D parity game.
 *
 * Adam vertices (p, q) pair a state of b with a state of a. An Adam edge picks
 * a letter and a b-transition and leads to an Eve vertex remembering
 * (p', q, letter, c1); it carries (0, 0). Eve answers with an a-transition of
 * priority c2 on the same letter, an edge labelled (c1, c2). Both automata are
 * completed first and only reachable positions are built.
 */
TwoDimGame build_sim_game(const ParityAutomaton& a, const ParityAutomaton& b);

/// True iff `a` simulates `b`.
bool check_simulation(const ParityAutomaton& a, const ParityAutomaton& b, TwoDimMethod method,
                      const EnumLimits& limits = {});

struct HdOptions {
    int sample = 0;            // random UP words compared between h and det
    std::uint64_t seed = 1;
    TwoDimMethod method = TwoDimMethod::Muller;
    EnumLimits limits{};
};

/**
 * History-determinism of `h` given a deterministic automaton `det` with the
 * same language: decided as "h simulates det". Throws ValidationError when det
 * is nondeterministic or when sampling finds a word the two disagree on.
 */
bool check_hd_with_det(const ParityAutomaton& h, const ParityAutomaton& det, const HdOptions& options = {});

/// 1-token game as a 2-D game: Adam's run priority first, Eve's second.
TwoDimGame build_token_game_1(const ParityAutomaton& a);

/// 2-token game as a Muller game over (eve, adam1, adam2) priority triples.
MullerGame build_token_game_2(const ParityAutomaton& a);

using TokenGame = std::variant<TwoDimGame, MullerGame>;

TokenGame build_token_game(const ParityAutomaton& a, int k);

/// k = 1 goes through `method`; k = 2 always through the Zielonka reduction.
Player solve_token(const ParityAutomaton& a, int k, TwoDimMethod method = TwoDimMethod::Muller,
                   const EnumLimits& limits = {});

/// Throws ValidationError unless both automata use the same alphabet tokens.
void require_same_alphabet(const ParityAutomaton& a, const ParityAutomaton& b);

} // namespace hdsim
