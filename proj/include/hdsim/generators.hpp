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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdsim/automaton.hpp"
#include "hdsim/game.hpp"

namespace hdsim {

/// Formula over x_1..x_M; a literal is +j for x_j and -j for its negation.
struct DnfFormula {
    int var_count = 1;
    std::vector<std::vector<int>> terms;

    bool operator==(const DnfFormula&) const = default;
};

void validate_dnf(const DnfFormula& f);

/// Literals inside each term sorted by variable, positive first. Term order is kept.
DnfFormula canonical(DnfFormula f);

DnfFormula parse_dnf(std::string_view text);
std::string format_dnf(const DnfFormula& f);

/// Some assignment puts a true literal in every term (terms read as clauses). M <= 24.
bool brute_sat(const DnfFormula& f);

/**
 * Good 2-D game for `f`. Literal x_j is vertex j-1, literal -x_j is M+j-1, term
 * i is 2M+i. Literals are Adam's and reach every term with (0,0); a term is
 * Eve's and reaches each of its literals. The initial vertex is x_1.
 */
TwoDimGame dnf_to_game(const DnfFormula& f);

struct AutomataPair {
    ParityAutomaton d;
    ParityAutomaton h;
};

/**
 * Deterministic D and nondeterministic H over the edges of `g` plus "$" such
 * that H simulates D iff Eve wins g. D's states keep their indices inside H.
 */
AutomataPair game_to_automata(const TwoDimGame& g);

} // namespace hdsim
