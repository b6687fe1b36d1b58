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

#include "hdsim/automaton.hpp"
#include "hdsim/zielonka.hpp"

namespace hdsim {

struct ContainmentReport {
    bool contained = false;
    int game_vertices = 0;        // parity game after the Zielonka product
    int distinct_priorities = 0;
    TreeShape shape;              // Zielonka tree of the implication condition
    long long vertex_bound = 0;   // n1 * d1 * n2 * |alphabet| * leaves, d1 at least 1
    long long layout_bound = 0;   // n(a') * n(b) * (2 |alphabet| + 1) * leaves, both completed
    int priority_bound = 0;       // d2 + 1
};

/**
 * L(a) within L(b), decided as "b simulates the Buchi version of a". Only sound
 * when b is history-deterministic; the caller vouches for that through
 * `assume_hd`, and false throws ValidationError.
 */
ContainmentReport check_containment(const ParityAutomaton& a, const ParityAutomaton& b, bool assume_hd);

} // namespace hdsim
