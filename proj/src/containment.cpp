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

#include "hdsim/containment.hpp"

#include <algorithm>

#include "hdsim/constructions.hpp"
#include "hdsim/errors.hpp"
#include "hdsim/solvers.hpp"

namespace hdsim {

ContainmentReport check_containment(const ParityAutomaton& a, const ParityAutomaton& b, bool assume_hd)
{
    if (!assume_hd) throw ValidationError("containment needs --assume-hd: b must be history-deterministic");
    validate(a);
    validate(b);
    require_same_alphabet(a, b);

    const ParityAutomaton buchi = parity_to_buchi(a);
    const TwoDimGame sim = build_sim_game(b, buchi);
    const MullerReduction red = reduce_muller_game(as_muller_game(sim));

    // d2 is measured on the completed b, whose sink may add priority 1.
    const ParityAutomaton bc = complete(b);
    ContainmentReport r;
    r.contained = solve_parity_recursive(red.game).winner == Player::Eve;
    r.game_vertices = red.game.arena.vertex_count;
    r.distinct_priorities = red.distinct_priorities;
    r.shape = red.shape;
    r.vertex_bound = static_cast<long long>(a.state_count) * std::max(1, parity_index(a)) * bc.state_count *
                     static_cast<long long>(a.alphabet.size()) * red.shape.leaves;
    // one Adam position per state pair plus Eve positions (p', q, letter, c1) with c1 in {1, 2}
    r.layout_bound = static_cast<long long>(complete(buchi).state_count) * bc.state_count *
                     (2 * static_cast<long long>(a.alphabet.size()) + 1) * red.shape.leaves;
    r.priority_bound = bc.max_priority + 1;
    return r;
}

} // namespace hdsim
