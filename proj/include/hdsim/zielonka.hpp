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

#include <vector>

#include "hdsim/automaton.hpp"
#include "hdsim/game.hpp"
#include "hdsim/muller.hpp"

namespace hdsim {

/**
 * Zielonka tree of a Muller condition.
 *
 * Node 0 is the root, labelled with every colour. The children of a node X
 * are the distinct maximal nonempty X' strictly inside X whose membership in
 * F differs from that of X, sorted by ascending bitmask.
 */
struct ZielonkaTree {
    struct Node {
        ColorSet label;
        bool in_family = false;
        int parent = -1;
        int depth = 0;
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    std::vector<int> leaves; // left-to-right
    int height = 0;

    const Node& root() const { return nodes.front(); }
};

struct TreeShape {
    int leaves = 0;
    int height = 0;

    bool operator==(const TreeShape&) const = default;
};

ZielonkaTree build_zielonka(const MullerCondition& c);

/// Leaf count and height (a single node has height 0).
TreeShape zielonka_shape(const ZielonkaTree& t);

/**
 * Deterministic complete parity automaton over the colours of `c` whose
 * states are the leaves of `t`.
 *
 * Reading colour x in leaf l: let m be the deepest node on the path to l whose
 * label holds x. The transition carries priority c0 - depth(m); it stays in l
 * when m is l, and otherwise moves to the leftmost leaf below the sibling that
 * follows (cyclically) the child of m leading to l.
 */
ParityAutomaton tree_to_dpa(const ZielonkaTree& t, const MullerCondition& c);

/// Alphabet token used by tree_to_dpa for a colour tuple, e.g. "2_1".
std::string color_token(const MullerCondition::Color& color);

struct MullerReduction {
    ParityGame game;
    TreeShape shape;
    int dpa_states = 0;
    int distinct_priorities = 0;
};

/// Product of the arena with the Zielonka automaton, restricted to reachable pairs.
MullerReduction reduce_muller_game(const MullerGame& g);

ParityGame muller_game_to_parity(const MullerGame& g);

} // namespace hdsim
