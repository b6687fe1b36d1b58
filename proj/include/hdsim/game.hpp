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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hdsim/muller.hpp"

namespace hdsim {

using Vertex = int;
using EdgeId = int;

enum class Player : std::uint8_t { Eve = 0, Adam = 1 };

constexpr Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }
constexpr const char* to_string(Player p) { return p == Player::Eve ? "Eve" : "Adam"; }

/// Player who wins a play whose maximal infinitely-often priority is p.
constexpr Player parity_winner(int p) { return p % 2 == 0 ? Player::Eve : Player::Adam; }

struct ArenaEdge {
    Vertex src = 0;
    Vertex dst = 0;

    bool operator==(const ArenaEdge&) const = default;
};

/// Directed graph with owned vertices; edge payloads live in the game types.
struct GameArena {
    int vertex_count = 1;
    std::vector<Player> owner;
    Vertex initial = 0;
    std::vector<ArenaEdge> edges;

    bool operator==(const GameArena&) const = default;

    Vertex add_vertex(Player who)
    {
        owner.push_back(who);
        return vertex_count++;
    }
};

/// Outgoing edge ids per vertex, in edge order.
std::vector<std::vector<EdgeId>> out_edges(const GameArena& arena);

struct ParityGame {
    std::string name = "G";
    GameArena arena;
    std::vector<int> priority;
    int max_priority = 0;

    bool operator==(const ParityGame&) const = default;
};

struct PriorityPair {
    int p1 = 0;
    int p2 = 0;

    bool operator==(const PriorityPair&) const = default;
    auto operator<=>(const PriorityPair&) const = default;
};

/// Eve wins a play iff (it satisfies p1) implies (it satisfies p2).
struct TwoDimGame {
    std::string name = "G";
    GameArena arena;
    std::vector<PriorityPair> priority;
    int max_p1 = 0;
    int max_p2 = 0;

    bool operator==(const TwoDimGame&) const = default;
};

struct MullerGame {
    GameArena arena;
    std::vector<int> color;
    MullerCondition condition;
};

/// Chosen edge per vertex; -1 for vertices the strategy does not own.
struct PositionalStrategy {
    std::vector<EdgeId> choice;

    bool operator==(const PositionalStrategy&) const = default;
};

/// Structural checks shared by every game kind, including totality.
void validate_arena(const GameArena& arena);
void validate_game(const ParityGame& g);
void validate_game(const TwoDimGame& g);
void validate_game(const MullerGame& g);

/// Throws ValidationError unless `s` picks an own outgoing edge for every vertex of `who`.
void validate_strategy(const GameArena& arena, Player who, const PositionalStrategy& s);

/// Every priority + 1: a play satisfies the result iff it violates the input.
ParityGame dualize_priorities(const ParityGame& g);

/// Same game with vertices renamed by `perm` (old index -> new index).
ParityGame permute_vertices(const ParityGame& g, const std::vector<Vertex>& perm);
TwoDimGame permute_vertices(const TwoDimGame& g, const std::vector<Vertex>& perm);

/// Vertices reachable from the initial vertex.
std::vector<char> reachable_vertices(const GameArena& arena);

using AnyGame = std::variant<ParityGame, TwoDimGame>;

AnyGame parse_game(std::string_view text);
ParityGame parse_parity_game(std::string_view text);
TwoDimGame parse_two_dim_game(std::string_view text);
std::string format_game(const ParityGame& g);
std::string format_game(const TwoDimGame& g);

} // namespace hdsim
