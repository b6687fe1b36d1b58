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

// Exhaustive search over positional strategies. The serial loop is the
// reference; the OpenMP kernel must return the same (smallest) index.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hdsim/game.hpp"

namespace hdsim {

enum class Exec { Serial, Parallel };

struct EnumLimits {
    std::uint64_t max_strategies = 1'000'000;
    Exec exec = Exec::Parallel;
};

/// Mixed-radix numbering of the positional strategies of one player.
/// Only vertices reachable from the initial vertex vary; others take their first edge.
class StrategySpace {
  public:
    StrategySpace(const GameArena& arena, Player who);

    /// Number of strategies, saturated at UINT64_MAX.
    std::uint64_t size() const { return size_; }
    PositionalStrategy decode(std::uint64_t index) const;

  private:
    PositionalStrategy base_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<EdgeId>> options_;
    std::uint64_t size_ = 1;
};

using StrategyPredicate = std::function<bool(const PositionalStrategy&)>;

std::optional<std::uint64_t> first_strategy_serial(const StrategySpace& space, const StrategyPredicate& accept);

/// `accept` is called concurrently and must not mutate shared state.
std::optional<std::uint64_t> first_strategy_parallel(const StrategySpace& space, const StrategyPredicate& accept);

std::optional<std::uint64_t> first_strategy(const StrategySpace& space, const StrategyPredicate& accept, Exec exec);

} // namespace hdsim
