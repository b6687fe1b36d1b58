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

#include "hdsim/strategy_enum.hpp"

#include <atomic>
#include <limits>

namespace hdsim {

StrategySpace::StrategySpace(const GameArena& arena, Player who)
{
    const auto outs = out_edges(arena);
    const auto live = reachable_vertices(arena);
    base_.choice.assign(arena.vertex_count, -1);
    for (Vertex v = 0; v < arena.vertex_count; ++v) {
        if (arena.owner[v] != who || outs[v].empty()) continue;
        base_.choice[v] = outs[v].front();
        if (!live[v] || outs[v].size() < 2) continue;
        vertices_.push_back(v);
        options_.push_back(outs[v]);
        const std::uint64_t radix = outs[v].size();
        if (size_ > std::numeric_limits<std::uint64_t>::max() / radix)
            size_ = std::numeric_limits<std::uint64_t>::max();
        else
            size_ *= radix;
    }
}

PositionalStrategy StrategySpace::decode(std::uint64_t index) const
{
    PositionalStrategy s = base_;
    for (size_t i = 0; i < vertices_.size(); ++i) {
        const std::uint64_t radix = options_[i].size();
        s.choice[vertices_[i]] = options_[i][index % radix];
        index /= radix;
    }
    return s;
}

std::optional<std::uint64_t> first_strategy_serial(const StrategySpace& space, const StrategyPredicate& accept)
{
    for (std::uint64_t i = 0; i < space.size(); ++i)
        if (accept(space.decode(i))) return i;
    return std::nullopt;
}

std::optional<std::uint64_t> first_strategy_parallel(const StrategySpace& space, const StrategyPredicate& accept)
{
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};
    const auto total = static_cast<long long>(space.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < total; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        if (idx >= best.load(std::memory_order_relaxed)) continue;
        if (!accept(space.decode(idx))) continue;
        auto cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
    }

    auto found = best.load();
    if (found == none) return std::nullopt;
    return found;
}

std::optional<std::uint64_t> first_strategy(const StrategySpace& space, const StrategyPredicate& accept, Exec exec)
{
    return exec == Exec::Parallel ? first_strategy_parallel(space, accept) : first_strategy_serial(space, accept);
}

} // namespace hdsim
