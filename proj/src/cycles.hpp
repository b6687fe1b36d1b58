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

#include <span>
#include <vector>

#include "hdsim/game.hpp"

namespace hdsim::detail {

/// Tarjan SCC ids over the enabled edges (iterative, fixed visiting order).
std::vector<int> scc_ids(int vertex_count, std::span<const ArenaEdge> edges, std::span<const char> enabled);

/// Vertices reachable from `from` through enabled edges.
std::vector<char> reach(int vertex_count, std::span<const ArenaEdge> edges, std::span<const char> enabled,
                        std::span<const Vertex> from);

/**
 * True iff some SCC of the subgraph {e active : first[e] <= bound1 and
 * second[e] <= bound2} holds an internal edge with first == bound1 and an
 * internal edge with second == bound2. Such an SCC carries a cycle whose
 * maxima are exactly (bound1, bound2).
 */
bool cycle_with_maxima(int vertex_count, std::span<const ArenaEdge> edges, std::span<const char> active,
                       std::span<const int> first, int bound1, std::span<const int> second, int bound2);

} // namespace hdsim::detail
