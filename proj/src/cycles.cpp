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

#include "cycles.hpp"

#include <algorithm>

namespace hdsim::detail {

std::vector<int> scc_ids(int n, std::span<const ArenaEdge> edges, std::span<const char> enabled)
{
    std::vector<int> start(n + 1, 0), adj;
    for (size_t e = 0; e < edges.size(); ++e)
        if (enabled[e]) ++start[edges[e].src + 1];
    for (int v = 0; v < n; ++v) start[v + 1] += start[v];
    adj.resize(start[n]);
    {
        std::vector<int> fill(start.begin(), start.end() - 1);
        for (size_t e = 0; e < edges.size(); ++e)
            if (enabled[e]) adj[fill[edges[e].src]++] = edges[e].dst;
    }

    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack, cursor(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> call;
    int counter = 0, comps = 0;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back(root);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        cursor[root] = start[root];
        while (!call.empty()) {
            int v = call.back();
            if (cursor[v] < start[v + 1]) {
                int w = adj[cursor[v]++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    cursor[w] = start[w];
                    call.push_back(w);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            call.pop_back();
            if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
        }
    }
    return comp;
}

std::vector<char> reach(int n, std::span<const ArenaEdge> edges, std::span<const char> enabled,
                        std::span<const Vertex> from)
{
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); ++e)
        if (enabled[e]) adj[edges[e].src].push_back(edges[e].dst);
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (Vertex v : from)
        if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return seen;
}

bool cycle_with_maxima(int n, std::span<const ArenaEdge> edges, std::span<const char> active,
                       std::span<const int> first, int bound1, std::span<const int> second, int bound2)
{
    std::vector<char> enabled(edges.size(), 0);
    bool hit1 = false, hit2 = false;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (active[e] && first[e] <= bound1 && second[e] <= bound2) {
            enabled[e] = 1;
            hit1 |= first[e] == bound1;
            hit2 |= second[e] == bound2;
        }
    }
    if (!hit1 || !hit2) return false;

    auto comp = scc_ids(n, edges, enabled);
    std::vector<char> has1, has2;
    int comps = 0;
    for (int c : comp) comps = std::max(comps, c + 1);
    has1.assign(comps, 0);
    has2.assign(comps, 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!enabled[e]) continue;
        int c = comp[edges[e].src];
        if (c != comp[edges[e].dst]) continue;
        if (first[e] == bound1) has1[c] = 1;
        if (second[e] == bound2) has2[c] = 1;
        if (has1[c] && has2[c]) return true;
    }
    return false;
}

} // namespace hdsim::detail
