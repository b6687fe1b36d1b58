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

#include <algorithm>

#include "hdsim/solvers.hpp"

namespace hdsim {

namespace {

/**
 * Vertex-priority game obtained by putting a fresh vertex in the middle of
 * every edge. The middle vertex of edge e carries its priority; original
 * vertices carry 0, which never dominates since every cycle crosses an edge.
 */
class SplitGame {
  public:
    explicit SplitGame(const ParityGame& g)
        : n_(g.arena.vertex_count + static_cast<int>(g.arena.edges.size())),
          original_(g.arena.vertex_count),
          owner_(n_),
          priority_(n_, 0),
          succ_(n_),
          pred_(n_)
    {
        for (Vertex v = 0; v < original_; ++v) owner_[v] = g.arena.owner[v];
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.arena.edges.size()); ++e) {
            const int mid = original_ + e;
            owner_[mid] = Player::Eve;
            priority_[mid] = g.priority[e];
            link(g.arena.edges[e].src, mid);
            link(mid, g.arena.edges[e].dst);
        }
    }

    struct Result {
        std::vector<char> won[2];  // per player, over all split vertices
        std::vector<int> strategy; // successor for vertices in their owner's region
    };

    Result solve()
    {
        std::vector<char> all(n_, 1);
        Result r = make_result();
        solve(all, r);
        return r;
    }

    int original() const { return original_; }

  private:
    void link(int a, int b)
    {
        succ_[a].push_back(b);
        pred_[b].push_back(a);
    }

    Result make_result() const
    {
        Result r;
        r.won[0].assign(n_, 0);
        r.won[1].assign(n_, 0);
        r.strategy.assign(n_, -1);
        return r;
    }

    static int idx(Player p) { return p == Player::Eve ? 0 : 1; }

    // Attractor of `target` for `who` inside `game`. Sets strategy on attracted own vertices.
    std::vector<char> attract(const std::vector<char>& game, const std::vector<char>& target, Player who,
                              std::vector<int>& strategy) const
    {
        std::vector<char> attr = target;
        std::vector<int> remaining(n_, 0);
        std::vector<int> queue;
        for (int v = 0; v < n_; ++v) {
            if (!game[v]) continue;
            for (int w : succ_[v])
                if (game[w]) ++remaining[v];
            if (attr[v]) queue.push_back(v);
        }
        for (size_t head = 0; head < queue.size(); ++head) {
            int w = queue[head];
            for (int v : pred_[w]) {
                if (!game[v] || attr[v]) continue;
                if (owner_[v] == who) {
                    attr[v] = 1;
                    strategy[v] = w;
                    queue.push_back(v);
                } else if (--remaining[v] == 0) {
                    attr[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return attr;
    }

    void solve(const std::vector<char>& game, Result& out)
    {
        int top = -1;
        for (int v = 0; v < n_; ++v)
            if (game[v]) top = std::max(top, priority_[v]);
        if (top < 0) return;

        const Player alpha = parity_winner(top);
        const Player beta = opponent(alpha);

        std::vector<char> heads(n_, 0);
        for (int v = 0; v < n_; ++v) heads[v] = game[v] && priority_[v] == top;

        std::vector<int> attr_strategy(n_, -1);
        auto a = attract(game, heads, alpha, attr_strategy);

        std::vector<char> rest(n_, 0);
        for (int v = 0; v < n_; ++v) rest[v] = game[v] && !a[v];
        Result sub = make_result();
        solve(rest, sub);

        bool beta_empty = true;
        for (int v = 0; v < n_; ++v)
            if (sub.won[idx(beta)][v]) {
                beta_empty = false;
                break;
            }

        if (beta_empty) {
            for (int v = 0; v < n_; ++v) {
                if (!game[v]) continue;
                out.won[idx(alpha)][v] = 1;
                if (owner_[v] != alpha) continue;
                if (rest[v]) {
                    out.strategy[v] = sub.strategy[v];
                } else if (heads[v]) {
                    for (int w : succ_[v])
                        if (game[w]) {
                            out.strategy[v] = w;
                            break;
                        }
                } else {
                    out.strategy[v] = attr_strategy[v];
                }
            }
            return;
        }

        std::vector<int> beta_strategy(n_, -1);
        auto b = attract(game, sub.won[idx(beta)], beta, beta_strategy);

        std::vector<char> remainder(n_, 0);
        for (int v = 0; v < n_; ++v) remainder[v] = game[v] && !b[v];
        Result sub2 = make_result();
        solve(remainder, sub2);

        for (int v = 0; v < n_; ++v) {
            if (!game[v]) continue;
            if (b[v]) {
                out.won[idx(beta)][v] = 1;
                if (owner_[v] == beta)
                    out.strategy[v] = sub.won[idx(beta)][v] ? sub.strategy[v] : beta_strategy[v];
            } else {
                const Player w = sub2.won[0][v] ? Player::Eve : Player::Adam;
                out.won[idx(w)][v] = 1;
                if (owner_[v] == w) out.strategy[v] = sub2.strategy[v];
            }
        }
    }

    int n_;
    int original_;
    std::vector<Player> owner_;
    std::vector<int> priority_;
    std::vector<std::vector<int>> succ_, pred_;
};

} // namespace

ParitySolution solve_parity_recursive(const ParityGame& g)
{
    validate_game(g);
    SplitGame split(g);
    auto r = split.solve();

    const int n = g.arena.vertex_count;
    ParitySolution sol;
    sol.region.resize(n);
    sol.eve.choice.assign(n, -1);
    sol.adam.choice.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const Player w = r.won[0][v] ? Player::Eve : Player::Adam;
        sol.region[v] = w;
        if (g.arena.owner[v] != w) continue;
        const EdgeId e = r.strategy[v] - split.original();
        (w == Player::Eve ? sol.eve : sol.adam).choice[v] = e;
    }
    sol.winner = sol.region[g.arena.initial];
    return sol;
}

} // namespace hdsim
