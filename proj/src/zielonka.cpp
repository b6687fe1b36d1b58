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

#include "hdsim/zielonka.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hdsim/errors.hpp"

namespace hdsim {

namespace {

constexpr long long kMaxThresholdCombos = 5'000'000;
constexpr int kMaxExplicitSubsetBits = 26;

// Subsets of X whose membership differs from X's, found by removing one colour
// at a time and only continuing through same-membership sets. Every maximal
// flipped subset is reachable that way.
std::vector<ColorSet> flipped_candidates_explicit(const MullerCondition& c, const ColorSet& x, bool x_in)
{
    if (x.count() > kMaxExplicitSubsetBits) throw ResourceError("Zielonka node too large for subset search");
    std::vector<ColorSet> found;
    std::unordered_set<ColorSet, ColorSetHash> visited{x};
    std::vector<ColorSet> stack{x};
    while (!stack.empty()) {
        ColorSet cur = std::move(stack.back());
        stack.pop_back();
        for (int col : cur.members()) {
            ColorSet next = cur;
            next.reset(col);
            if (next.empty() || !visited.insert(next).second) continue;
            if (c.contains(next) != x_in)
                found.push_back(std::move(next));
            else
                stack.push_back(std::move(next));
        }
    }
    return found;
}

// For max-rule conditions every subset S lies inside the threshold closure
// {c in X : c <= max(S) componentwise}, which has the same maxima as S.
std::vector<ColorSet> flipped_candidates_threshold(const MullerCondition& c, const ColorSet& x, bool x_in)
{
    const auto& colors = c.colors();
    const auto members = x.members();
    const size_t arity = colors.front().size();

    std::vector<std::vector<int>> values(arity);
    long long combos = 1;
    for (size_t k = 0; k < arity; ++k) {
        std::set<int> vs;
        for (int m : members) vs.insert(colors[m][k]);
        values[k].assign(vs.begin(), vs.end());
        combos *= static_cast<long long>(values[k].size());
        if (combos > kMaxThresholdCombos) throw ResourceError("too many threshold combinations in Zielonka search");
    }

    std::unordered_set<ColorSet, ColorSetHash> seen;
    std::vector<ColorSet> found;
    std::vector<size_t> pick(arity, 0);
    for (long long n = 0; n < combos; ++n) {
        ColorSet closure(c.size());
        for (int m : members) {
            bool below = true;
            for (size_t k = 0; k < arity && below; ++k) below = colors[m][k] <= values[k][pick[k]];
            if (below) closure.set(m);
        }
        if (!closure.empty() && closure != x && seen.insert(closure).second && c.contains(closure) != x_in)
            found.push_back(std::move(closure));

        for (size_t k = 0; k < arity; ++k) {
            if (++pick[k] < values[k].size()) break;
            pick[k] = 0;
        }
    }
    return found;
}

std::vector<ColorSet> maximal_only(std::vector<ColorSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](const ColorSet& a, const ColorSet& b) { return a.count() > b.count(); });
    std::vector<ColorSet> kept;
    for (auto& s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const ColorSet& k) { return s.subset_of(k); });
        if (!dominated) kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

ZielonkaTree build_zielonka(const MullerCondition& c)
{
    ZielonkaTree t;
    ZielonkaTree::Node root;
    root.label = ColorSet::full(c.size());
    root.in_family = c.contains(root.label);
    t.nodes.push_back(std::move(root));

    // Depth-first so that leaves come out left to right.
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const ColorSet label = t.nodes[id].label;
        const bool in = t.nodes[id].in_family;

        auto candidates = c.is_max_rule() ? flipped_candidates_threshold(c, label, in)
                                          : flipped_candidates_explicit(c, label, in);
        auto children = maximal_only(std::move(candidates));
        if (children.empty()) {
            t.leaves.push_back(id);
            continue;
        }
        for (auto& label_child : children) {
            ZielonkaTree::Node node;
            node.label = std::move(label_child);
            node.in_family = !in;
            node.parent = id;
            node.depth = t.nodes[id].depth + 1;
            t.height = std::max(t.height, node.depth);
            t.nodes[id].children.push_back(static_cast<int>(t.nodes.size()));
            t.nodes.push_back(std::move(node));
        }
        const auto& kids = t.nodes[id].children;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return t;
}

TreeShape zielonka_shape(const ZielonkaTree& t)
{
    return {static_cast<int>(t.leaves.size()), t.height};
}

std::string color_token(const MullerCondition::Color& color)
{
    std::string tok;
    for (size_t k = 0; k < color.size(); ++k) {
        if (k) tok += '_';
        tok += std::to_string(color[k]);
    }
    return tok;
}

ParityAutomaton tree_to_dpa(const ZielonkaTree& t, const MullerCondition& c)
{
    const int h = t.height;
    const int top = (t.root().in_family == (h % 2 == 0)) ? h : h + 1;

    std::vector<int> leftmost(t.nodes.size());
    for (int id = static_cast<int>(t.nodes.size()) - 1; id >= 0; --id) {
        const auto& n = t.nodes[id];
        leftmost[id] = n.children.empty() ? id : leftmost[n.children.front()];
    }
    std::unordered_map<int, int> state_of;
    for (size_t i = 0; i < t.leaves.size(); ++i) state_of[t.leaves[i]] = static_cast<int>(i);

    ParityAutomaton a;
    a.name = "zielonka";
    for (const auto& col : c.colors()) a.alphabet.push_back(color_token(col));
    a.state_count = static_cast<int>(t.leaves.size());
    a.initial = state_of.at(leftmost[0]);
    a.max_priority = top;

    for (size_t s = 0; s < t.leaves.size(); ++s) {
        const int leaf = t.leaves[s];
        std::vector<int> path; // root .. leaf
        for (int n = leaf; n != -1; n = t.nodes[n].parent) path.push_back(n);
        std::reverse(path.begin(), path.end());

        for (int x = 0; x < c.size(); ++x) {
            size_t k = path.size() - 1;
            while (!t.nodes[path[k]].label.test(x)) --k; // root holds every colour
            const int m = path[k];
            const int priority = top - t.nodes[m].depth;
            int target = leaf;
            if (m != leaf) {
                const auto& kids = t.nodes[m].children;
                auto pos = std::find(kids.begin(), kids.end(), path[k + 1]) - kids.begin();
                target = leftmost[kids[(pos + 1) % kids.size()]];
            }
            a.transitions.push_back({static_cast<State>(s), x, state_of.at(target), priority});
        }
    }
    return canonical(std::move(a));
}

MullerReduction reduce_muller_game(const MullerGame& g)
{
    validate_game(g);
    const ZielonkaTree tree = build_zielonka(g.condition);
    const ParityAutomaton dpa = tree_to_dpa(tree, g.condition);
    const int colors = g.condition.size();

    std::vector<TransitionTable::Edge> delta(static_cast<size_t>(dpa.state_count) * colors);
    for (const auto& tr : dpa.transitions) delta[tr.src * colors + tr.symbol] = {tr.dst, tr.priority};

    const auto outs = out_edges(g.arena);
    MullerReduction r;
    r.shape = zielonka_shape(tree);
    r.dpa_states = dpa.state_count;
    ParityGame& pg = r.game;
    pg.name = "muller_product";
    pg.arena.vertex_count = 0;

    std::unordered_map<long long, Vertex> index;
    std::vector<std::pair<Vertex, int>> origin;
    auto lookup = [&](Vertex v, int q) {
        long long key = static_cast<long long>(v) * dpa.state_count + q;
        auto [it, fresh] = index.emplace(key, pg.arena.vertex_count);
        if (fresh) {
            pg.arena.add_vertex(g.arena.owner[v]);
            origin.emplace_back(v, q);
        }
        return it->second;
    };

    pg.arena.initial = lookup(g.arena.initial, dpa.initial);
    std::set<int> used;
    for (Vertex pv = 0; pv < pg.arena.vertex_count; ++pv) {
        auto [v, q] = origin[pv];
        for (EdgeId e : outs[v]) {
            const auto step = delta[q * colors + g.color[e]];
            Vertex w = lookup(g.arena.edges[e].dst, step.dst);
            pg.arena.edges.push_back({pv, w});
            pg.priority.push_back(step.priority);
            pg.max_priority = std::max(pg.max_priority, step.priority);
            used.insert(step.priority);
        }
    }
    r.distinct_priorities = static_cast<int>(used.size());
    return r;
}

ParityGame muller_game_to_parity(const MullerGame& g)
{
    return reduce_muller_game(g).game;
}

} // namespace hdsim
