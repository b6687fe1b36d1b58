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

#include "hdsim/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hdsim/errors.hpp"
#include "text_lines.hpp"

namespace hdsim {

void validate_dnf(const DnfFormula& f)
{
    if (f.var_count < 1) throw ValidationError("variable count must be positive");
    if (f.terms.empty()) throw ValidationError("formula has no terms");
    for (const auto& t : f.terms) {
        if (t.empty()) throw ValidationError("empty term");
        std::set<int> seen;
        for (int lit : t) {
            if (lit == 0) throw ValidationError("variable index 0");
            if (std::abs(lit) > f.var_count)
                throw ValidationError("variable index " + std::to_string(std::abs(lit)) + " above " +
                                      std::to_string(f.var_count));
            if (!seen.insert(lit).second) throw ValidationError("duplicate literal " + std::to_string(lit));
        }
    }
}

DnfFormula canonical(DnfFormula f)
{
    for (auto& t : f.terms)
        std::sort(t.begin(), t.end(), [](int a, int b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
        });
    return f;
}

DnfFormula parse_dnf(std::string_view text)
{
    using detail::fail;
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("empty formula file");
    if (lines[0].keyword() != "dnf") fail(lines[0], "expected 'dnf <M>' header");
    detail::expect_arity(lines[0], 2, 2);

    DnfFormula f;
    f.var_count = detail::to_index(lines[0], lines[0].words[1]);
    if (f.var_count < 1) fail(lines[0], "variable count must be positive");
    bool ended = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (ended) fail(line, "content after 'end'");
        if (line.keyword() == "term") {
            if (line.words.size() == 1) fail(line, "empty term");
            std::vector<int> term;
            for (size_t k = 1; k < line.words.size(); ++k) {
                long long lit = detail::to_integer(line, line.words[k]);
                if (lit == 0) fail(line, "variable index 0");
                if (std::llabs(lit) > f.var_count) fail(line, "variable index " + std::to_string(std::llabs(lit)) +
                                                                  " above " + std::to_string(f.var_count));
                if (std::find(term.begin(), term.end(), lit) != term.end())
                    fail(line, "duplicate literal " + std::to_string(lit));
                term.push_back(static_cast<int>(lit));
            }
            f.terms.push_back(std::move(term));
        } else if (line.keyword() == "end") {
            detail::expect_arity(line, 1, 1);
            ended = true;
        } else {
            fail(line, "unknown keyword '" + std::string(line.keyword()) + "'");
        }
    }
    if (!ended) throw ParseError("missing 'end'");
    if (f.terms.empty()) throw ParseError("formula has no terms");
    return canonical(std::move(f));
}

std::string format_dnf(const DnfFormula& input)
{
    const DnfFormula f = canonical(input);
    std::ostringstream out;
    out << "dnf " << f.var_count << "\n";
    for (const auto& t : f.terms) {
        out << "term";
        for (int lit : t) out << ' ' << lit;
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

bool brute_sat(const DnfFormula& f)
{
    validate_dnf(f);
    if (f.var_count > 24) throw ResourceError("too many variables for brute_sat");
    const std::uint32_t limit = 1u << f.var_count;
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        auto holds = [&](int lit) { return (((bits >> (std::abs(lit) - 1)) & 1u) != 0) == (lit > 0); };
        if (std::all_of(f.terms.begin(), f.terms.end(),
                        [&](const auto& t) { return std::any_of(t.begin(), t.end(), holds); }))
            return true;
    }
    return false;
}

TwoDimGame dnf_to_game(const DnfFormula& f)
{
    validate_dnf(f);
    const int m = f.var_count;
    const int n = static_cast<int>(f.terms.size());

    TwoDimGame g;
    g.name = "dnf";
    g.arena.vertex_count = 0;
    for (int v = 0; v < 2 * m; ++v) g.arena.add_vertex(Player::Adam);
    for (int i = 0; i < n; ++i) g.arena.add_vertex(Player::Eve);
    g.arena.initial = 0;

    for (int l = 0; l < 2 * m; ++l)
        for (int i = 0; i < n; ++i) {
            g.arena.edges.push_back({l, 2 * m + i});
            g.priority.push_back({0, 0});
        }
    for (int i = 0; i < n; ++i)
        for (int lit : f.terms[i]) {
            const int j = std::abs(lit);
            const Vertex l = lit > 0 ? j - 1 : m + j - 1;
            g.arena.edges.push_back({2 * m + i, l});
            g.priority.push_back(lit > 0 ? PriorityPair{2 * j + 2, 2 * j} : PriorityPair{2 * j + 1, 2 * j + 1});
        }
    for (const auto& p : g.priority) {
        g.max_p1 = std::max(g.max_p1, p.p1);
        g.max_p2 = std::max(g.max_p2, p.p2);
    }
    return g;
}

AutomataPair game_to_automata(const TwoDimGame& g)
{
    const auto& arena = g.arena;
    validate_game(g);
    for (const auto& e : arena.edges)
        if (arena.owner[e.src] == arena.owner[e.dst]) throw ValidationError("not bipartite");
    if (arena.owner[arena.initial] != Player::Adam) throw ValidationError("initial vertex not Adam-owned");

    const int edges = static_cast<int>(arena.edges.size());
    std::vector<std::string> alphabet;
    for (int e = 0; e < edges; ++e) alphabet.push_back("e" + std::to_string(e));
    alphabet.push_back("$");
    const Symbol dollar = edges;

    // D: u_D per Adam vertex, v_$ then v_D per Eve vertex.
    std::vector<State> dstate(arena.vertex_count), dollar_state(arena.vertex_count, -1);
    int dn = 0;
    for (Vertex v = 0; v < arena.vertex_count; ++v) {
        if (arena.owner[v] == Player::Eve) dollar_state[v] = dn++;
        dstate[v] = dn++;
    }

    ParityAutomaton d;
    d.name = "D";
    d.alphabet = alphabet;
    d.state_count = dn;
    d.initial = dstate[arena.initial];
    for (int v = 0; v < arena.vertex_count; ++v)
        if (arena.owner[v] == Player::Eve) d.transitions.push_back({dollar_state[v], dollar, dstate[v], 0});
    for (EdgeId e = 0; e < edges; ++e) {
        const auto [src, dst] = arena.edges[e];
        const State to = arena.owner[src] == Player::Adam ? dollar_state[dst] : dstate[dst];
        d.transitions.push_back({dstate[src], e, to, g.priority[e].p1});
    }

    // H: D's states first, then u_H / v_H per vertex, then (v_H, f) per Eve edge.
    ParityAutomaton h;
    h.name = "H";
    h.alphabet = alphabet;
    h.transitions = d.transitions;
    int hn = dn;
    std::vector<State> hstate(arena.vertex_count), choice(edges, -1);
    for (Vertex v = 0; v < arena.vertex_count; ++v) hstate[v] = hn++;
    for (EdgeId e = 0; e < edges; ++e)
        if (arena.owner[arena.edges[e].src] == Player::Eve) choice[e] = hn++;
    h.state_count = hn;
    h.initial = hstate[arena.initial];

    const auto out = out_edges(arena);
    for (EdgeId e = 0; e < edges; ++e) {
        const auto [src, dst] = arena.edges[e];
        if (arena.owner[src] == Player::Adam) {
            h.transitions.push_back({hstate[src], e, hstate[dst], g.priority[e].p2});
            continue;
        }
        h.transitions.push_back({hstate[src], dollar, choice[e], 0});
        for (EdgeId f : out[src]) {
            const State to = f == e ? hstate[arena.edges[f].dst] : dstate[arena.edges[f].dst];
            h.transitions.push_back({choice[e], f, to, g.priority[f].p2});
        }
    }

    for (auto* a : {&d, &h})
        for (const auto& t : a->transitions) a->max_priority = std::max(a->max_priority, t.priority);
    return {canonical(std::move(d)), canonical(std::move(h))};
}

} // namespace hdsim
