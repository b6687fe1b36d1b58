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

#include "hdsim/game.hpp"

#include <algorithm>
#include <sstream>

#include "hdsim/errors.hpp"
#include "text_lines.hpp"

namespace hdsim {

std::vector<std::vector<EdgeId>> out_edges(const GameArena& arena)
{
    std::vector<std::vector<EdgeId>> out(arena.vertex_count);
    for (EdgeId e = 0; e < static_cast<EdgeId>(arena.edges.size()); ++e) out[arena.edges[e].src].push_back(e);
    return out;
}

void validate_arena(const GameArena& arena)
{
    if (arena.vertex_count <= 0) throw ValidationError("game must have at least one vertex");
    if (static_cast<int>(arena.owner.size()) != arena.vertex_count)
        throw ValidationError("owner table size differs from vertex count");
    if (arena.initial < 0 || arena.initial >= arena.vertex_count)
        throw ValidationError("vertex index out of range: initial " + std::to_string(arena.initial));

    std::vector<char> alive(arena.vertex_count, 0);
    for (const auto& e : arena.edges) {
        if (e.src < 0 || e.src >= arena.vertex_count || e.dst < 0 || e.dst >= arena.vertex_count)
            throw ValidationError("vertex index out of range in edge " + std::to_string(e.src) + " -> " +
                                  std::to_string(e.dst));
        alive[e.src] = 1;
    }
    for (Vertex v = 0; v < arena.vertex_count; ++v)
        if (!alive[v]) throw ValidationError("dead vertex " + std::to_string(v));
}

namespace {

void check_bound(int value, int bound, const char* what)
{
    if (value < 0 || value > bound)
        throw ValidationError(std::string(what) + " " + std::to_string(value) + " outside declared range [0," +
                              std::to_string(bound) + "]");
}

} // namespace

void validate_game(const ParityGame& g)
{
    validate_arena(g.arena);
    if (g.priority.size() != g.arena.edges.size()) throw ValidationError("priority table size differs from edge count");
    for (int p : g.priority) check_bound(p, g.max_priority, "priority");
}

void validate_game(const TwoDimGame& g)
{
    validate_arena(g.arena);
    if (g.priority.size() != g.arena.edges.size()) throw ValidationError("priority table size differs from edge count");
    for (const auto& p : g.priority) {
        check_bound(p.p1, g.max_p1, "first priority");
        check_bound(p.p2, g.max_p2, "second priority");
    }
}

void validate_game(const MullerGame& g)
{
    validate_arena(g.arena);
    if (g.color.size() != g.arena.edges.size()) throw ValidationError("colour table size differs from edge count");
    for (int c : g.color)
        if (c < 0 || c >= g.condition.size()) throw ValidationError("colour index out of range: " + std::to_string(c));
}

void validate_strategy(const GameArena& arena, Player who, const PositionalStrategy& s)
{
    if (static_cast<int>(s.choice.size()) != arena.vertex_count) throw ValidationError("strategy for a different arena");
    for (Vertex v = 0; v < arena.vertex_count; ++v) {
        if (arena.owner[v] != who) continue;
        EdgeId e = s.choice[v];
        if (e < 0) throw ValidationError("strategy incomplete at vertex " + std::to_string(v));
        if (e >= static_cast<EdgeId>(arena.edges.size()) || arena.edges[e].src != v)
            throw ValidationError("strategy picks a foreign edge at vertex " + std::to_string(v));
    }
}

ParityGame dualize_priorities(const ParityGame& g)
{
    ParityGame out = g;
    for (int& p : out.priority) ++p;
    ++out.max_priority;
    return out;
}

namespace {

GameArena permute_arena(const GameArena& a, const std::vector<Vertex>& perm)
{
    GameArena out = a;
    for (Vertex v = 0; v < a.vertex_count; ++v) out.owner[perm[v]] = a.owner[v];
    out.initial = perm[a.initial];
    for (auto& e : out.edges) {
        e.src = perm[e.src];
        e.dst = perm[e.dst];
    }
    return out;
}

} // namespace

ParityGame permute_vertices(const ParityGame& g, const std::vector<Vertex>& perm)
{
    ParityGame out = g;
    out.arena = permute_arena(g.arena, perm);
    return out;
}

TwoDimGame permute_vertices(const TwoDimGame& g, const std::vector<Vertex>& perm)
{
    TwoDimGame out = g;
    out.arena = permute_arena(g.arena, perm);
    return out;
}

std::vector<char> reachable_vertices(const GameArena& arena)
{
    auto out = out_edges(arena);
    std::vector<char> seen(arena.vertex_count, 0);
    std::vector<Vertex> stack{arena.initial};
    seen[arena.initial] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : out[v]) {
            Vertex w = arena.edges[e].dst;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

using detail::expect_arity;
using detail::fail;
using detail::to_index;

struct RawGame {
    std::string name;
    int dims = 1;
    GameArena arena;
    std::vector<PriorityPair> priority;
};

RawGame read_game(std::string_view text)
{
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("empty game file");
    const auto& head = lines[0];
    if (head.keyword() != "pg") fail(head, "expected 'pg <name> <dims>' header");
    expect_arity(head, 3, 3);

    RawGame g;
    g.name = std::string(head.words[1]);
    g.dims = to_index(head, head.words[2]);
    if (g.dims != 1 && g.dims != 2) fail(head, "dims must be 1 or 2");

    g.arena.vertex_count = 0;
    bool have_vertices = false, have_initial = false, ended = false;
    std::vector<char> owner_set;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto key = line.keyword();
        if (ended) fail(line, "content after 'end'");
        if (key == "vertices") {
            expect_arity(line, 2, 2);
            if (have_vertices) fail(line, "duplicate 'vertices'");
            g.arena.vertex_count = to_index(line, line.words[1]);
            g.arena.owner.assign(g.arena.vertex_count, Player::Adam);
            owner_set.assign(g.arena.vertex_count, 0);
            have_vertices = true;
        } else if (key == "initial") {
            expect_arity(line, 2, 2);
            g.arena.initial = to_index(line, line.words[1]);
            have_initial = true;
        } else if (key == "owner") {
            expect_arity(line, 3, 3);
            if (!have_vertices) fail(line, "'owner' before 'vertices'");
            int v = to_index(line, line.words[1]);
            if (v >= g.arena.vertex_count) fail(line, "vertex index out of range");
            if (owner_set[v]) fail(line, "owner given twice for vertex " + std::to_string(v));
            if (line.words[2] == "E")
                g.arena.owner[v] = Player::Eve;
            else if (line.words[2] == "A")
                g.arena.owner[v] = Player::Adam;
            else
                fail(line, "owner must be E or A");
            owner_set[v] = 1;
        } else if (key == "edge") {
            expect_arity(line, 4, 5);
            if (static_cast<int>(line.words.size()) != 3 + g.dims)
                fail(line, "edge needs " + std::to_string(g.dims) + " priorities");
            g.arena.edges.push_back({to_index(line, line.words[1]), to_index(line, line.words[2])});
            PriorityPair p{to_index(line, line.words[3]), g.dims == 2 ? to_index(line, line.words[4]) : 0};
            g.priority.push_back(p);
        } else if (key == "end") {
            expect_arity(line, 1, 1);
            ended = true;
        } else {
            fail(line, "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!ended) throw ParseError("missing 'end'");
    if (!have_vertices || !have_initial) throw ParseError("game needs 'vertices' and 'initial'");
    for (Vertex v = 0; v < g.arena.vertex_count; ++v)
        if (!owner_set[v]) throw ParseError("missing owner for vertex " + std::to_string(v));
    return g;
}

ParityGame to_parity(RawGame raw)
{
    ParityGame g;
    g.name = raw.name;
    g.arena = std::move(raw.arena);
    for (const auto& p : raw.priority) {
        g.priority.push_back(p.p1);
        g.max_priority = std::max(g.max_priority, p.p1);
    }
    validate_game(g);
    return g;
}

TwoDimGame to_two_dim(RawGame raw)
{
    TwoDimGame g;
    g.name = raw.name;
    g.arena = std::move(raw.arena);
    g.priority = std::move(raw.priority);
    for (const auto& p : g.priority) {
        g.max_p1 = std::max(g.max_p1, p.p1);
        g.max_p2 = std::max(g.max_p2, p.p2);
    }
    validate_game(g);
    return g;
}

void write_arena_head(std::ostringstream& out, const std::string& name, int dims, const GameArena& a)
{
    out << "pg " << name << ' ' << dims << "\nvertices " << a.vertex_count << "\ninitial " << a.initial << "\n";
    for (Vertex v = 0; v < a.vertex_count; ++v)
        out << "owner " << v << ' ' << (a.owner[v] == Player::Eve ? 'E' : 'A') << "\n";
}

} // namespace

AnyGame parse_game(std::string_view text)
{
    RawGame raw = read_game(text);
    if (raw.dims == 1) return to_parity(std::move(raw));
    return to_two_dim(std::move(raw));
}

ParityGame parse_parity_game(std::string_view text)
{
    RawGame raw = read_game(text);
    if (raw.dims != 1) throw ParseError("expected a parity game (dims 1)");
    return to_parity(std::move(raw));
}

TwoDimGame parse_two_dim_game(std::string_view text)
{
    RawGame raw = read_game(text);
    if (raw.dims != 2) throw ParseError("expected a 2-D parity game (dims 2)");
    return to_two_dim(std::move(raw));
}

std::string format_game(const ParityGame& g)
{
    std::ostringstream out;
    write_arena_head(out, g.name, 1, g.arena);
    for (size_t e = 0; e < g.arena.edges.size(); ++e)
        out << "edge " << g.arena.edges[e].src << ' ' << g.arena.edges[e].dst << ' ' << g.priority[e] << "\n";
    out << "end\n";
    return out.str();
}

std::string format_game(const TwoDimGame& g)
{
    std::ostringstream out;
    write_arena_head(out, g.name, 2, g.arena);
    for (size_t e = 0; e < g.arena.edges.size(); ++e)
        out << "edge " << g.arena.edges[e].src << ' ' << g.arena.edges[e].dst << ' ' << g.priority[e].p1 << ' '
            << g.priority[e].p2 << "\n";
    out << "end\n";
    return out.str();
}

} // namespace hdsim
