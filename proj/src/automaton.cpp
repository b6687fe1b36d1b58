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

#include "hdsim/automaton.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hdsim/errors.hpp"

namespace hdsim {

TransitionTable::TransitionTable(const ParityAutomaton& a)
    : symbols_(static_cast<int>(a.alphabet.size())),
      cells_(static_cast<size_t>(a.state_count) * a.alphabet.size())
{
    for (const auto& t : a.transitions) cells_[t.src * symbols_ + t.symbol].push_back({t.dst, t.priority});
}

void validate(const ParityAutomaton& a)
{
    if (a.state_count <= 0) throw ValidationError("automaton must have at least one state");
    if (a.initial < 0 || a.initial >= a.state_count)
        throw ValidationError("state index out of range: initial " + std::to_string(a.initial));
    if (a.max_priority < 0) throw ValidationError("negative max_priority");

    std::unordered_set<std::string> seen;
    for (const auto& tok : a.alphabet) {
        if (tok.empty()) throw ValidationError("empty symbol token");
        if (!seen.insert(tok).second) throw ValidationError("duplicate symbol '" + tok + "'");
    }

    const int symbols = static_cast<int>(a.alphabet.size());
    std::set<Transition> unique;
    for (const auto& t : a.transitions) {
        if (t.src < 0 || t.src >= a.state_count || t.dst < 0 || t.dst >= a.state_count)
            throw ValidationError("state index out of range in transition " + std::to_string(t.src) + " -> " +
                                  std::to_string(t.dst));
        if (t.symbol < 0 || t.symbol >= symbols)
            throw ValidationError("symbol index out of range: " + std::to_string(t.symbol));
        if (t.priority < 0 || t.priority > a.max_priority)
            throw ValidationError("priority " + std::to_string(t.priority) + " above max_priority " +
                                  std::to_string(a.max_priority));
        if (!unique.insert(t).second) throw ValidationError("duplicate transition");
    }
}

bool is_deterministic(const ParityAutomaton& a)
{
    std::set<std::pair<State, Symbol>> seen;
    for (const auto& t : a.transitions)
        if (!seen.emplace(t.src, t.symbol).second) return false;
    return true;
}

bool is_complete(const ParityAutomaton& a)
{
    const size_t symbols = a.alphabet.size();
    std::vector<char> covered(static_cast<size_t>(a.state_count) * symbols, 0);
    for (const auto& t : a.transitions) covered[t.src * symbols + t.symbol] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

ParityAutomaton complete(const ParityAutomaton& a)
{
    if (is_complete(a)) return a;

    const int symbols = static_cast<int>(a.alphabet.size());
    std::vector<char> covered(static_cast<size_t>(a.state_count) * symbols, 0);
    for (const auto& t : a.transitions) covered[t.src * symbols + t.symbol] = 1;

    ParityAutomaton out = a;
    const State sink = a.state_count;
    out.state_count = a.state_count + 1;
    out.max_priority = std::max(a.max_priority, 1);
    for (State q = 0; q < a.state_count; ++q)
        for (Symbol s = 0; s < symbols; ++s)
            if (!covered[q * symbols + s]) out.transitions.push_back({q, s, sink, 1});
    for (Symbol s = 0; s < symbols; ++s) out.transitions.push_back({sink, s, sink, 1});
    return out;
}

namespace {

// Relation over (from, to, max priority) stored densely.
class PathRelation {
  public:
    PathRelation(int states, int priorities)
        : n_(states), d_(priorities), bits_(static_cast<size_t>(states) * states * priorities, 0)
    {
    }

    bool test(int q, int r, int p) const { return bits_[index(q, r, p)] != 0; }
    bool set(int q, int r, int p)
    {
        auto& b = bits_[index(q, r, p)];
        if (b) return false;
        b = 1;
        return true;
    }
    int states() const { return n_; }
    int priorities() const { return d_; }

  private:
    size_t index(int q, int r, int p) const { return (static_cast<size_t>(q) * n_ + r) * d_ + p; }

    int n_, d_;
    std::vector<char> bits_;
};

void check_symbols(const ParityAutomaton& a, const std::vector<Symbol>& word)
{
    for (Symbol s : word)
        if (s < 0 || s >= static_cast<int>(a.alphabet.size()))
            throw ValidationError("symbol not in alphabet: index " + std::to_string(s));
}

} // namespace

bool member_up(const ParityAutomaton& a, const UpWord& w)
{
    if (w.period.empty()) throw ValidationError("period of an ultimately periodic word must be nonempty");
    check_symbols(a, w.prefix);
    check_symbols(a, w.period);

    const int n = a.state_count;
    TransitionTable table(a);

    std::vector<char> after_prefix(n, 0);
    after_prefix[a.initial] = 1;
    for (Symbol s : w.prefix) {
        std::vector<char> next(n, 0);
        for (State q = 0; q < n; ++q)
            if (after_prefix[q])
                for (const auto& e : table.out(q, s)) next[e.dst] = 1;
        after_prefix.swap(next);
    }

    Priority top = 0;
    for (const auto& t : a.transitions) top = std::max(top, t.priority);
    const int prios = top + 1;

    // One pass over the period from every state, tracking the running maximum.
    PathRelation step(n, prios);
    for (State q = 0; q < n; ++q) {
        // frontier[r * prios + p]; -1 start marker handled by first symbol
        std::vector<char> frontier(static_cast<size_t>(n) * prios, 0);
        bool first = true;
        for (Symbol s : w.period) {
            std::vector<char> next(static_cast<size_t>(n) * prios, 0);
            if (first) {
                for (const auto& e : table.out(q, s)) next[e.dst * prios + e.priority] = 1;
                first = false;
            } else {
                for (State r = 0; r < n; ++r)
                    for (int p = 0; p < prios; ++p)
                        if (frontier[r * prios + p])
                            for (const auto& e : table.out(r, s))
                                next[e.dst * prios + std::max(p, e.priority)] = 1;
            }
            frontier.swap(next);
        }
        for (State r = 0; r < n; ++r)
            for (int p = 0; p < prios; ++p)
                if (frontier[r * prios + p]) step.set(q, r, p);
    }

    // Transitive closure under composition with the single-period relation.
    PathRelation closure = step;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < n; ++q)
            for (State r = 0; r < n; ++r)
                for (int p = 0; p < prios; ++p) {
                    if (!closure.test(q, r, p)) continue;
                    for (State t = 0; t < n; ++t)
                        for (int p2 = 0; p2 < prios; ++p2)
                            if (step.test(r, t, p2) && closure.set(q, t, std::max(p, p2))) changed = true;
                }
    }

    std::vector<char> boundary(n, 0);
    for (State q = 0; q < n; ++q) {
        if (!after_prefix[q]) continue;
        for (State r = 0; r < n; ++r)
            for (int p = 0; p < prios; ++p)
                if (closure.test(q, r, p)) boundary[r] = 1;
    }
    for (State q = 0; q < n; ++q) {
        if (!boundary[q]) continue;
        for (int p = 0; p < prios; p += 2)
            if (closure.test(q, q, p)) return true;
    }
    return false;
}

int parity_index(const ParityAutomaton& a)
{
    if (a.transitions.empty()) return 0;
    auto [lo, hi] = std::minmax_element(a.transitions.begin(), a.transitions.end(),
                                        [](const Transition& x, const Transition& y) {
                                            return x.priority < y.priority;
                                        });
    return hi->priority - lo->priority + 1;
}

ParityAutomaton parity_to_buchi(const ParityAutomaton& a)
{
    std::set<Priority> evens;
    bool has_odd = false;
    for (const auto& t : a.transitions) {
        if (t.priority % 2 == 0)
            evens.insert(t.priority);
        else
            has_odd = true;
    }

    ParityAutomaton out;
    out.name = a.name + "_buchi";
    out.alphabet = a.alphabet;
    out.initial = a.initial;
    out.max_priority = 2;

    if (!has_odd) {
        out.state_count = a.state_count;
        for (const auto& t : a.transitions) out.transitions.push_back({t.src, t.symbol, t.dst, 2});
        return canonical(std::move(out));
    }

    const int n = a.state_count;
    out.state_count = n * (1 + static_cast<int>(evens.size()));
    for (const auto& t : a.transitions) out.transitions.push_back({t.src, t.symbol, t.dst, 1});

    int copy = 1;
    for (Priority even : evens) {
        const int base = copy * n;
        for (const auto& t : a.transitions) {
            out.transitions.push_back({t.src, t.symbol, base + t.dst, 1});
            if (t.priority <= even)
                out.transitions.push_back({base + t.src, t.symbol, base + t.dst, t.priority == even ? 2 : 1});
        }
        ++copy;
    }
    return canonical(std::move(out));
}

ParityAutomaton canonical(ParityAutomaton a)
{
    std::sort(a.transitions.begin(), a.transitions.end());
    a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()), a.transitions.end());
    return a;
}

std::vector<Symbol> symbols_of(const ParityAutomaton& a, const std::vector<std::string>& tokens)
{
    std::vector<Symbol> out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto it = std::find(a.alphabet.begin(), a.alphabet.end(), tok);
        if (it == a.alphabet.end()) throw ValidationError("symbol not in alphabet: '" + tok + "'");
        out.push_back(static_cast<Symbol>(it - a.alphabet.begin()));
    }
    return out;
}

} // namespace hdsim
