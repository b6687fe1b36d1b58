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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hdsim {

using State = int;
using Symbol = int;
using Priority = int;

struct Transition {
    State src = 0;
    Symbol symbol = 0;
    State dst = 0;
    Priority priority = 0;

    auto operator<=>(const Transition&) const = default;
};

/**
 * Nondeterministic parity automaton with priorities on transitions.
 *
 * A run is accepting when the highest priority seen infinitely often is even.
 * States and symbols are dense indices; the alphabet keeps the tokens used by
 * the text format.
 */
struct ParityAutomaton {
    std::string name = "A";
    std::vector<std::string> alphabet;
    int state_count = 1;
    State initial = 0;
    std::vector<Transition> transitions;
    Priority max_priority = 0;

    bool operator==(const ParityAutomaton&) const = default;
};

/// Ultimately periodic word prefix . period^omega over symbol indices.
struct UpWord {
    std::vector<Symbol> prefix;
    std::vector<Symbol> period;
};

/// Per (state, symbol) outgoing transitions, built once for product constructions.
class TransitionTable {
  public:
    struct Edge {
        State dst;
        Priority priority;
    };

    explicit TransitionTable(const ParityAutomaton& a);

    const std::vector<Edge>& out(State q, Symbol s) const { return cells_[q * symbols_ + s]; }

  private:
    int symbols_;
    std::vector<std::vector<Edge>> cells_;
};

/// Throws ValidationError naming the first violated invariant.
void validate(const ParityAutomaton& a);

bool is_deterministic(const ParityAutomaton& a);

/// True when every (state, symbol) pair has at least one transition.
bool is_complete(const ParityAutomaton& a);

/**
 * Adds a rejecting sink (priority 1 everywhere) for missing (state, symbol)
 * pairs. Returns the input unchanged when it is already complete.
 */
ParityAutomaton complete(const ParityAutomaton& a);

/// Exact acceptance of prefix . period^omega. Throws ValidationError on foreign symbols.
bool member_up(const ParityAutomaton& a, const UpWord& w);

/// Number of priorities max - min + 1 over the transitions (0 without transitions).
int parity_index(const ParityAutomaton& a);

/**
 * Language-equivalent Buchi automaton (priorities 1 and 2 only).
 *
 * Keeps the original states as a waiting part and adds one copy of Q for every
 * even priority that occurs; inside the copy for 2k only priorities <= 2k are
 * allowed and 2k itself becomes the Buchi mark. An automaton without odd
 * priorities accepts along every infinite run and is relabelled in place.
 */
ParityAutomaton parity_to_buchi(const ParityAutomaton& a);

/// Transitions sorted by (src, symbol, dst, priority).
ParityAutomaton canonical(ParityAutomaton a);

ParityAutomaton parse_automaton(std::string_view text);
std::string format_automaton(const ParityAutomaton& a);

/// Maps alphabet tokens to indices; throws ValidationError on unknown tokens.
std::vector<Symbol> symbols_of(const ParityAutomaton& a, const std::vector<std::string>& tokens);

} // namespace hdsim
