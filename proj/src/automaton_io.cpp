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
#include <sstream>

#include "hdsim/automaton.hpp"
#include "text_lines.hpp"

namespace hdsim {

using detail::expect_arity;
using detail::fail;
using detail::to_index;

ParityAutomaton parse_automaton(std::string_view text)
{
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("empty automaton file");

    ParityAutomaton a;
    a.state_count = 0;
    bool have_alphabet = false, have_states = false, have_initial = false, ended = false;

    size_t i = 0;
    if (lines[0].keyword() != "pa") fail(lines[0], "expected 'pa <name>' header");
    expect_arity(lines[0], 1, 2);
    a.name = lines[0].words.size() == 2 ? std::string(lines[0].words[1]) : std::string("A");

    for (i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto key = line.keyword();
        if (ended) fail(line, "content after 'end'");
        if (key == "alphabet") {
            if (have_alphabet) fail(line, "duplicate 'alphabet'");
            for (size_t k = 1; k < line.words.size(); ++k) a.alphabet.emplace_back(line.words[k]);
            have_alphabet = true;
        } else if (key == "states") {
            expect_arity(line, 2, 2);
            a.state_count = to_index(line, line.words[1]);
            have_states = true;
        } else if (key == "initial") {
            expect_arity(line, 2, 2);
            a.initial = to_index(line, line.words[1]);
            have_initial = true;
        } else if (key == "trans") {
            expect_arity(line, 5, 5);
            if (!have_alphabet) fail(line, "'trans' before 'alphabet'");
            auto tok = line.words[2];
            auto it = std::find(a.alphabet.begin(), a.alphabet.end(), tok);
            if (it == a.alphabet.end()) fail(line, "symbol not in alphabet: '" + std::string(tok) + "'");
            Transition t{to_index(line, line.words[1]), static_cast<Symbol>(it - a.alphabet.begin()),
                         to_index(line, line.words[3]), to_index(line, line.words[4])};
            a.max_priority = std::max(a.max_priority, t.priority);
            a.transitions.push_back(t);
        } else if (key == "end") {
            expect_arity(line, 1, 1);
            ended = true;
        } else {
            fail(line, "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!ended) throw ParseError("missing 'end'");
    if (!have_alphabet || !have_states || !have_initial)
        throw ParseError("automaton needs 'alphabet', 'states' and 'initial'");

    validate(a);
    return canonical(std::move(a));
}

std::string format_automaton(const ParityAutomaton& input)
{
    ParityAutomaton a = canonical(input);
    std::ostringstream out;
    out << "pa " << a.name << "\n";
    out << "alphabet";
    for (const auto& tok : a.alphabet) out << ' ' << tok;
    out << "\nstates " << a.state_count << "\ninitial " << a.initial << "\n";
    for (const auto& t : a.transitions)
        out << "trans " << t.src << ' ' << a.alphabet[t.symbol] << ' ' << t.dst << ' ' << t.priority << "\n";
    out << "end\n";
    return out.str();
}

} // namespace hdsim
