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

// Line-oriented tokenizer shared by the .pa, .pg and .dnf readers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hdsim/errors.hpp"

namespace hdsim::detail {

struct Line {
    int number = 0;
    std::vector<std::string_view> words;

    std::string_view keyword() const { return words.empty() ? std::string_view{} : words[0]; }
};

inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;

        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.words.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.words.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] inline void fail(const Line& line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

inline long long to_integer(const Line& line, std::string_view word)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        fail(line, "expected integer, got '" + std::string(word) + "'");
    return value;
}

inline int to_index(const Line& line, std::string_view word)
{
    long long v = to_integer(line, word);
    if (v < 0 || v > 1'000'000'000) fail(line, "index out of range: " + std::string(word));
    return static_cast<int>(v);
}

inline void expect_arity(const Line& line, size_t lo, size_t hi)
{
    if (line.words.size() < lo || line.words.size() > hi)
        fail(line, "wrong number of fields for '" + std::string(line.keyword()) + "'");
}

} // namespace hdsim::detail
