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

#include "hdsim/muller.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hdsim/errors.hpp"

namespace hdsim {

ColorSet ColorSet::full(int universe)
{
    ColorSet s(universe);
    for (int c = 0; c < universe; ++c) s.set(c);
    return s;
}

ColorSet ColorSet::from_mask(int universe, std::uint64_t mask)
{
    ColorSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

int ColorSet::count() const
{
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

bool ColorSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ColorSet::subset_of(const ColorSet& other) const
{
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<int> ColorSet::members() const
{
    std::vector<int> out;
    for (size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64) + bit);
            w &= w - 1;
        }
    }
    return out;
}

size_t ColorSet::hash() const
{
    size_t h = static_cast<size_t>(size_) * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

void check_colors(const std::vector<MullerCondition::Color>& colors)
{
    if (colors.empty()) throw ValidationError("Muller condition needs at least one colour");
    std::set<MullerCondition::Color> seen(colors.begin(), colors.end());
    if (seen.size() != colors.size()) throw ValidationError("duplicate colour in Muller condition");
}

bool even(int p) { return p % 2 == 0; }

} // namespace

MullerCondition MullerCondition::explicit_family(std::vector<Color> colors, std::vector<ColorSet> family)
{
    check_colors(colors);
    if (colors.size() > 64) throw ResourceError("explicit Muller families support at most 64 colours");
    MullerCondition c;
    c.colors_ = std::move(colors);
    for (auto& s : family) {
        if (s.universe() != c.size()) throw ValidationError("family member over a different colour set");
        if (!s.empty()) c.family_.insert(std::move(s));
    }
    c.description_ = "explicit";
    return c;
}

MullerCondition MullerCondition::max_rule(std::vector<Color> colors, MaxRule rule, std::string description)
{
    check_colors(colors);
    const size_t arity = colors.front().size();
    for (const auto& col : colors)
        if (col.size() != arity) throw ValidationError("colour tuples of different arity");
    MullerCondition c;
    c.colors_ = std::move(colors);
    c.rule_ = std::move(rule);
    c.description_ = std::move(description);
    return c;
}

bool MullerCondition::contains(const ColorSet& s) const
{
    if (s.empty()) return false;
    if (!rule_) return family_.count(s) != 0;

    const size_t arity = colors_.front().size();
    std::vector<int> maxima(arity, -1);
    for (int c : s.members())
        for (size_t k = 0; k < arity; ++k) maxima[k] = std::max(maxima[k], colors_[c][k]);
    return rule_(maxima);
}

int MullerCondition::index_of(const Color& c) const
{
    auto it = std::find(colors_.begin(), colors_.end(), c);
    return it == colors_.end() ? -1 : static_cast<int>(it - colors_.begin());
}

MullerCondition containment_condition(int d2)
{
    if (d2 < 0) throw ValidationError("d2 must be nonnegative");
    std::vector<MullerCondition::Color> colors;
    for (int p1 = 1; p1 <= 2; ++p1)
        for (int p2 = 0; p2 <= d2; ++p2) colors.push_back({p1, p2});
    return MullerCondition::max_rule(
        std::move(colors), [](std::span<const int> m) { return !even(m[0]) || even(m[1]); },
        "containment d2=" + std::to_string(d2));
}

MullerCondition implication_condition(const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<MullerCondition::Color> colors;
    for (auto [p1, p2] : pairs) colors.push_back({p1, p2});
    return MullerCondition::max_rule(
        std::move(colors), [](std::span<const int> m) { return !even(m[0]) || even(m[1]); }, "implication");
}

MullerCondition token2_condition(const std::vector<std::array<int, 3>>& triples)
{
    std::vector<MullerCondition::Color> colors;
    for (const auto& t : triples) colors.push_back({t[0], t[1], t[2]});
    return MullerCondition::max_rule(
        std::move(colors), [](std::span<const int> m) { return !(even(m[1]) || even(m[2])) || even(m[0]); },
        "token2");
}

MullerCondition to_explicit(const MullerCondition& c)
{
    if (c.size() > 24) throw ResourceError("too many colours to enumerate the Muller family");
    const int n = c.size();
    std::vector<ColorSet> family;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto s = ColorSet::from_mask(n, mask);
        if (c.contains(s)) family.push_back(std::move(s));
    }
    return MullerCondition::explicit_family(c.colors(), std::move(family));
}

} // namespace hdsim
