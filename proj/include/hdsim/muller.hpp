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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace hdsim {

/// Fixed-universe bitset over colour indices.
class ColorSet {
  public:
    ColorSet() = default;
    explicit ColorSet(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static ColorSet full(int universe);
    static ColorSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return size_; }
    bool test(int c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }
    void set(int c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void reset(int c) { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

    int count() const;
    bool empty() const;
    bool subset_of(const ColorSet& other) const;
    std::vector<int> members() const;
    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const ColorSet&) const = default;
    auto operator<=>(const ColorSet& o) const
    {
        // most significant word first so that masks compare numerically
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
        return std::strong_ordering::equal;
    }

    size_t hash() const;

  private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ColorSetHash {
    size_t operator()(const ColorSet& s) const { return s.hash(); }
};

/**
 * Muller condition (C, F) over tuple-valued colours.
 *
 * F is held in one of two exact forms:
 *  - an explicit family of subsets (only for |C| <= 64), or
 *  - a rule over the componentwise maxima of a set, for conditions such as
 *    "max of first components even implies max of second components even".
 *    Membership of a set then depends only on its vector of maxima.
 */
class MullerCondition {
  public:
    using Color = std::vector<int>;
    using MaxRule = std::function<bool(std::span<const int>)>;

    static MullerCondition explicit_family(std::vector<Color> colors, std::vector<ColorSet> family);
    static MullerCondition max_rule(std::vector<Color> colors, MaxRule rule, std::string description);

    const std::vector<Color>& colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    bool is_max_rule() const { return static_cast<bool>(rule_); }
    const std::string& description() const { return description_; }

    /// Exact membership of a nonempty set; the empty set is never in F.
    bool contains(const ColorSet& s) const;

    /// Index of a colour tuple, or -1.
    int index_of(const Color& c) const;

  private:
    std::vector<Color> colors_;
    std::unordered_set<ColorSet, ColorSetHash> family_;
    MaxRule rule_;
    std::string description_;
};

/// Colours (p1, p2) with p1 in {1,2} and p2 in [0, d2]; F: max|1 even implies max|2 even.
MullerCondition containment_condition(int d2);

/// 2-D parity winning condition restricted to the given (p1, p2) colours.
MullerCondition implication_condition(const std::vector<std::pair<int, int>>& colors);

/// 2-token condition over (eve, adam1, adam2) priority triples.
MullerCondition token2_condition(const std::vector<std::array<int, 3>>& colors);

/// Same condition with F enumerated subset by subset (|C| <= 24).
MullerCondition to_explicit(const MullerCondition& c);

} // namespace hdsim
