#pragma once

// Def 2.1 built from scratch over bitmasks: for a node X, a flipped subset Y
// is a child iff no flipped Z sits strictly between Y and X. Maximality is
// decided with a superset-OR sweep over all submasks of X.

#include <cstdint>
#include <vector>

#include "hdsim/muller.hpp"

namespace hdsim::testing {

struct OracleNode {
    std::uint64_t label = 0;
    bool in_family = false;
    std::vector<OracleNode> children;
};

inline std::vector<std::uint64_t> oracle_children(const MullerCondition& c, std::uint64_t x, bool x_in)
{
    std::vector<int> bits;
    for (int i = 0; i < 64; ++i)
        if (x >> i & 1) bits.push_back(i);
    const int k = static_cast<int>(bits.size());
    auto expand = [&](std::uint32_t local) {
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i)
            if (local >> i & 1) m |= std::uint64_t{1} << bits[i];
        return m;
    };
    const std::uint32_t full = (1u << k) - 1;
    std::vector<char> flipped(full + 1, 0), above(full + 1, 0);
    for (std::uint32_t y = 1; y < full; ++y)
        flipped[y] = c.contains(ColorSet::from_mask(c.size(), expand(y))) != x_in;
    // above[y]: some flipped proper subset of X contains y (y itself included)
    for (std::uint32_t y = 0; y <= full; ++y) above[y] = flipped[y];
    for (int i = 0; i < k; ++i)
        for (std::uint32_t y = full; y-- > 0;)
            if (!(y >> i & 1) && above[y | 1u << i]) above[y] = 1;
    std::vector<std::uint64_t> out;
    for (std::uint32_t y = 1; y < full; ++y) {
        if (!flipped[y]) continue;
        bool strict = false;
        for (int i = 0; i < k && !strict; ++i)
            if (!(y >> i & 1) && (y | 1u << i) != full && above[y | 1u << i]) strict = true;
        if (!strict) out.push_back(expand(y));
    }
    return out; // ascending by construction
}

inline OracleNode oracle_tree(const MullerCondition& c, std::uint64_t x)
{
    OracleNode n;
    n.label = x;
    n.in_family = c.contains(ColorSet::from_mask(c.size(), x));
    for (auto y : oracle_children(c, x, n.in_family)) n.children.push_back(oracle_tree(c, y));
    return n;
}

inline int oracle_leaves(const OracleNode& n)
{
    if (n.children.empty()) return 1;
    int total = 0;
    for (const auto& ch : n.children) total += oracle_leaves(ch);
    return total;
}

inline int oracle_height(const OracleNode& n)
{
    int h = 0;
    for (const auto& ch : n.children) h = std::max(h, 1 + oracle_height(ch));
    return h;
}

} // namespace hdsim::testing
