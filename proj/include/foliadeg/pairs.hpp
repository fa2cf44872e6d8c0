#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace foliadeg {

/// Unordered pair {i,j} of coordinate indices, stored 0-based with i < j.
struct IndexPair {
    int i = 0;
    int j = 1;

    IndexPair complement() const;
    /// Position in canonical order {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
    std::size_t index() const;
    bool operator==(const IndexPair&) const = default;
};

inline constexpr std::array<IndexPair, 6> kCanonicalPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Builds a pair from two distinct 0-based indices in either order.
IndexPair make_pair_of(int a, int b);

/// 1-based rendering, e.g. "{3,4}".
std::string to_string(const IndexPair& p);

}  // namespace foliadeg
