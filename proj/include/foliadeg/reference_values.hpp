#pragma once

// Published values for the worked example d = 2 with weights (0,2,7,10). `foliadeg verify` recomputes
// them from scratch; a mismatch names the entry below that failed.

#include <array>
#include <string_view>
#include <utility>

namespace foliadeg::reference {

inline constexpr int kDegree = 2;
inline constexpr std::array<long, 4> kWeights{0, 2, 7, 10};

// Fiber of M_2 at the fixed point x4 dx3 - x3 dx4 (pair {3,4}, 1-based), in the order printed with the
// example: 2w1-w2, w1, w2, 2w2-w1, 2w4-w3, w4, w3, 2w3-w4, w2-w3+w4, w2, w2+w3-w4, 2w2-w3, 2w2-w4,
// w1-w3+w4, w1, w1+w3-w4, w1+w2-w3, w1+w2-w4, 2w1-w3, 2w1-w4.
inline constexpr std::array<int, 2> kFiberPair{3, 4};
inline constexpr std::array<long, 20> kFiberWeights{-2, 0, 2, 4, 13, 10, 7, 4, 5, 2,
                                                    -1, -3, -6, 3, 0, -3, -5, -8, -7, -10};
// Fifth elementary symmetric function of kFiberWeights.
inline constexpr std::string_view kFiberE5 = "105534";

// Signed contribution of each fixed point to the localization sum, keyed by 1-based pair. The published
// sum lists them in the order {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}.
inline constexpr std::array<std::pair<std::array<int, 2>, std::string_view>, 6> kContributions{{
    {{1, 2}, "833800359/42000"},
    {{1, 3}, "-38740434/1500"},
    {{2, 3}, "-4199874/336"},
    {{1, 4}, "7716777/336"},
    {{2, 4}, "-3398841/1500"},
    {{3, 4}, "-105534/42000"},
}};

inline constexpr std::string_view kTotal = "2224";

}  // namespace foliadeg::reference
