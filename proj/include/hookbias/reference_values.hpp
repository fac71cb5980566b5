#pragma once

// Published reference values used as golden data by the table command, the
// closed-form checks and the b_{3,2} - b_{3,1} scan.

#include <array>
#include <cstdint>

namespace hookbias::reference {

/// p_(k)(n) for 1 <= k, n <= 10; row k-1, column n-1.
inline constexpr std::array<std::array<std::int64_t, 10>, 10> kOrdinaryTable = {{
    {1, 2, 4, 7, 12, 19, 30, 45, 67, 97},
    {0, 2, 2, 6, 8, 16, 22, 38, 52, 82},
    {0, 0, 3, 3, 6, 12, 18, 27, 45, 63},
    {0, 0, 0, 4, 4, 8, 12, 24, 32, 52},
    {0, 0, 0, 0, 5, 5, 10, 15, 25, 40},
    {0, 0, 0, 0, 0, 6, 6, 12, 18, 30},
    {0, 0, 0, 0, 0, 0, 7, 7, 14, 21},
    {0, 0, 0, 0, 0, 0, 0, 8, 8, 16},
    {0, 0, 0, 0, 0, 0, 0, 0, 9, 9},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 10},
}};

/// b_{2,k}(n) for 1 <= k, n <= 10; row k-1, column n-1.
inline constexpr std::array<std::array<std::int64_t, 10>, 10> kTwoRegularTable = {{
    {1, 1, 2, 3, 4, 6, 8, 11, 14, 19},
    {0, 1, 2, 2, 4, 6, 8, 11, 15, 20},
    {0, 0, 2, 1, 2, 5, 5, 7, 11, 15},
    {0, 0, 0, 2, 2, 3, 5, 5, 10, 13},
    {0, 0, 0, 0, 3, 1, 3, 5, 6, 10},
    {0, 0, 0, 0, 0, 3, 2, 4, 5, 7},
    {0, 0, 0, 0, 0, 0, 4, 1, 4, 5},
    {0, 0, 0, 0, 0, 0, 0, 4, 2, 5},
    {0, 0, 0, 0, 0, 0, 0, 0, 5, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
}};

/// Coefficients of sum (b_{3,2}(n) - b_{3,1}(n)) q^n for 0 <= n <= 70 as
/// published (exponents missing from the published expansion are 0).
inline constexpr std::array<std::int64_t, 71> kThreeRegularDiffSeries = {
    0,     -1,    0,     -2,    0,     -3,     -1,     -4,    -2,    -6,    -3,    -9,    -4,    -12,   -6,
    -15,   -8,    -19,   -9,    -22,   -9,     -24,    -7,    -23,   0,     -17,   14,    -2,    40,    27,
    84,    77,    156,   159,   267,   289,    435,    486,   685,   778,   1049,  1202,  1570,  1809,  2307,
    2665,  3335,  3859,  4756,  5504,  6701,   7750,   9341,  10791, 12895, 14877, 17646, 20326, 23956, 27548,
    32286, 37059, 43219, 49518, 57494, 65749,  76038,  86796, 100016, 113959, 130885,
};

/// Published special values of b_{t,k}(k+1) for k <= 3. `t_max` of 0 means
/// "every t >= t_min".
struct SpecialValue {
    int t_min;
    int t_max;
    int k;
    std::int64_t value;
};

inline constexpr std::array<SpecialValue, 6> kPublishedSpecialValues = {{
    {3, 0, 1, 2},  // b_{t,1}(2) = 2, t >= 3
    {3, 3, 2, 1},  // b_{3,2}(3) = 1
    {4, 0, 2, 2},  // b_{t,2}(3) = 2, t > 3
    {3, 3, 3, 2},  // b_{3,3}(4) = 2 (enumeration gives 3)
    {4, 4, 3, 2},  // b_{4,3}(4) = 2
    {5, 0, 3, 3},  // b_{t,3}(4) = 3, t > 4
}};

}  // namespace hookbias::reference
