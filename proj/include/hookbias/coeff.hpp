#pragma once

// Exact integer coefficients with overflow detection.
//
// Every series coefficient in the library goes through checked_add /
// checked_mul. The default coefficient type is a signed 128-bit integer,
// which holds p(n) comfortably past n = 1000; narrower types can be used
// and will throw std::overflow_error instead of wrapping.

#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hookbias {

__extension__ using Coeff = __int128;

template <typename T>
concept CoefficientType = std::signed_integral<T> || std::same_as<T, Coeff>;

template <CoefficientType T>
constexpr T checked_add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("series coefficient overflow in addition");
    }
    return r;
}

template <CoefficientType T>
constexpr T checked_sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("series coefficient overflow in subtraction");
    }
    return r;
}

template <CoefficientType T>
constexpr T checked_mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("series coefficient overflow in multiplication");
    }
    return r;
}

inline std::string to_string(Coeff v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Work in the negative range so that the minimum value is representable.
    std::string digits;
    Coeff x = neg ? v : -v;
    while (x != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

/// Parses an optionally signed decimal integer; throws std::invalid_argument
/// on malformed input and std::overflow_error when it does not fit.
inline Coeff parse_coeff(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("malformed integer literal");
    Coeff acc = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
        }
        acc = checked_sub(checked_mul<Coeff>(acc, 10), static_cast<Coeff>(c - '0'));
    }
    return neg ? acc : checked_mul<Coeff>(acc, -1);
}

inline bool fits_int64(Coeff v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace hookbias
