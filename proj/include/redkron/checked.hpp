#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace redkron {

using int128 = __int128;

template <typename T>
concept CheckedInteger = std::same_as<T, std::int64_t> || std::same_as<T, int128>;

template <CheckedInteger T>
T checked_add(T a, T b)
{
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in addition");
    return r;
}

template <CheckedInteger T>
T checked_mul(T a, T b)
{
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in multiplication");
    return r;
}

/// Exact division; throws when `den` does not divide `num`.
template <CheckedInteger T>
T exact_div(T num, T den)
{
    if (den == 0 || num % den != 0)
        throw ArithmeticError("non-integral quotient");
    return num / den;
}

inline std::int64_t narrow_to_int64(int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw ArithmeticError("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

} // namespace redkron
