#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zadual {

// Exact element of (1/2)Z, stored as twice its value. All exponent
// arithmetic in the library goes through this type; no floating point.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(int numerator_over_2) { return HalfInt(numerator_over_2); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    // Integer value; caller must know is_integer().
    constexpr int as_int() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt operator+(int n) const { return HalfInt(twice + 2 * n); }
    constexpr HalfInt operator-(int n) const { return HalfInt(twice - 2 * n); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr bool same_class(HalfInt o) const { return (twice - o.twice) % 2 == 0; }

    // x - y as an integer; requires same_class.
    constexpr int int_diff(HalfInt y) const { return (twice - y.twice) / 2; }

    std::string str() const {
        if (is_integer()) return std::to_string(as_int());
        return std::to_string(twice) + "/2";
    }
};

constexpr HalfInt operator+(int n, HalfInt x) { return x + n; }

inline bool is_positive(HalfInt x) { return x.twice > 0; }
inline bool is_negative(HalfInt x) { return x.twice < 0; }

} // namespace zadual
