#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace z4 {

/// An element of the cyclic group Z/N, always held in [0, N).
template <int N>
class Residue {
    static_assert(N > 0);

public:
    constexpr Residue() = default;
    constexpr Residue(long long v) : value_(static_cast<std::uint8_t>(((v % N) + N) % N)) {}  // NOLINT

    [[nodiscard]] constexpr int value() const noexcept { return value_; }

    constexpr Residue& operator+=(Residue o) noexcept {
        value_ = static_cast<std::uint8_t>((value_ + o.value_) % N);
        return *this;
    }
    constexpr Residue& operator-=(Residue o) noexcept {
        value_ = static_cast<std::uint8_t>((value_ + N - o.value_) % N);
        return *this;
    }

    friend constexpr Residue operator+(Residue a, Residue b) noexcept { return a += b; }
    friend constexpr Residue operator-(Residue a, Residue b) noexcept { return a -= b; }
    friend constexpr Residue operator-(Residue a) noexcept { return Residue{} - a; }
    friend constexpr Residue operator*(long long k, Residue a) noexcept { return Residue(k * a.value_); }

    friend constexpr bool operator==(Residue, Residue) = default;
    friend constexpr auto operator<=>(Residue, Residue) = default;

    friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value(); }

private:
    std::uint8_t value_ = 0;
};

using Z4 = Residue<4>;
using Z8 = Residue<8>;

/// The doubling map Z/4 -> Z/8, which is injective.
constexpr Z8 doubled(Z4 v) noexcept { return Z8(2 * v.value()); }

}  // namespace z4
