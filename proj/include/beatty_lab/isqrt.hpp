#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>

#include "beatty_lab/natural.hpp"

namespace beatty_lab {

using u128 = unsigned __int128;

/// Unsigned integer types the exact routines are instantiated for. The
/// builtin widths are fast paths; callers are responsible for keeping
/// intermediates in range (see fast_path_limit).
template <class T>
concept exact_unsigned =
    std::same_as<T, std::uint64_t> || std::same_as<T, u128> || std::same_as<T, Natural>;

inline std::size_t bit_length(std::uint64_t v) { return static_cast<std::size_t>(std::bit_width(v)); }

inline std::size_t bit_length(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 64 + bit_length(hi);
  return bit_length(static_cast<std::uint64_t>(v));
}

inline bool is_even(std::uint64_t v) { return (v & 1U) == 0; }
inline bool is_even(u128 v) { return (v & 1U) == 0; }
inline bool is_even(const Natural& v) { return v.is_even(); }

/// Largest r with r*r <= m.
///
/// Integer Newton iteration started above the root at 2^ceil(bits/2); the
/// iterates decrease strictly until they reach the floor of the root. The
/// trailing correction loops are division-based so they cannot overflow
/// the builtin widths.
template <exact_unsigned T>
T isqrt(const T& m) {
  const T one{1};
  const T two{2};
  if (m < two) return m;

  T x = one << ((bit_length(m) + 1) / 2);
  for (;;) {
    T y = (x + m / x) >> 1;
    if (!(y < x)) break;
    x = y;
  }
  while (m / x < x) x = x - one;
  while (x + one <= m / (x + one)) x = x + one;
  return x;
}

}  // namespace beatty_lab
