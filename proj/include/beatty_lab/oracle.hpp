#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

#include "beatty_lab/natural.hpp"

namespace beatty_lab {

/// Raised when a fixed-point evaluation cannot certify its own answer at
/// the requested precision. Retry with more guard bits.
class precision_insufficient : public std::runtime_error {
 public:
  explicit precision_insufficient(std::size_t guard_bits)
      : std::runtime_error("precision insufficient at " + std::to_string(guard_bits) + " guard bits"),
        guard_bits_(guard_bits) {}

  std::size_t guard_bits() const { return guard_bits_; }

 private:
  std::size_t guard_bits_;
};

inline constexpr std::size_t kOracleMinGuardBits = 8;
inline constexpr std::size_t kOracleStartGuardBits = 32;
inline constexpr std::size_t kOracleMaxGuardBits = 1024;

namespace detail {

// floor(sqrt(2) * 2^frac_bits), using GMP's own root rather than our isqrt
// so the oracle stays an independent route.
inline mpz_class sqrt2_fixed(std::size_t frac_bits) {
  mpz_class radicand{2};
  mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * frac_bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return root;
}

}  // namespace detail

/// floor(n * sqrt(2)) by fixed-point evaluation of sqrt(2) to
/// bit_length(n) + guard_bits fractional bits. The candidate k is accepted
/// only if k^2 <= 2n^2 < (k+1)^2 holds; otherwise precision_insufficient is
/// thrown. Test-side cross-check only.
inline Natural floor_n_sqrt2_oracle(const Natural& n, std::size_t guard_bits) {
  if (guard_bits < kOracleMinGuardBits) {
    throw std::invalid_argument("floor_n_sqrt2_oracle: guard_bits must be at least 8");
  }
  const std::size_t frac_bits = n.bit_length() + guard_bits;
  mpz_class k = n.mpz() * detail::sqrt2_fixed(frac_bits);
  mpz_fdiv_q_2exp(k.get_mpz_t(), k.get_mpz_t(), frac_bits);

  const mpz_class two_n_sq = 2 * n.mpz() * n.mpz();
  const mpz_class k1 = k + 1;
  if (!(k * k <= two_n_sq && two_n_sq < k1 * k1)) throw precision_insufficient(guard_bits);
  return Natural::from_mpz(std::move(k));
}

/// Retrying form: 32 guard bits, doubled on failure, capped at 1024.
inline Natural floor_n_sqrt2_oracle(const Natural& n) {
  for (std::size_t g = kOracleStartGuardBits; g <= kOracleMaxGuardBits; g *= 2) {
    try {
      return floor_n_sqrt2_oracle(n, g);
    } catch (const precision_insufficient&) {
    }
  }
  throw precision_insufficient(kOracleMaxGuardBits);
}

/// Decimal approximation of the fractional part of n / sqrt(2), truncated
/// to `digits` places. Display only; never feeds a decision.
inline std::string frac_n_over_sqrt2_decimal(const Natural& n, std::size_t guard_bits = 64,
                                             std::size_t digits = 12) {
  const std::size_t frac_bits = n.bit_length() + guard_bits + 1;
  // n / sqrt(2) = n * sqrt(2) / 2
  mpz_class t = n.mpz() * detail::sqrt2_fixed(frac_bits);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);

  mpz_class frac;
  mpz_fdiv_r_2exp(frac.get_mpz_t(), t.get_mpz_t(), frac_bits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  frac *= scale;
  mpz_fdiv_q_2exp(frac.get_mpz_t(), frac.get_mpz_t(), frac_bits);

  std::string body = frac.get_str(10);
  if (body.size() < digits) body.insert(0, digits - body.size(), '0');
  return "0." + body;
}

}  // namespace beatty_lab
