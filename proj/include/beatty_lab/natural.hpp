#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace beatty_lab {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over a GMP integer that refuses to go negative. Every
/// operation that could leave the naturals (subtraction below zero,
/// division by zero, parsing a sign) throws instead.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  static Natural from_mpz(mpz_class v) {
    if (sgn(v) < 0) throw std::domain_error("Natural: negative value");
    Natural r;
    r.v_ = std::move(v);
    return r;
  }

  /// Parses a run of ASCII digits. Leading zeros are accepted; signs,
  /// whitespace and empty input are not.
  static Natural from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Natural: empty decimal string");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Natural: invalid decimal string '" + std::string(text) + "'");
      }
    }
    Natural r;
    r.v_.set_str(std::string(text), 10);
    return r;
  }

  std::string to_decimal() const { return v_.get_str(10); }

  const mpz_class& mpz() const { return v_; }

  std::size_t bit_length() const { return sgn(v_) == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural: value does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_.get_ui());
  }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator-=(const Natural& o) {
    if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  Natural& operator/=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
  }
  Natural& operator%=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
  }
  Natural& operator<<=(std::size_t bits) {
    mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), bits);
    return *this;
  }
  Natural& operator>>=(std::size_t bits) {
    mpz_fdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), bits);
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
  friend Natural operator<<(Natural a, std::size_t bits) { return a <<= bits; }
  friend Natural operator>>(Natural a, std::size_t bits) { return a >>= bits; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_decimal(); }

 private:
  mpz_class v_;
};

inline std::size_t bit_length(const Natural& n) { return n.bit_length(); }

}  // namespace beatty_lab
