#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beatty_lab/isqrt.hpp"
#include "beatty_lab/natural.hpp"
#include "beatty_lab/oracle.hpp"
#include "beatty_lab/parallel.hpp"

namespace beatty_lab {

/// Exclusive upper bound on n for which the conditions can be evaluated in
/// T without overflow. The widest intermediate is n^2 * p^2 < 2^(4b+1).
template <exact_unsigned T>
inline constexpr std::uint64_t fast_path_limit = 0;
template <>
inline constexpr std::uint64_t fast_path_limit<std::uint64_t> = std::uint64_t{1} << 15;
template <>
inline constexpr std::uint64_t fast_path_limit<u128> = std::uint64_t{1} << 31;

/// floor(n * sqrt(2)) = isqrt(2 n^2).
template <exact_unsigned T>
T beatty_sqrt2(const T& n) {
  return isqrt(T{2} * n * n);
}

/// floor(n / sqrt(2)) = isqrt(floor(n^2 / 2)), since floor(sqrt(x)) equals
/// isqrt(floor(x)) for every real x >= 0.
template <exact_unsigned T>
T beatty_inv_sqrt2(const T& n) {
  return isqrt((n * n) >> 1);
}

/// Truth values of the six parity conditions at one index, with the
/// witnesses p = floor(n sqrt 2) and q = floor(n / sqrt 2).
///
/// Each flag comes from an exact integer comparison:
///   a: p even
///   b: 2n^2 <= (2q+1)^2          ({n/sqrt2} <= 1/2)
///   c: 2n^2 <  (2q+1)^2          ({n/sqrt2} <  1/2)
///   d: isqrt(2 n^2 q^2) == isqrt(floor(n^2 p^2 / 2))
///   e: q == isqrt(n^2 - q^2)
///   f: n^2 < 2q^2 + 2q + 1       ({n/sqrt2} < sqrt(q^2+q+1/2) - q)
template <exact_unsigned T>
struct BasicConditionVector {
  T n{};
  T p{};
  T q{};
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  bool e = false;
  bool f = false;
  std::optional<std::string> sigma_decimal;

  bool unanimous() const { return a == b && b == c && c == d && d == e && e == f; }

  /// Flags in a..f order.
  std::array<bool, 6> flags() const { return {a, b, c, d, e, f}; }
};

using ConditionVector = BasicConditionVector<Natural>;

template <exact_unsigned T>
BasicConditionVector<T> evaluate_conditions(const T& n) {
  const T one{1};
  const T two{2};
  BasicConditionVector<T> cv;
  cv.n = n;
  const T n_sq = n * n;
  const T two_n_sq = two * n_sq;
  cv.p = isqrt(two_n_sq);
  cv.q = isqrt(n_sq >> 1);
  const T& p = cv.p;
  const T& q = cv.q;

  const T odd = two * q + one;
  const T odd_sq = odd * odd;

  cv.a = is_even(p);
  cv.b = two_n_sq <= odd_sq;
  cv.c = two_n_sq < odd_sq;
  cv.d = isqrt(two_n_sq * q * q) == isqrt((n_sq * p * p) >> 1);
  cv.e = q == isqrt(n_sq - q * q);
  cv.f = n_sq < two * q * q + two * q + one;
  return cv;
}

/// Exact condition vector at n. When with_sigma is set, sigma_decimal holds
/// a 12-digit approximation of {n / sqrt 2}; it plays no part in a..f.
inline ConditionVector condition_vector(const Natural& n, bool with_sigma = false) {
  ConditionVector cv = evaluate_conditions(n);
  if (with_sigma) cv.sigma_decimal = frac_n_over_sqrt2_decimal(n, 64, 12);
  return cv;
}

struct EquivalenceReport {
  Natural lo;
  Natural hi;
  std::vector<ConditionVector> counterexamples;
  std::uint64_t checked_count = 0;

  bool holds() const { return counterexamples.empty(); }
};

/// Evaluates the six conditions for every n in [lo, hi] and lists the
/// indices where they are not unanimous.
inline EquivalenceReport check_equivalence(const Natural& lo, const Natural& hi, unsigned jobs = 1) {
  if (hi < lo) throw std::invalid_argument("check_equivalence: lo must not exceed hi");
  const Natural span = hi - lo;
  if (!span.fits_u64() || span.to_u64() == UINT64_MAX) {
    throw std::length_error("check_equivalence: range too large");
  }
  const std::uint64_t count = span.to_u64() + 1;

  std::vector<std::vector<Natural>> hits;
  if (hi < Natural{fast_path_limit<u128>}) {
    const std::uint64_t base = lo.to_u64();
    hits = map_chunks(count, jobs, [base](std::uint64_t begin, std::uint64_t end) {
      std::vector<Natural> out;
      for (std::uint64_t i = begin; i < end; ++i) {
        if (!evaluate_conditions<u128>(base + i).unanimous()) out.emplace_back(base + i);
      }
      return out;
    });
  } else {
    hits = map_chunks(count, jobs, [&lo](std::uint64_t begin, std::uint64_t end) {
      std::vector<Natural> out;
      for (std::uint64_t i = begin; i < end; ++i) {
        const Natural n = lo + Natural{i};
        if (!evaluate_conditions(n).unanimous()) out.push_back(n);
      }
      return out;
    });
  }

  EquivalenceReport report{lo, hi, {}, count};
  for (const auto& chunk : hits) {
    for (const auto& n : chunk) report.counterexamples.push_back(condition_vector(n));
  }
  return report;
}

/// floor(n sqrt 2) - 2 floor(n / sqrt 2), which lies in {0, 1}. Only the
/// modulus 2 is supported: other moduli need irrational arithmetic.
inline Natural eq1_residue(const Natural& n, const Natural& m) {
  if (m != Natural{2}) throw std::invalid_argument("unsupported modulus");
  return beatty_sqrt2(n) - Natural{2} * beatty_inv_sqrt2(n);
}

/// Nonnegative rational in lowest terms.
class RationalValue {
 public:
  RationalValue(const Natural& numerator, const Natural& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("RationalValue: zero denominator");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), numerator.mpz().get_mpz_t(), denominator.mpz().get_mpz_t());
    num_ = Natural::from_mpz(numerator.mpz() / g);
    den_ = Natural::from_mpz(denominator.mpz() / g);
  }

  /// Parses "a" or "a/b" with decimal naturals a, b.
  static RationalValue parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {Natural::from_decimal(text), Natural{1}};
    return {Natural::from_decimal(text.substr(0, slash)), Natural::from_decimal(text.substr(slash + 1))};
  }

  const Natural& numerator() const { return num_; }
  const Natural& denominator() const { return den_; }

  std::string to_string() const {
    if (den_ == Natural{1}) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
  }

  friend bool operator==(const RationalValue&, const RationalValue&) = default;

 private:
  Natural num_;
  Natural den_{1};
};

/// Decides sqrt(x^2 + x + 1/2) - x > 1/2 for x = a/b >= 0.
/// Moving x across and squaring gives (2x+1)^2 < 4x^2 + 4x + 2; multiplying
/// by b^2 gives (2a+b)^2 < 4a^2 + 4ab + 2b^2.
inline bool lemma1_holds(const RationalValue& x) {
  const Natural& a = x.numerator();
  const Natural& b = x.denominator();
  const Natural lhs_root = Natural{2} * a + b;
  const Natural lhs = lhs_root * lhs_root;
  const Natural rhs = Natural{4} * a * a + Natural{4} * a * b + Natural{2} * b * b;
  return lhs < rhs;
}

/// floor(n (2 + sqrt 2)) = 2n + floor(n sqrt 2), the complementary Beatty
/// sequence of floor(n sqrt 2).
inline Natural complement_partner(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("complement_partner: n must be at least 1");
  return Natural{2} * n + beatty_sqrt2(n);
}

struct ComplementarityReport {
  Natural limit;
  bool covered = false;
  std::vector<Natural> duplicates;
  std::vector<Natural> gaps;
  std::uint64_t beatty_terms = 0;
  std::uint64_t partner_terms = 0;
};

inline constexpr std::uint64_t kComplementarityMaxLimit = std::uint64_t{1} << 32;

/// Checks that floor(n sqrt 2) and floor(n (2 + sqrt 2)), n >= 1, together
/// hit every value in [1, limit] exactly once.
inline ComplementarityReport complementarity_check(const Natural& limit, unsigned jobs = 1) {
  if (limit.is_zero()) throw std::invalid_argument("complementarity_check: limit must be at least 1");
  if (Natural{kComplementarityMaxLimit} < limit) {
    throw std::length_error("complementarity_check: limit too large");
  }
  const std::uint64_t lim = limit.to_u64();
  auto beatty = [](std::uint64_t n) { return static_cast<std::uint64_t>(beatty_sqrt2<u128>(n)); };
  auto partner = [&](std::uint64_t n) { return 2 * n + beatty(n); };

  // Number of n >= 1 whose term is <= lim. The estimate only seeds the
  // search; the loops pin the exact boundary of each monotone sequence.
  auto term_count = [lim](auto term, std::uint64_t estimate) {
    std::uint64_t k = estimate;
    while (k > 0 && term(k) > lim) --k;
    while (term(k + 1) <= lim) ++k;
    return k;
  };
  const std::uint64_t nb = term_count(beatty, static_cast<std::uint64_t>(beatty_inv_sqrt2<u128>(lim)));
  const std::uint64_t ns = term_count(partner, lim - nb);

  auto fill = [&](auto term, std::uint64_t count) {
    auto parts = map_chunks(count, jobs, [&term](std::uint64_t begin, std::uint64_t end) {
      std::vector<std::uint64_t> out;
      out.reserve(end - begin);
      for (std::uint64_t i = begin; i < end; ++i) out.push_back(term(i + 1));
      return out;
    });
    return parts;
  };

  std::vector<std::uint8_t> hits(lim + 1, 0);
  auto mark = [&hits](const std::vector<std::vector<std::uint64_t>>& parts) {
    for (const auto& part : parts) {
      for (std::uint64_t v : part) {
        if (hits[v] < 2) ++hits[v];
      }
    }
  };
  mark(fill(beatty, nb));
  mark(fill(partner, ns));

  ComplementarityReport report;
  report.limit = limit;
  report.beatty_terms = nb;
  report.partner_terms = ns;
  for (std::uint64_t v = 1; v <= lim; ++v) {
    if (hits[v] == 0) report.gaps.emplace_back(v);
    if (hits[v] > 1) report.duplicates.emplace_back(v);
  }
  report.covered = report.gaps.empty() && report.duplicates.empty();
  return report;
}

}  // namespace beatty_lab
