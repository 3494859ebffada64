#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beatty_lab/beatty.hpp"
#include "beatty_lab/isqrt.hpp"
#include "beatty_lab/natural.hpp"
#include "beatty_lab/parallel.hpp"

namespace beatty_lab {

/// Finite 0/1 sequence; bit i sits at index origin_index + i.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::vector<std::uint8_t> bits, std::int64_t origin_index = 1)
      : bits_(std::move(bits)), origin_(origin_index) {
    for (auto b : bits_) {
      if (b > 1) throw std::invalid_argument("BitStream: element is not 0 or 1");
    }
  }

  /// Parses a string of '0'/'1' characters; whitespace and commas are skipped.
  static BitStream parse(std::string_view text, std::int64_t origin_index = 1) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
      if (c == '0' || c == '1') {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
        throw std::invalid_argument(std::string("BitStream: unexpected character '") + c + "'");
      }
    }
    return BitStream(std::move(bits), origin_index);
  }

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::int64_t origin_index() const { return origin_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::int64_t origin_ = 1;
};

enum class SequenceId {
  parity_a083035,  // floor(n sqrt 2) mod 2, n >= 1
  cond_d_a090892,  // indices satisfying condition (d), from n = 0
  cond_b_a120752,  // indices satisfying condition (b), from n = 1
};

inline std::string_view to_string(SequenceId id) {
  switch (id) {
    case SequenceId::parity_a083035: return "A083035";
    case SequenceId::cond_d_a090892: return "A090892";
    case SequenceId::cond_b_a120752: return "A120752";
  }
  return "?";
}

/// Accepts the A-number in either case, with or without the leading 'A'.
inline SequenceId parse_sequence_id(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (!s.empty() && s.front() == 'a') s.erase(0, 1);
  if (s == "083035") return SequenceId::parity_a083035;
  if (s == "090892") return SequenceId::cond_d_a090892;
  if (s == "120752") return SequenceId::cond_b_a120752;
  throw std::invalid_argument("unknown sequence id '" + std::string(text) + "'");
}

inline std::uint64_t natural_offset(SequenceId id) {
  return id == SequenceId::cond_d_a090892 ? 0 : 1;
}

struct SequenceSpec {
  SequenceId id = SequenceId::parity_a083035;
  Natural start_index{1};

  static SequenceSpec natural(SequenceId id) { return {id, Natural{natural_offset(id)}}; }

  static SequenceSpec starting_at(SequenceId id, const Natural& start) {
    if (start < Natural{natural_offset(id)}) {
      throw std::invalid_argument("SequenceSpec: start index below the natural offset of " +
                                  std::string(to_string(id)));
    }
    return {id, start};
  }
};

namespace detail {

inline bool parity_bit_u128(std::uint64_t n) { return !is_even(beatty_sqrt2<u128>(n)); }

inline bool satisfies(SequenceId id, std::uint64_t n) {
  const auto cv = evaluate_conditions<u128>(n);
  return id == SequenceId::cond_d_a090892 ? cv.d : cv.b;
}

inline bool satisfies(SequenceId id, const Natural& n) {
  const auto cv = evaluate_conditions(n);
  return id == SequenceId::cond_d_a090892 ? cv.d : cv.b;
}

}  // namespace detail

/// Parities of floor(n sqrt 2) for n = start .. start + count - 1.
inline BitStream parity_bits_from(const Natural& start, std::uint64_t count, unsigned jobs = 1) {
  if (!start.fits_u64() || start.to_u64() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw std::overflow_error("parity_bits_from: start index exceeds the BitStream origin range");
  }
  const Natural end = start + Natural{count};
  std::vector<std::vector<std::uint8_t>> parts;
  if (end <= Natural{std::uint64_t{1} << 62}) {
    const std::uint64_t base = start.to_u64();
    parts = map_chunks(count, jobs, [base](std::uint64_t b, std::uint64_t e) {
      std::vector<std::uint8_t> out;
      out.reserve(e - b);
      for (std::uint64_t i = b; i < e; ++i) out.push_back(detail::parity_bit_u128(base + i) ? 1 : 0);
      return out;
    });
  } else {
    parts = map_chunks(count, jobs, [&start](std::uint64_t b, std::uint64_t e) {
      std::vector<std::uint8_t> out;
      for (std::uint64_t i = b; i < e; ++i) {
        out.push_back(beatty_sqrt2(start + Natural{i}).is_even() ? 0 : 1);
      }
      return out;
    });
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  for (const auto& p : parts) bits.insert(bits.end(), p.begin(), p.end());
  return BitStream(std::move(bits), static_cast<std::int64_t>(start.to_u64()));
}

/// The parity sequence from n = 1: bit n is floor(n sqrt 2) mod 2.
inline BitStream parity_bits(std::uint64_t count, unsigned jobs = 1) {
  return parity_bits_from(Natural{1}, count, jobs);
}

/// First `count` indices n >= spec.start_index satisfying the spec's
/// condition, by linear scan with exact evaluation.
inline std::vector<Natural> satisfying_indices(const SequenceSpec& spec, std::uint64_t count,
                                               unsigned jobs = 1) {
  if (spec.id == SequenceId::parity_a083035) {
    throw std::invalid_argument("satisfying_indices: the parity sequence is not condition-defined");
  }
  std::vector<Natural> out;
  out.reserve(count);
  Natural next = spec.start_index;
  // Roughly half of all indices satisfy either condition.
  std::uint64_t window = std::max<std::uint64_t>(2 * count + 64, 1024);

  while (out.size() < count) {
    const Natural window_end = next + Natural{window};
    std::vector<std::vector<Natural>> parts;
    if (window_end < Natural{fast_path_limit<u128>}) {
      const std::uint64_t base = next.to_u64();
      parts = map_chunks(window, jobs, [base, id = spec.id](std::uint64_t b, std::uint64_t e) {
        std::vector<Natural> hits;
        for (std::uint64_t i = b; i < e; ++i) {
          if (detail::satisfies(id, base + i)) hits.emplace_back(base + i);
        }
        return hits;
      });
    } else {
      parts = map_chunks(window, jobs, [&next, id = spec.id](std::uint64_t b, std::uint64_t e) {
        std::vector<Natural> hits;
        for (std::uint64_t i = b; i < e; ++i) {
          Natural n = next + Natural{i};
          if (detail::satisfies(id, n)) hits.push_back(std::move(n));
        }
        return hits;
      });
    }
    for (auto& part : parts) {
      for (auto& n : part) {
        if (out.size() == count) break;
        out.push_back(std::move(n));
      }
    }
    next = window_end;
  }
  return out;
}

/// Whether dropping the first two terms of the (d)-sequence from n = 0
/// leaves exactly the first `count` terms of the (b)-sequence from n = 1.
inline bool shift_identity_check(std::uint64_t count, unsigned jobs = 1) {
  if (count < 1) throw std::invalid_argument("shift_identity_check: count must be at least 1");
  const auto d_terms = satisfying_indices(SequenceSpec::natural(SequenceId::cond_d_a090892), count + 2, jobs);
  const auto b_terms = satisfying_indices(SequenceSpec::natural(SequenceId::cond_b_a120752), count, jobs);
  return std::equal(d_terms.begin() + 2, d_terms.end(), b_terms.begin(), b_terms.end());
}

/// First `count` terms of the sequence described by spec, as values.
inline std::vector<Natural> generate_terms(const SequenceSpec& spec, std::uint64_t count, unsigned jobs = 1) {
  if (spec.id != SequenceId::parity_a083035) return satisfying_indices(spec, count, jobs);
  const BitStream bits = parity_bits_from(spec.start_index, count, jobs);
  std::vector<Natural> out;
  out.reserve(bits.size());
  for (auto b : bits.bits()) out.emplace_back(std::uint64_t{b});
  return out;
}

}  // namespace beatty_lab
