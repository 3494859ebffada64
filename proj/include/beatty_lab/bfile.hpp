#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beatty_lab/natural.hpp"
#include "beatty_lab/sequences.hpp"

namespace beatty_lab {

/// One "index value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  mpz_class value;

  friend bool operator==(const BFileEntry& a, const BFileEntry& b) {
    return a.index == b.index && cmp(a.value, b.value) == 0;
  }
};

class bfile_error : public std::runtime_error {
 public:
  bfile_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

inline std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_blank(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_blank(rest[j])) ++j;
  const std::string_view tok = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return tok;
}

inline bool is_integer_token(std::string_view tok) {
  if (!tok.empty() && tok.front() == '-') tok.remove_prefix(1);
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses OEIS b-file text: one whitespace-separated "index value" pair per
/// line, LF or CRLF endings, '#' comment lines and blank lines ignored.
/// Indices must strictly increase.
inline std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view rest = line;
    const std::string_view index_tok = detail::next_token(rest);
    if (index_tok.empty() || index_tok.front() == '#') continue;
    const std::string_view value_tok = detail::next_token(rest);
    const std::string_view extra = detail::next_token(rest);

    if (!detail::is_integer_token(index_tok) || !detail::is_integer_token(value_tok) || !extra.empty()) {
      throw bfile_error("malformed entry", line_no);
    }
    BFileEntry entry;
    const auto [ptr, ec] = std::from_chars(index_tok.data(), index_tok.data() + index_tok.size(), entry.index);
    if (ec != std::errc{}) throw bfile_error("malformed entry", line_no);
    entry.value.set_str(std::string(value_tok), 10);

    if (!entries.empty() && entry.index <= entries.back().index) {
      throw bfile_error("non-monotone index", line_no);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::string serialize_bfile(const std::vector<BFileEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.get_str(10);
    out += '\n';
  }
  return out;
}

struct BFileMismatch {
  std::int64_t index = 0;
  mpz_class expected;  // value in the file
  mpz_class got;       // regenerated value
};

struct BFileComparison {
  bool match = false;
  std::optional<BFileMismatch> first_mismatch;
  std::uint64_t compared = 0;
};

inline constexpr std::uint64_t kBFileMaxSpan = 100'000'000;

/// Regenerates the sequence described by spec and compares it with the
/// entries. The file's first index is aligned with spec.start_index, so the
/// entry at index k is checked against generated term k - first_index.
inline BFileComparison compare_with_bfile(const std::vector<BFileEntry>& entries, const SequenceSpec& spec,
                                          unsigned jobs = 1) {
  if (entries.empty()) throw std::invalid_argument("compare_with_bfile: no entries");
  const std::int64_t first = entries.front().index;
  const auto span = static_cast<std::uint64_t>(entries.back().index - first) + 1;
  if (span > kBFileMaxSpan) throw std::length_error("compare_with_bfile: index span too large");
  const std::vector<Natural> terms = generate_terms(spec, span, jobs);

  BFileComparison report;
  for (const auto& e : entries) {
    const auto pos = static_cast<std::uint64_t>(e.index - first);
    const mpz_class& got = terms[pos].mpz();
    ++report.compared;
    if (cmp(got, e.value) != 0) {
      report.first_mismatch = BFileMismatch{e.index, e.value, got};
      return report;
    }
  }
  report.match = true;
  return report;
}

}  // namespace beatty_lab
