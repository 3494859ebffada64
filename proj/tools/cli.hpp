#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "beatty_lab/beatty_lab.hpp"

namespace beatty_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --jobs default: BEATTY_LAB_JOBS if set, else the machine's parallelism.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("BEATTY_LAB_JOBS"); env != nullptr && *env != '\0') {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw usage_error("BEATTY_LAB_JOBS must be a positive integer");
    }
    return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

inline nlohmann::json to_json(const Natural& n) {
  if (n.fits_u64()) return n.to_u64();
  return n.to_decimal();
}

inline nlohmann::json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) != 0) return static_cast<std::int64_t>(v.get_si());
  return v.get_str(10);
}

inline nlohmann::json to_json(const ConditionVector& cv) {
  nlohmann::json j{{"n", to_json(cv.n)}, {"p", to_json(cv.p)}, {"q", to_json(cv.q)},
                   {"a", cv.a},          {"b", cv.b},          {"c", cv.c},
                   {"d", cv.d},          {"e", cv.e},          {"f", cv.f}};
  if (cv.sigma_decimal) j["sigma"] = *cv.sigma_decimal;
  return j;
}

inline nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& cv : r.counterexamples) ces.push_back(to_json(cv));
  return {{"lo", to_json(r.lo)},
          {"hi", to_json(r.hi)},
          {"checked_count", r.checked_count},
          {"counterexamples", ces},
          {"holds", r.holds()}};
}

inline nlohmann::json to_json(const ComplementarityReport& r) {
  nlohmann::json dups = nlohmann::json::array();
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& v : r.duplicates) dups.push_back(to_json(v));
  for (const auto& v : r.gaps) gaps.push_back(to_json(v));
  return {{"limit", to_json(r.limit)},   {"covered", r.covered},
          {"duplicates", dups},          {"gaps", gaps},
          {"beatty_terms", r.beatty_terms}, {"partner_terms", r.partner_terms}};
}

inline nlohmann::json to_json(const WalkStats& s) {
  return {{"endpoint", {s.endpoint.x, s.endpoint.y}},
          {"bbox", {s.bbox.min_x, s.bbox.min_y, s.bbox.max_x, s.bbox.max_y}},
          {"distinct_points", s.distinct_points}};
}

namespace detail {

inline Natural parse_natural(const std::string& text, const char* what) {
  try {
    return Natural::from_decimal(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
}

inline std::string flags_text(const ConditionVector& cv) {
  std::ostringstream os;
  os << "n=" << cv.n << " p=" << cv.p << " q=" << cv.q << " a=" << cv.a << " b=" << cv.b << " c=" << cv.c
     << " d=" << cv.d << " e=" << cv.e << " f=" << cv.f;
  if (cv.sigma_decimal) os << " sigma~" << *cv.sigma_decimal;
  return os.str();
}

inline std::string plural(std::uint64_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Streams a list of naturals as text (space separated, one line) or as a
// JSON object whose "terms" array is written element by element.
class TermWriter {
 public:
  TermWriter(std::ostream& out, bool json, nlohmann::json header) : out_(out), json_(json) {
    if (json_) {
      std::string h = header.dump();
      h.pop_back();  // reopen the object
      out_ << h << (header.empty() ? "" : ",") << "\"terms\":[";
    }
  }

  void put(const Natural& v) {
    if (!first_) out_ << (json_ ? "," : " ");
    first_ = false;
    if (json_) {
      out_ << to_json(v).dump();
    } else {
      out_ << v;
    }
  }

  void finish() {
    out_ << (json_ ? "]}" : "") << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  bool first_ = true;
};

}  // namespace detail

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 success, 1 verification failure, 2 usage error.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Beatty sequence toolkit for floor(n sqrt 2)", "beatty_lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string format = "text";
  unsigned jobs = 0;
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_jobs = [&jobs](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (default: BEATTY_LAB_JOBS or machine parallelism)")
        ->check(CLI::PositiveNumber);
  };

  std::uint64_t count = 0;
  std::string from_text;
  std::string to_text;

  auto* terms = app.add_subcommand("terms", "floor(n sqrt 2) for consecutive n");
  terms->add_option("--count", count, "Number of terms")->required();
  terms->add_option("--from", from_text, "First index (default 1)");
  add_format(terms);

  auto* parity = app.add_subcommand("parity", "Parities of floor(n sqrt 2) (A083035)");
  parity->add_option("--count", count, "Number of bits")->required();
  parity->add_option("--from", from_text, "First index (default 1)");
  add_format(parity);
  add_jobs(parity);

  std::string n_text;
  auto* conditions = app.add_subcommand("conditions", "Condition vector a..f at one index");
  conditions->add_option("--n", n_text, "Index")->required();
  add_format(conditions);

  auto* check = app.add_subcommand("check", "Sweep an index range for disagreement among conditions a..f");
  check->add_option("--from", from_text, "First index")->required();
  check->add_option("--to", to_text, "Last index (inclusive)")->required();
  add_format(check);
  add_jobs(check);

  std::string seq_name;
  auto* seq = app.add_subcommand("seq", "Indices satisfying condition d (a090892) or b (a120752)");
  seq->add_option("id", seq_name, "Sequence")->required()->check(CLI::IsMember({"a090892", "a120752"}, CLI::ignore_case));
  seq->add_option("--count", count, "Number of terms")->required();
  seq->add_option("--from", from_text, "Start index (default: the sequence's offset)");
  add_format(seq);
  add_jobs(seq);

  auto* shift = app.add_subcommand("shift-check", "d-sequence minus two leading terms vs b-sequence");
  shift->add_option("--count", count, "Number of terms compared")->required();
  add_format(shift);
  add_jobs(shift);

  std::string limit_text;
  auto* complement = app.add_subcommand("complement-check", "Partition of [1, limit] by the two Beatty sequences");
  complement->add_option("--limit", limit_text, "Upper end of the checked range")->required();
  add_format(complement);
  add_jobs(complement);

  std::string x_text;
  auto* lemma = app.add_subcommand("lemma1", "Decide sqrt(x^2+x+1/2) - x > 1/2 for a rational x");
  lemma->add_option("--x", x_text, "Nonnegative rational a or a/b")->required();
  add_format(lemma);

  std::string bits_text;
  std::string bits_file;
  std::string out_path;
  std::string image_format = "svg";
  double stroke_width = 1.0;
  std::int64_t margin = 2;
  auto* walk = app.add_subcommand("walk", "Render the turn-right-on-0 / turn-left-on-1 walk of a bit stream");
  auto* walk_count = walk->add_option("--count", count, "Use the first N parity bits");
  auto* walk_bits = walk->add_option("--bits", bits_text, "Literal bit string, e.g. 0110");
  auto* walk_bits_file = walk->add_option("--bits-file", bits_file, "File of 0/1 characters");
  walk_count->excludes(walk_bits)->excludes(walk_bits_file);
  walk_bits->excludes(walk_bits_file);
  walk->add_option("--out", out_path, "Output image path")->required();
  walk->add_option("--format", image_format, "Image format")->check(CLI::IsMember({"svg", "pgm"}));
  walk->add_option("--stroke-width", stroke_width, "SVG stroke width")->check(CLI::PositiveNumber);
  walk->add_option("--margin", margin, "Margin in lattice units")->check(CLI::NonNegativeNumber);
  add_jobs(walk);

  std::string bfile_path;
  std::string seq_id_text;
  auto* compare = app.add_subcommand("oeis-compare", "Compare an OEIS b-file against the regenerated sequence");
  compare->add_option("--bfile", bfile_path, "Path to the b-file")->required();
  compare->add_option("--seq", seq_id_text, "A083035 | A090892 | A120752")->required();
  add_format(compare);
  add_jobs(compare);

  std::vector<std::string> argv_store{"beatty_lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (jobs == 0) jobs = default_jobs();

    if (*terms) {
      const Natural from = from_text.empty() ? Natural{1} : detail::parse_natural(from_text, "--from");
      detail::TermWriter w(out, json, {{"from", to_json(from)}, {"count", count}});
      Natural n = from;
      for (std::uint64_t i = 0; i < count; ++i, n += Natural{1}) w.put(beatty_sqrt2(n));
      w.finish();
      return kExitOk;
    }

    if (*parity) {
      const Natural from = from_text.empty() ? Natural{1} : detail::parse_natural(from_text, "--from");
      detail::TermWriter w(out, json, {{"sequence", "A083035"}, {"from", to_json(from)}, {"count", count}});
      constexpr std::uint64_t kBatch = 1 << 16;
      Natural start = from;
      for (std::uint64_t done = 0; done < count;) {
        const std::uint64_t k = std::min(kBatch, count - done);
        const BitStream bits = parity_bits_from(start, k, jobs);
        for (auto b : bits.bits()) w.put(Natural{b});
        done += k;
        start += Natural{k};
      }
      w.finish();
      return kExitOk;
    }

    if (*conditions) {
      const ConditionVector cv = condition_vector(detail::parse_natural(n_text, "--n"), true);
      if (json) {
        out << to_json(cv).dump() << '\n';
      } else {
        out << detail::flags_text(cv) << '\n';
      }
      return kExitOk;
    }

    if (*check) {
      const Natural lo = detail::parse_natural(from_text, "--from");
      const Natural hi = detail::parse_natural(to_text, "--to");
      if (hi < lo) throw usage_error("--from must not exceed --to");
      const EquivalenceReport report = check_equivalence(lo, hi, jobs);
      if (json) {
        out << to_json(report).dump() << '\n';
      } else {
        for (const auto& cv : report.counterexamples) out << detail::flags_text(cv) << '\n';
        out << "checked " << detail::plural(report.checked_count, "index", "indices") << " in [" << lo << ", " << hi
            << "]: " << detail::plural(report.counterexamples.size(), "counterexample", "counterexamples") << '\n';
      }
      return report.holds() ? kExitOk : kExitVerificationFailed;
    }

    if (*seq) {
      const SequenceId id = parse_sequence_id(seq_name);
      SequenceSpec spec = SequenceSpec::natural(id);
      if (!from_text.empty()) spec = SequenceSpec::starting_at(id, detail::parse_natural(from_text, "--from"));
      detail::TermWriter w(out, json, {{"sequence", std::string(to_string(id))}, {"from", to_json(spec.start_index)},
                                       {"count", count}});
      constexpr std::uint64_t kBatch = 1 << 16;
      for (std::uint64_t done = 0; done < count;) {
        const std::uint64_t k = std::min(kBatch, count - done);
        const auto batch = satisfying_indices(spec, k, jobs);
        for (const auto& v : batch) w.put(v);
        done += k;
        spec.start_index = batch.back() + Natural{1};
      }
      w.finish();
      return kExitOk;
    }

    if (*shift) {
      if (count < 1) throw usage_error("--count must be at least 1");
      const bool ok = shift_identity_check(count, jobs);
      if (json) {
        out << nlohmann::json{{"count", count}, {"holds", ok}}.dump() << '\n';
      } else {
        out << "shift identity " << (ok ? "holds" : "FAILS") << " for the first " << detail::plural(count, "term", "terms")
            << '\n';
      }
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (*complement) {
      const Natural limit = detail::parse_natural(limit_text, "--limit");
      if (limit.is_zero()) throw usage_error("--limit must be at least 1");
      const ComplementarityReport report = complementarity_check(limit, jobs);
      if (json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << "[1, " << limit << "]: " << (report.covered ? "partitioned" : "NOT partitioned") << " ("
            << report.beatty_terms << " + " << report.partner_terms << " terms, "
            << detail::plural(report.gaps.size(), "gap", "gaps") << ", "
            << detail::plural(report.duplicates.size(), "duplicate", "duplicates") << ")\n";
      }
      return report.covered ? kExitOk : kExitVerificationFailed;
    }

    if (*lemma) {
      RationalValue x{Natural{0}, Natural{1}};
      try {
        x = RationalValue::parse(x_text);
      } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("--x: ") + e.what());
      }
      const bool holds = lemma1_holds(x);
      if (json) {
        out << nlohmann::json{{"x", x.to_string()}, {"holds", holds}}.dump() << '\n';
      } else {
        out << (holds ? "true" : "false") << '\n';
      }
      return holds ? kExitOk : kExitVerificationFailed;
    }

    if (*walk) {
      BitStream bits;
      if (!bits_text.empty()) {
        bits = BitStream::parse(bits_text);
      } else if (!bits_file.empty()) {
        bits = BitStream::parse(detail::read_file(bits_file));
      } else if (*walk_count) {
        bits = parity_bits(count, jobs);
      } else {
        throw usage_error("walk needs one of --count, --bits, --bits-file");
      }
      const Walk w = cloitre_walk(bits);
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw usage_error("cannot write '" + out_path + "'");
      if (image_format == "pgm") {
        const auto bytes = render_pgm(w, margin);
        file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
      } else {
        file << render_svg(w, stroke_width, margin);
      }
      if (!file.flush()) throw std::runtime_error("failed writing '" + out_path + "'");
      const WalkStats s = walk_stats(w, jobs);
      out << "endpoint (" << s.endpoint.x << ", " << s.endpoint.y << ") bbox (" << s.bbox.min_x << ", "
          << s.bbox.min_y << ", " << s.bbox.max_x << ", " << s.bbox.max_y << ") distinct " << s.distinct_points
          << '\n';
      return kExitOk;
    }

    if (*compare) {
      const SequenceId id = parse_sequence_id(seq_id_text);
      const auto entries = parse_bfile(detail::read_file(bfile_path));
      if (entries.empty()) throw usage_error("b-file '" + bfile_path + "' has no entries");
      const BFileComparison report = compare_with_bfile(entries, SequenceSpec::natural(id), jobs);
      if (json) {
        nlohmann::json j{{"sequence", std::string(to_string(id))}, {"match", report.match}, {"compared", report.compared}};
        if (report.first_mismatch) {
          j["first_mismatch"] = {{"index", report.first_mismatch->index},
                                 {"expected", to_json(report.first_mismatch->expected)},
                                 {"got", to_json(report.first_mismatch->got)}};
        }
        out << j.dump() << '\n';
      } else if (report.match) {
        out << to_string(id) << ": match over " << detail::plural(report.compared, "entry", "entries") << '\n';
      } else {
        const auto& m = *report.first_mismatch;
        out << to_string(id) << ": mismatch at index " << m.index << " (file " << m.expected.get_str() << ", computed "
            << m.got.get_str() << ")\n";
      }
      return report.match ? kExitOk : kExitVerificationFailed;
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bfile_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace beatty_lab::cli
