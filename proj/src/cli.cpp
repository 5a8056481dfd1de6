// Copyright 2026 The divstream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divstream/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divstream/bench.hpp"
#include "divstream/digsum.hpp"
#include "divstream/errors.hpp"
#include "divstream/oracle.hpp"
#include "divstream/params.hpp"

namespace divstream::cli {

namespace {

using nlohmann::ordered_json;

// Usage-level problems that CLI11 cannot see (bad input bytes, missing input
// source, unreadable file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParamStrategy to_strategy(const std::string& name) {
  return name == "balanced" ? ParamStrategy::Balanced
                            : ParamStrategy::MinPositive;
}

DisplayMode to_display(const std::string& name) {
  return name == "balanced" ? DisplayMode::Balanced : DisplayMode::Canonical;
}

struct NumberInput {
  std::string inline_text;
  std::string file;
  bool use_stdin = false;
};

std::string read_all(std::istream& stream) {
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

// One trailing newline (LF or CRLF) is tolerated on file and stdin input.
void strip_trailing_newline(std::string& text) {
  if (!text.empty() && text.back() == '\n') {
    text.pop_back();
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
  }
}

// CLI11 drops environment values that fail validation; surface those as
// usage errors instead. A --strategy flag (or an accepted env value) shows up
// as a nonzero count and takes precedence.
void require_valid_strategy_env(const CLI::App& cmd) {
  if (cmd.count("--strategy") > 0) {
    return;
  }
  const char* env = std::getenv("DIVSTREAM_STRATEGY");
  if (env != nullptr && *env != '\0') {
    const std::string value(env);
    if (value != "minpositive" && value != "balanced") {
      throw UsageError("invalid DIVSTREAM_STRATEGY value: " + value);
    }
  }
}

DecimalDigits read_number(const CLI::App& cmd, const NumberInput& input,
                          std::istream& in) {
  const int sources = (cmd.count("number") > 0 ? 1 : 0) +
                      (input.file.empty() ? 0 : 1) +
                      (input.use_stdin ? 1 : 0);
  if (sources != 1) {
    throw UsageError(
        "exactly one input source required: a NUMBER argument, --file, or "
        "--stdin");
  }
  std::string text;
  if (cmd.count("number") > 0) {
    text = input.inline_text;
  } else if (input.use_stdin) {
    text = read_all(in);
    strip_trailing_newline(text);
  } else {
    std::ifstream file(input.file, std::ios::binary);
    if (!file) {
      throw UsageError("cannot open file: " + input.file);
    }
    text = read_all(file);
    strip_trailing_newline(text);
  }
  return DecimalDigits::parse(text);
}

std::string format_seconds(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", seconds);
  return buffer;
}

std::string format_rate(double digits_per_second) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", digits_per_second / 1e6);
  return buffer;
}

std::string pad_left(const std::string& text, std::size_t width) {
  return std::string(width - text.size(), ' ') + text;
}

std::string render_trace_plain(const StepTrace& trace) {
  const std::string mod_title = "mod " + std::to_string(trace.params.d);
  const std::array<std::string, 5> titles = {
      "digit", "add", mod_title, "x" + std::to_string(trace.params.q),
      mod_title};
  std::vector<std::array<std::string, 5>> cells;
  cells.reserve(trace.rows.size());
  for (const StepRow& row : trace.rows) {
    cells.push_back({std::to_string(row.digit),
                     row.sum ? std::to_string(*row.sum) : std::string(),
                     std::to_string(row.residue), std::to_string(row.product),
                     std::to_string(row.product_residue)});
  }
  std::array<std::size_t, 5> widths;
  for (std::size_t j = 0; j < 5; ++j) {
    widths[j] = titles[j].size();
    for (const auto& row : cells) {
      widths[j] = std::max(widths[j], row[j].size());
    }
  }
  std::ostringstream out;
  out << "d=" << trace.params.d << " m=" << trace.params.m
      << " q=" << trace.params.q << " display="
      << (trace.display == DisplayMode::Canonical ? "canonical" : "balanced")
      << "\n";
  for (std::size_t j = 0; j < 5; ++j) {
    out << (j == 0 ? "" : "  ") << pad_left(titles[j], widths[j]);
  }
  out << "\n";
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < 5; ++j) {
      out << (j == 0 ? "" : "  ") << pad_left(row[j], widths[j]);
    }
    out << "\n";
  }
  out << (trace.divisible() ? "divisible" : "not divisible") << "\n";
  return out.str();
}

ordered_json trace_to_json(const StepTrace& trace) {
  ordered_json rows = ordered_json::array();
  for (const StepRow& row : trace.rows) {
    ordered_json entry;
    entry["digit"] = row.digit;
    entry["sum"] = row.sum ? ordered_json(*row.sum) : ordered_json(nullptr);
    entry["residue"] = row.residue;
    entry["product"] = row.product;
    entry["product_residue"] = row.product_residue;
    rows.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["divisor"] = trace.params.d;
  doc["m"] = trace.params.m;
  doc["q"] = trace.params.q;
  doc["display"] =
      trace.display == DisplayMode::Canonical ? "canonical" : "balanced";
  doc["rows"] = std::move(rows);
  doc["divisible"] = trace.divisible();
  return doc;
}

int run_test(const std::vector<std::int64_t>& divisors,
             const std::string& strategy, bool with_remainder, bool json,
             const DecimalDigits& digits, std::ostream& out) {
  const ParamStrategy param_strategy = to_strategy(strategy);
  struct Result {
    std::int64_t divisor;
    Verdict verdict;
  };
  std::vector<Result> results;
  results.reserve(divisors.size());
  bool all_divisible = true;
  for (std::int64_t d : divisors) {
    Verdict verdict = with_remainder
                          ? recover_remainder(digits, d, param_strategy)
                          : is_divisible(digits, d, param_strategy);
    all_divisible = all_divisible && verdict.divisible;
    results.push_back(Result{d, std::move(verdict)});
  }
  if (json) {
    ordered_json doc;
    doc["digit_count"] = digits.size();
    doc["strategy"] = strategy;
    ordered_json entries = ordered_json::array();
    for (const Result& result : results) {
      ordered_json entry;
      entry["divisor"] = result.divisor;
      entry["divisible"] = result.verdict.divisible;
      if (with_remainder) {
        entry["remainder"] = *result.verdict.remainder;
      }
      entries.push_back(std::move(entry));
    }
    doc["results"] = std::move(entries);
    doc["divisible"] = all_divisible;
    out << doc.dump(2) << "\n";
  } else {
    for (const Result& result : results) {
      if (divisors.size() > 1) {
        out << "d=" << result.divisor << ": ";
      }
      out << (result.verdict.divisible ? "divisible" : "not divisible");
      if (with_remainder) {
        out << ", remainder " << *result.verdict.remainder;
      }
      out << "\n";
    }
  }
  return all_divisible ? kExitDivisible : kExitNotDivisible;
}

int run_verify(std::int64_t d_max, std::uint64_t a_max,
               const std::string& strategy, bool json, std::ostream& out) {
  const CheckReport report = exhaustive_check(d_max, a_max,
                                              to_strategy(strategy));
  if (json) {
    ordered_json doc;
    doc["strategy"] = strategy;
    doc["d_max"] = d_max;
    doc["a_max"] = a_max;
    doc["divisors_tested"] = report.divisors_tested;
    doc["numbers_tested"] = report.numbers_tested;
    ordered_json mismatches = ordered_json::array();
    for (const Mismatch& mismatch : report.mismatches) {
      ordered_json entry;
      entry["number"] = mismatch.number;
      entry["divisor"] = mismatch.divisor;
      entry["weighted_divisible"] = mismatch.weighted_divisible;
      entry["weighted_remainder"] = mismatch.weighted_remainder;
      entry["naive_remainder"] = mismatch.naive_remainder;
      mismatches.push_back(std::move(entry));
    }
    doc["mismatches"] = std::move(mismatches);
    out << doc.dump(2) << "\n";
  } else {
    out << "strategy=" << strategy << " d_max=" << d_max << " a_max=" << a_max
        << "\n";
    out << "divisors=" << report.divisors_tested
        << " numbers=" << report.numbers_tested
        << " mismatches=" << report.mismatches.size() << "\n";
    for (const Mismatch& mismatch : report.mismatches) {
      out << "mismatch: A=" << mismatch.number << " d=" << mismatch.divisor
          << " weighted_divisible="
          << (mismatch.weighted_divisible ? "true" : "false")
          << " weighted_remainder=" << mismatch.weighted_remainder
          << " naive=" << mismatch.naive_remainder << "\n";
    }
  }
  return report.ok() ? 0 : kExitNotDivisible;
}

int run_bench_command(std::size_t digit_count,
                      const std::vector<std::int64_t>& divisors,
                      std::uint64_t seed, std::size_t iterations, bool json,
                      std::ostream& out) {
  const BenchReport report = run_bench(digit_count, divisors, seed,
                                       iterations);
  if (json) {
    ordered_json doc;
    doc["digit_count"] = report.digit_count;
    doc["seed"] = report.seed;
    doc["iterations"] = report.iterations;
    ordered_json per_divisor = ordered_json::array();
    for (const DivisorTiming& timing : report.divisors) {
      ordered_json entry;
      entry["divisor"] = timing.divisor;
      ordered_json methods = ordered_json::array();
      for (const MethodTiming& method : timing.methods) {
        ordered_json m;
        m["method"] = method.method;
        m["median_seconds"] = method.median_seconds;
        m["digits_per_second"] = method.digits_per_second;
        methods.push_back(std::move(m));
      }
      entry["methods"] = std::move(methods);
      per_divisor.push_back(std::move(entry));
    }
    doc["divisors"] = std::move(per_divisor);
    doc["agreement"] = report.agreement;
    out << doc.dump(2) << "\n";
  } else {
    out << "digits=" << report.digit_count << " seed=" << report.seed
        << " iterations=" << report.iterations
        << " agreement=" << (report.agreement ? "true" : "false") << "\n";
    for (const DivisorTiming& timing : report.divisors) {
      out << "d=" << timing.divisor << ":";
      bool first = true;
      for (const MethodTiming& method : timing.methods) {
        out << (first ? " " : ", ") << method.method << " "
            << format_seconds(method.median_seconds) << " s ("
            << format_rate(method.digits_per_second) << " Mdigit/s)";
        first = false;
      }
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"divisibility tests for divisors ending in 1, 3, 7 or 9"};
  app.name("divstream");
  app.require_subcommand(1);

  const std::string strategy_help =
      "parameter strategy: minpositive or balanced";
  const auto strategy_values =
      CLI::IsMember({std::string("minpositive"), std::string("balanced")});

  // test
  auto* test_cmd =
      app.add_subcommand("test", "test one number against one or more divisors");
  std::vector<std::int64_t> test_divisors;
  test_cmd->add_option("-d,--divisor", test_divisors, "divisor to test")
      ->required()
      ->allow_extra_args(false);
  std::string test_strategy = "minpositive";
  test_cmd->add_option("-s,--strategy", test_strategy, strategy_help)
      ->check(strategy_values)
      ->envname("DIVSTREAM_STRATEGY");
  bool test_remainder = false;
  test_cmd->add_flag("-r,--remainder", test_remainder,
                     "also recover the remainder");
  bool test_json = false;
  test_cmd->add_flag("--json", test_json, "emit JSON");
  NumberInput test_input;
  test_cmd->add_option("number", test_input.inline_text, "decimal numeral");
  test_cmd->add_option("--file", test_input.file,
                       "read the numeral from a file");
  test_cmd->add_flag("--stdin", test_input.use_stdin,
                     "read the numeral from standard input");

  // trace
  auto* trace_cmd =
      app.add_subcommand("trace", "print the step table for one number");
  std::int64_t trace_divisor = 0;
  trace_cmd->add_option("-d,--divisor", trace_divisor, "divisor")->required();
  std::string trace_strategy = "minpositive";
  trace_cmd->add_option("-s,--strategy", trace_strategy, strategy_help)
      ->check(strategy_values)
      ->envname("DIVSTREAM_STRATEGY");
  std::string trace_display = "canonical";
  trace_cmd
      ->add_option("--display", trace_display,
                   "residue rendering: canonical or balanced")
      ->check(CLI::IsMember({std::string("canonical"), std::string("balanced")}));
  bool trace_json = false;
  trace_cmd->add_flag("--json", trace_json, "emit JSON");
  NumberInput trace_input;
  trace_cmd->add_option("number", trace_input.inline_text, "decimal numeral");
  trace_cmd->add_option("--file", trace_input.file,
                        "read the numeral from a file");
  trace_cmd->add_flag("--stdin", trace_input.use_stdin,
                      "read the numeral from standard input");

  // params
  auto* params_cmd =
      app.add_subcommand("params", "solve m*d = 10*q - 1 for a divisor");
  std::int64_t params_divisor = 0;
  params_cmd->add_option("divisor", params_divisor, "divisor")->required();
  std::string params_strategy = "minpositive";
  params_cmd->add_option("-s,--strategy", params_strategy, strategy_help)
      ->check(strategy_values)
      ->envname("DIVSTREAM_STRATEGY");
  bool params_json = false;
  params_cmd->add_flag("--json", params_json, "emit JSON");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check the weighted method against long division");
  std::int64_t verify_dmax = 199;
  verify_cmd->add_option("--dmax", verify_dmax, "largest divisor to test");
  std::uint64_t verify_amax = 100000;
  verify_cmd->add_option("--amax", verify_amax,
                         "test every number below this bound");
  std::string verify_strategy = "minpositive";
  verify_cmd->add_option("-s,--strategy", verify_strategy, strategy_help)
      ->check(strategy_values)
      ->envname("DIVSTREAM_STRATEGY");
  bool verify_json = false;
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "compare weighted and naive throughput on random numerals");
  std::size_t bench_digits = 100000;
  bench_cmd->add_option("--digits", bench_digits, "digits per numeral")
      ->check(CLI::PositiveNumber);
  std::vector<std::int64_t> bench_divisors;
  bench_cmd->add_option("-d,--divisor", bench_divisors,
                        "divisor to benchmark (repeatable)")
      ->allow_extra_args(false);
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--seed", bench_seed, "generator seed");
  std::size_t bench_iterations = 3;
  bench_cmd->add_option("--iterations", bench_iterations,
                        "numerals per divisor")
      ->check(CLI::PositiveNumber);
  bool bench_json = false;
  bench_cmd->add_flag("--json", bench_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*test_cmd) {
      require_valid_strategy_env(*test_cmd);
      const DecimalDigits digits = read_number(*test_cmd, test_input, in);
      return run_test(test_divisors, test_strategy, test_remainder, test_json,
                      digits, out);
    }
    if (*trace_cmd) {
      require_valid_strategy_env(*trace_cmd);
      const DecimalDigits digits = read_number(*trace_cmd, trace_input, in);
      const DivisorParams params =
          solve_params(trace_divisor, to_strategy(trace_strategy));
      const StepTrace table = trace(digits, params, to_display(trace_display));
      if (trace_json) {
        out << trace_to_json(table).dump(2) << "\n";
      } else {
        out << render_trace_plain(table);
      }
      return 0;
    }
    if (*params_cmd) {
      require_valid_strategy_env(*params_cmd);
      const DivisorParams params =
          solve_params(params_divisor, to_strategy(params_strategy));
      if (params_json) {
        ordered_json doc;
        doc["d"] = params.d;
        doc["m"] = params.m;
        doc["q"] = params.q;
        doc["strategy"] = params_strategy;
        out << doc.dump(2) << "\n";
      } else {
        out << "d=" << params.d << " m=" << params.m << " q=" << params.q
            << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      require_valid_strategy_env(*verify_cmd);
      if (verify_dmax < 3 || verify_amax < 1) {
        throw UsageError("verify requires --dmax >= 3 and --amax >= 1");
      }
      return run_verify(verify_dmax, verify_amax, verify_strategy, verify_json,
                        out);
    }
    if (*bench_cmd) {
      if (bench_divisors.empty()) {
        bench_divisors = {7, 29, 17};
      }
      return run_bench_command(bench_digits, bench_divisors, bench_seed,
                               bench_iterations, bench_json, out);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::UnsupportedDivisor:
        err << "error: " << e.what() << "\n";
        return kExitUnsupportedDivisor;
      case Errc::InvalidCharacter:
        // 1-based in user-facing text.
        err << "error: invalid character at offset " << (e.offset() + 1)
            << "\n";
        return kExitUsage;
      case Errc::AgreementFailure:
        err << "error: " << e.what() << "\n";
        return kExitNotDivisible;
      default:
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
  }
}

}  // namespace divstream::cli
