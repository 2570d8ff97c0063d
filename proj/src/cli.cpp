#include "troprate/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "troprate/io.hpp"
#include "troprate/oracle.hpp"
#include "troprate/ratings.hpp"

namespace troprate::cli {

namespace {

using io::Json;

struct Flags {
  std::string input;
  std::size_t samples = 0;  // 0: take from the problem file
  std::string output;
  std::optional<double> at_alpha;
  bool all = false;
  bool verify = false;
  std::size_t grid_resolution = 60;
  std::optional<double> tolerance;
  std::optional<double> log_base;
};

/// Failure carrying its exit code; printed to stderr by run().
struct Failure {
  int code;
  std::string message;
};

io::ProblemFile load(const Flags& flags) {
  io::ProblemFile file;
  try {
    file = io::load_problem(flags.input);
  } catch (const io::ParseError& e) {
    throw Failure{kParseFailure, std::string("parse error: ") + e.what()};
  }
  if (flags.tolerance) file.options.tolerance = *flags.tolerance;
  if (flags.log_base) file.options.log_base = *flags.log_base;
  if (flags.samples > 0) file.options.samples = flags.samples;
  return file;
}

Json violations_to_json(const std::vector<MatrixViolation>& violations) {
  Json out = Json::array();
  for (const MatrixViolation& v : violations) {
    Json item = {{"message", v.message}};
    if (v.located) {
      item["row"] = v.row + 1;
      item["col"] = v.col + 1;
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::string describe(const std::vector<MatrixViolation>& violations, const char* name) {
  std::string text;
  for (const MatrixViolation& v : violations) {
    text += std::string(name) + ": " + v.message + "\n";
  }
  return text;
}

int cmd_check(const Flags& flags, std::ostream& out, std::ostream& err) {
  const io::ProblemFile file = load(flags);
  const double tol = kReciprocityTolerance;
  Json report;
  bool valid = true;
  for (const auto& [name, matrix] : {std::pair{"A", &file.a}, std::pair{"B", &file.b}}) {
    const auto violations = reciprocity_violations(*matrix, tol);
    valid = valid && violations.empty();
    Json entry = {{"valid", violations.empty()}, {"violations", violations_to_json(violations)}};
    if (violations.empty()) {
      entry["consistency_index"] = io::scalar_to_json(spectral_radius(*matrix));
    }
    report[name] = std::move(entry);
    err << describe(violations, name);
  }
  Json bounds = Json::array();
  for (std::size_t i = 0; i < file.dim(); ++i) {
    if (file.h[i].is_zero()) {
      bounds.push_back({{"index", i + 1}, {"message", "upper bound must be positive"}});
    } else if (!leq(file.g[i], file.h[i], file.options.tolerance)) {
      bounds.push_back({{"index", i + 1}, {"message", "lower bound exceeds upper bound"}});
    }
  }
  for (const Json& b : bounds) err << "bounds: " << b["message"].get<std::string>() << "\n";
  valid = valid && bounds.empty();
  report["bounds"] = {{"valid", bounds.empty()}, {"violations", std::move(bounds)}};
  report["valid"] = valid;
  report["n"] = file.dim();
  out << report.dump(2) << "\n";
  return valid ? kOk : kValidationFailure;
}

ParetoFront solve_front(const io::ProblemFile& file) {
  try {
    return compute_front(file.instance(), file.options.tolerance);
  } catch (const DomainError& e) {
    throw Failure{kValidationFailure, std::string("invalid problem: ") + e.what()};
  } catch (const DimensionError& e) {
    throw Failure{kValidationFailure, std::string("invalid problem: ") + e.what()};
  } catch (const InfeasibleError& e) {
    throw Failure{kSolverFailure,
                  std::string("solver error [") + std::string(to_string(e.kind())) + "]: " + e.what()};
  }
}

int cmd_front(const Flags& flags, std::ostream& out, std::ostream&) {
  const io::ProblemFile file = load(flags);
  const ParetoFront front = solve_front(file);
  const auto samples = sample_front(front, file.options.samples);
  Json record = io::front_to_json(front);
  record["samples"] = samples.size();
  if (!flags.output.empty()) {
    std::ofstream csv(flags.output);
    if (!csv) throw Failure{kUsage, "cannot write '" + flags.output + "'"};
    io::write_front_csv(csv, samples);
    record["csv"] = flags.output;
  }
  out << record.dump(2) << "\n";
  return kOk;
}

oracle::FrontAgreement verify(const ProblemInstance& inst, const ParetoFront& front,
                              std::size_t resolution) {
  const auto spec = oracle::GridSpec::for_instance(inst, resolution);
  // One grid step per axis in each ratio x_i / x_j, doubled for the two
  // coordinates that can be off by half a step each.
  double step = 0.0;
  for (const auto& [lo, hi] : spec.log_ranges) {
    step = std::max(step, (hi - lo) / static_cast<double>(resolution - 1));
  }
  const auto envelope = oracle::grid_pareto(inst, spec);
  auto agreement = oracle::compare_front(front, envelope, 2.0 * step);
  agreement.grid_points = spec.size();
  return agreement;
}

int cmd_rate(const Flags& flags, std::ostream& out, std::ostream& err) {
  const io::ProblemFile file = load(flags);
  std::optional<ComparisonMatrix> a;
  std::optional<ComparisonMatrix> b;
  try {
    a = validate_reciprocal(file.a);
  } catch (const ValidationError& e) {
    err << describe(e.violations(), "A");
    throw Failure{kValidationFailure, std::string("A: ") + e.what()};
  }
  try {
    b = validate_reciprocal(file.b);
  } catch (const ValidationError& e) {
    err << describe(e.violations(), "B");
    throw Failure{kValidationFailure, std::string("B: ") + e.what()};
  }
  RateOptions options;
  options.tolerance = file.options.tolerance;
  options.log_base = file.options.log_base;
  options.samples = file.options.samples;
  if (flags.at_alpha) {
    options.selection = RateOptions::Selection::AtAlpha;
    options.at_alpha = *flags.at_alpha;
  } else if (flags.all) {
    options.selection = RateOptions::Selection::All;
  }
  RatingResult result;
  try {
    result = rate(*a, *b, file.g, file.h, options);
  } catch (const OutOfFrontError& e) {
    throw Failure{kOutOfFront, e.what()};
  } catch (const InfeasibleError& e) {
    throw Failure{kSolverFailure,
                  std::string("solver error [") + std::string(to_string(e.kind())) + "]: " + e.what()};
  } catch (const DomainError& e) {
    throw Failure{kValidationFailure, std::string("invalid problem: ") + e.what()};
  }
  Json record = io::rating_result_to_json(result);
  if (flags.verify) {
    try {
      const auto agreement = verify(file.instance(), result.front, flags.grid_resolution);
      record["verify"] = io::agreement_to_json(agreement);
      if (!agreement.agrees) err << "verify: grid oracle disagrees with the analytic front\n";
    } catch (const Error& e) {
      record["verify"] = {{"error", e.what()}};
      err << "verify: " << e.what() << "\n";
    }
  }
  out << record.dump(2) << "\n";
  return kOk;
}

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("input,--input", flags.input, "problem file (JSON)")->required();
  cmd->add_option("--tolerance", flags.tolerance, "log-domain comparison tolerance");
  cmd->add_option("--log-base", flags.log_base, "logarithm base for error reports");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Box-constrained bi-criteria rating from pairwise comparisons", "troprate"};
  app.require_subcommand(1);
  Flags flags;

  auto* check = app.add_subcommand("check", "validate reciprocity and report consistency");
  add_common(check, flags);

  auto* front = app.add_subcommand("front", "compute the Pareto front");
  add_common(front, flags);
  front->add_option("--samples", flags.samples, "number of front samples")
      ->check(CLI::PositiveNumber);
  front->add_option("--output", flags.output, "CSV file for alpha,beta samples");

  auto* rate_cmd = app.add_subcommand("rate", "Pareto-optimal rating vectors");
  add_common(rate_cmd, flags);
  auto* at = rate_cmd->add_option("--at-alpha", flags.at_alpha, "front point to rate at");
  rate_cmd->add_flag("--all", flags.all, "rate at sampled points along the front")->excludes(at);
  rate_cmd->add_option("--samples", flags.samples, "number of front samples for --all")
      ->check(CLI::PositiveNumber);
  rate_cmd->add_flag("--verify", flags.verify, "cross-check the front with a grid search");
  rate_cmd->add_option("--grid-resolution", flags.grid_resolution, "grid points per axis")
      ->check(CLI::Range(2, 100000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(flags, out, err);
    if (front->parsed()) return cmd_front(flags, out, err);
    return cmd_rate(flags, out, err);
  } catch (const Failure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace troprate::cli
