#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/function_file.hpp"

namespace drft::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultTolerance = 1e-9;
constexpr double kDefaultBridgeTolerance = 1e-8;

struct GlobalOptions {
  std::string format = "text";
  std::optional<double> tolerance;

  bool json_output() const { return format == "json"; }
  double tolerance_or(double fallback) const { return tolerance.value_or(fallback); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_integer_argument(const std::string& text, const char* name) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(name) + " must be an integer, got '" + text + "'");
  }
  return value;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

void emit(const FunctionFile& file, const GlobalOptions& global, std::ostream& out) {
  const double chop = global.tolerance_or(kDefaultTolerance);
  out << (global.json_output() ? format_json(file, chop) : format_text(file, chop));
}

// ---- csum ----------------------------------------------------------------

struct CsumOptions {
  std::vector<std::string> numbers;
  bool table = false;
};

int run_csum(const CsumOptions& options, const GlobalOptions& global, std::ostream& out) {
  if (options.table) {
    if (options.numbers.size() != 1) throw UsageError("csum --table expects exactly one modulus");
    const std::int64_t r = parse_integer_argument(options.numbers[0], "r");
    const RamanujanTable table(r);
    const auto& ds = table.divisors();
    if (global.json_output()) {
      json rows = json::array();
      for (std::size_t e = 0; e < ds.size(); ++e) {
        json row = json::array();
        for (std::size_t d = 0; d < ds.size(); ++d) {
          row.push_back(table.at_index(ds.complement_index(e), d));
        }
        rows.push_back(row);
      }
      out << json{{"r", r},
                  {"divisors", std::vector<std::int64_t>(ds.begin(), ds.end())},
                  {"rows", rows}}
                 .dump()
          << "\n";
      return kExitOk;
    }
    // row e, column d: C(r/e, d)
    out << "e\\d";
    for (std::int64_t d : ds) out << ' ' << d;
    out << '\n';
    for (std::size_t e = 0; e < ds.size(); ++e) {
      out << ds[e];
      for (std::size_t d = 0; d < ds.size(); ++d) {
        out << ' ' << table.at_index(ds.complement_index(e), d);
      }
      out << '\n';
    }
    return kExitOk;
  }
  if (options.numbers.size() != 2) throw UsageError("csum expects two integers: n r");
  const std::int64_t n = parse_integer_argument(options.numbers[0], "n");
  const std::int64_t r = parse_integer_argument(options.numbers[1], "r");
  const std::int64_t value = ramanujan_sum(n, r);
  if (global.json_output()) {
    out << json{{"n", n}, {"r", r}, {"value", value}}.dump() << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

// ---- transform -----------------------------------------------------------

struct TransformOptions {
  std::string input;
  std::string kind;
  std::string direction = "forward";
  std::string path = "divisor";
};

template <Scalar S>
FunctionFile rft_forward(const FunctionFile& in, const std::string& path) {
  const EvenFunction<S> f = as_even<S>(in);
  return make_file(path == "grouped" ? rft(f) : rft_divisor_form(f));
}

template <Scalar S>
FunctionFile rft_inverse(const FunctionFile& in) {
  return make_file(irft(as_even<S, EvenSpectrumTag>(in)));
}

int run_transform(const TransformOptions& options, const GlobalOptions& global,
                  std::ostream& out) {
  const FunctionFile in = read_function_file(options.input);
  const bool forward = options.direction == "forward";
  FunctionFile result;
  if (options.kind == "dft") {
    if (forward) {
      result = make_file(in.is_exact() ? dft(as_periodic<Rational>(in))
                                       : dft(as_periodic<Complex>(in)));
    } else {
      if (in.representation != Representation::periodic) {
        throw UsageError("inverse dft expects a periodic file of coefficients F(1..r)");
      }
      result = make_file(idft(PeriodicSpectrum(in.modulus, in.complex_values())));
    }
  } else {
    if (!forward && in.representation != Representation::even) {
      throw UsageError("inverse rft expects an even file of coefficients R(d)");
    }
    if (in.is_exact()) {
      result = forward ? rft_forward<Rational>(in, options.path) : rft_inverse<Rational>(in);
    } else {
      result = forward ? rft_forward<Complex>(in, options.path) : rft_inverse<Complex>(in);
    }
  }
  emit(result, global, out);
  return kExitOk;
}

// ---- cauchy --------------------------------------------------------------

struct CauchyOptions {
  std::string input_f;
  std::string input_g;
  std::string path = "auto";
  bool check = false;
};

template <Scalar S>
FunctionFile cauchy_by_path(const FunctionFile& f, const FunctionFile& g,
                            const std::string& path) {
  if (path == "even") return make_file(cauchy_product_even(as_even<S>(f), as_even<S>(g)));
  if (path == "spectral") {
    return make_file(cauchy_product_spectral(as_periodic<S>(f), as_periodic<S>(g)));
  }
  return make_file(cauchy_product(as_periodic<S>(f), as_periodic<S>(g)));
}

// Values of a product file expanded to residues 1..r.
template <Scalar S>
std::vector<S> expanded(const FunctionFile& file) {
  const auto f = as_periodic<S>(file);
  return {f.values().begin(), f.values().end()};
}

int run_cauchy(const CauchyOptions& options, const GlobalOptions& global, std::ostream& out) {
  const FunctionFile f = read_function_file(options.input_f);
  const FunctionFile g = read_function_file(options.input_g);
  if (f.modulus != g.modulus) {
    throw DomainError("modulus mismatch: " + std::to_string(f.modulus) + " vs " +
                      std::to_string(g.modulus));
  }
  const bool both_even = f.representation == Representation::even &&
                         g.representation == Representation::even;
  const std::string path = options.path == "auto" ? (both_even ? "even" : "naive") : options.path;
  const bool exact = f.is_exact() && g.is_exact() && path != "spectral";

  const FunctionFile product = exact ? cauchy_by_path<Rational>(f, g, path)
                                     : cauchy_by_path<Complex>(f, g, path);
  if (!options.check) {
    emit(product, global, out);
    return kExitOk;
  }

  // The reference is the naive double sum, except when that is the path
  // under test, in which case the spectral product is compared against it.
  const std::string reference_path = path == "naive" ? "spectral" : "naive";
  const bool exact_check = exact && reference_path != "spectral";
  std::string discrepancy;
  bool within = false;
  if (exact_check) {
    const auto a = expanded<Rational>(product);
    const auto b = expanded<Rational>(cauchy_by_path<Rational>(f, g, reference_path));
    Rational worst(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational diff = a[i] - b[i];
      if (diff < Rational(0)) diff = -diff;
      worst = std::max(worst, diff);
    }
    discrepancy = worst.to_string();
    within = worst.is_zero();
  } else {
    const auto a = expanded<Complex>(product);
    const auto b = expanded<Complex>(cauchy_by_path<Complex>(f, g, reference_path));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    discrepancy = format_double(worst);
    within = worst <= global.tolerance_or(kDefaultTolerance);
  }
  if (global.json_output()) {
    out << json{{"path", path}, {"reference", reference_path},
                {"max_discrepancy", discrepancy}, {"within_tolerance", within}}
               .dump()
        << "\n";
  } else {
    out << "max discrepancy: " << discrepancy << "\n";
  }
  return within ? kExitOk : kExitCheckFailed;
}

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::int64_t r_max = 0;
  std::uint64_t seed = 1;
};

std::string value_text(std::int64_t v) { return std::to_string(v); }
std::string value_text(const Complex& z) {
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

std::string coordinates_text(const std::vector<Coordinate>& at) {
  std::string out;
  for (const auto& c : at) {
    if (!out.empty()) out += ' ';
    out += std::string(c.name) + "=" + std::to_string(c.value);
  }
  return out;
}

struct SweepResult {
  std::size_t reports = 0;
  std::size_t failed = 0;
  std::size_t checks = 0;
  json records = json::array();
};

template <class V>
void record(const std::string& suite, const VerificationReport<V>& report, bool json_output,
            SweepResult& sweep, std::ostream& out) {
  ++sweep.reports;
  sweep.checks += report.checks.size();
  const auto* failure = report.first_failure();
  if (failure) ++sweep.failed;
  if (json_output) {
    json entry{{"suite", suite}, {"r", report.modulus},
               {"checks", report.checks.size()}, {"passed", failure == nullptr}};
    if (failure) {
      entry["counterexample"] = {{"at", coordinates_text(failure->at)},
                                 {"lhs", value_text(failure->lhs)},
                                 {"rhs", value_text(failure->rhs)}};
    }
    sweep.records.push_back(entry);
    return;
  }
  out << suite << " r=" << report.modulus << (failure ? " FAIL" : " pass")
      << " checks=" << report.checks.size();
  if (failure) {
    out << " counterexample: " << coordinates_text(failure->at)
        << " lhs=" << value_text(failure->lhs) << " rhs=" << value_text(failure->rhs);
  }
  out << "\n";
}

int run_verify(const VerifyOptions& options, const GlobalOptions& global, std::ostream& out) {
  if (options.r_max < 1) throw UsageError("--rmax must be at least 1");
  const std::vector<std::string> all{"orthogonality", "symmetry", "bridge", "cauchy-kernel"};
  const std::vector<std::string> suites =
      options.suite == "all" ? all : std::vector<std::string>{options.suite};
  for (const auto& s : suites) {
    if (s == "cauchy-kernel" && options.r_max > kCauchyKernelMaxModulus) {
      throw CapacityError("the cauchy-kernel suite is capped at r <= " +
                          std::to_string(kCauchyKernelMaxModulus) + ", got --rmax " +
                          std::to_string(options.r_max));
    }
  }

  const double bridge_tolerance = global.tolerance_or(kDefaultBridgeTolerance);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 12);

  SweepResult sweep;
  for (std::int64_t r = 1; r <= options.r_max; ++r) {
    for (const auto& suite : suites) {
      if (suite == "orthogonality") {
        record(suite, verify_orthogonality(r), global.json_output(), sweep, out);
      } else if (suite == "symmetry") {
        record(suite, verify_symmetry(r), global.json_output(), sweep, out);
      } else if (suite == "bridge") {
        const DivisorList ds = divisors(r);
        std::vector<Rational> values;
        for (std::size_t i = 0; i < ds.size(); ++i) values.emplace_back(num(rng), den(rng));
        record(suite, verify_rft_dft_bridge(EvenFunction<Rational>(ds, values), bridge_tolerance),
               global.json_output(), sweep, out);
      } else {
        record(suite, verify_cauchy_kernel_even(r), global.json_output(), sweep, out);
      }
    }
  }
  if (global.json_output()) {
    out << json{{"reports", sweep.records}, {"checks", sweep.checks},
                {"failed_reports", sweep.failed}, {"passed", sweep.failed == 0}}
               .dump()
        << "\n";
  } else if (sweep.failed == 0) {
    out << "all " << sweep.checks << " checks passed in " << sweep.reports << " reports\n";
  } else {
    out << sweep.failed << " of " << sweep.reports << " reports failed\n";
  }
  return sweep.failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan sums and discrete Fourier transforms of periodic and even functions mod r",
               "drft"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", global.tolerance,
                 "Tolerance for floating-point comparisons; also the threshold below "
                 "which printed floating components are shown as 0");

  CsumOptions csum;
  auto* csum_cmd = app.add_subcommand("csum", "Ramanujan's sum C(n, r), or the divisor table");
  csum_cmd->fallthrough();
  csum_cmd->add_option("numbers", csum.numbers, "n r (or just r with --table)");
  csum_cmd->add_flag("--table", csum.table, "Print C(r/e, d) for all divisors d, e of r");

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "DFT/IDFT or RFT/IRFT of a function file");
  transform_cmd->fallthrough();
  transform_cmd->add_option("input", transform.input, "Function file")->required();
  transform_cmd->add_option("--kind", transform.kind, "Transform kind")
      ->required()
      ->check(CLI::IsMember({"dft", "rft"}));
  transform_cmd->add_option("--direction", transform.direction, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));
  transform_cmd->add_option("--path", transform.path, "RFT evaluation: divisor or grouped")
      ->check(CLI::IsMember({"divisor", "grouped"}));

  CauchyOptions cauchy;
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy product of two function files");
  cauchy_cmd->fallthrough();
  cauchy_cmd->add_option("f", cauchy.input_f, "First function file")->required();
  cauchy_cmd->add_option("g", cauchy.input_g, "Second function file")->required();
  cauchy_cmd->add_option("--path", cauchy.path, "auto, naive, spectral or even")
      ->check(CLI::IsMember({"auto", "naive", "spectral", "even"}));
  cauchy_cmd->add_flag("--check", cauchy.check,
                       "Compare against a second evaluation path and report the discrepancy");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the transform identities for r = 1..rmax");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"orthogonality", "symmetry", "bridge", "cauchy-kernel", "all"}));
  verify_cmd->add_option("--rmax", verify.r_max, "Largest modulus")->required();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the bridge suite's random functions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (csum_cmd->parsed()) return run_csum(csum, global, out);
    if (transform_cmd->parsed()) return run_transform(transform, global, out);
    if (cauchy_cmd->parsed()) return run_cauchy(cauchy, global, out);
    return run_verify(verify, global, out);
  } catch (const NotEvenError& e) {
    err << "error: " << e.what() << " (witness n = " << e.witness() << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace drft::cli
