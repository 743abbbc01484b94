#include "quadric/cli/config.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <sstream>

namespace quadric::cli {

namespace {

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  }
}

double parse_real(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw UsageError(std::string(what) + ": not a number: '" + s + "'");
  return v;
}

mpq_class parse_rat(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a rational p/q: '" + s + "'");
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

ParseOutcome parse_args(int argc, const char* const* argv) {
  CLI::App app{"Verifies curvature identities for real hypersurfaces in the complex quadric."};
  app.name("quadric-verify");
  std::string m_text, mode = "both", u_text, r_text, seed_text, suite_text, format = "text",
              out, perturb;
  std::optional<double> tol;
  int trials = verify::kDefaultTrials;
  app.add_option("--m", m_text, "complex dimensions, comma separated (default 3,4,5)");
  app.add_option("--mode", mode, "exact | float | both")
      ->check(CLI::IsMember({"exact", "float", "both"}));
  app.add_option("--u", u_text, "tube parameters u = tan(sqrt2 r) as rationals p/q (default 1/2,1,2)");
  app.add_option("--r", r_text, "tube radii in (0, pi/(2 sqrt2)), float mode only");
  app.add_option("--seed", seed_text, "seeds, comma separated (default 42)");
  app.add_option("--tol", tol, "float tolerance override (default 1e-10)");
  app.add_option("--suite", suite_text, "check-name globs, comma separated (e.g. tube*)");
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report to this path instead of stdout");
  app.add_option("--trials", trials, "random trials per seeded check (default 50)")
      ->check(CLI::PositiveNumber);
  app.add_option("--perturb-lambda", perturb,
                 "add this rational to the lambda principal curvature of the tube (negative test)");

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, err;
    const int code = app.exit(e, os, err);
    outcome.output = os.str() + err.str();
    outcome.exit_code = code == 0 ? 0 : 2;
    return outcome;
  }

  try {
    RunConfig cfg;
    cfg.mode = mode;
    cfg.suite.exact = mode != "float";
    cfg.suite.floating = mode != "exact";
    cfg.format = format == "json" ? Format::Json : Format::Text;
    if (!out.empty()) cfg.out = out;
    if (!m_text.empty()) {
      cfg.suite.m_values.clear();
      for (const auto& s : split_list(m_text)) {
        const int m = parse_int(s, "--m");
        if (m < 3) {
          throw UsageError("--m " + s +
                           ": m must be at least 3 (standing assumption: Q^1 and Q^2 are "
                           "excluded)");
        }
        cfg.suite.m_values.push_back(m);
      }
    }
    if (!u_text.empty()) {
      cfg.suite.u_values.clear();
      for (const auto& s : split_list(u_text)) {
        const mpq_class u = parse_rat(s, "--u");
        if (u <= 0) throw UsageError("--u " + s + ": u must be positive");
        cfg.suite.u_values.push_back(u);
      }
    }
    if (!r_text.empty()) {
      if (mode == "exact") {
        throw UsageError("--r is irrational input and is not allowed in exact mode; use --u");
      }
      for (const auto& s : split_list(r_text)) {
        const double r = parse_real(s, "--r");
        if (!(r > 0.0 && r < 3.14159265358979323846 / (2.0 * std::sqrt(2.0)))) {
          throw UsageError("--r " + s + ": radius must lie in (0, pi/(2 sqrt2))");
        }
        cfg.suite.r_values.push_back(r);
      }
      // Radii replace the default u list unless u was given explicitly.
      if (u_text.empty()) cfg.suite.u_values.clear();
    }
    if (!seed_text.empty()) {
      cfg.suite.seeds.clear();
      for (const auto& s : split_list(seed_text)) {
        try {
          std::size_t pos = 0;
          cfg.suite.seeds.push_back(std::stoull(s, &pos));
          if (pos != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
          throw UsageError("--seed: not a non-negative integer: '" + s + "'");
        }
      }
    }
    if (tol) {
      if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
      cfg.suite.tolerance = tol;
    }
    if (!suite_text.empty()) cfg.suite.filters = split_list(suite_text);
    if (!perturb.empty()) cfg.suite.lambda_shift = parse_rat(perturb, "--perturb-lambda");
    cfg.suite.trials = trials;
    outcome.config = std::move(cfg);
  } catch (const UsageError& e) {
    outcome.exit_code = 2;
    outcome.output = std::string("error: ") + e.what() + "\nRun with --help for usage.\n";
  }
  return outcome;
}

}  // namespace quadric::cli
