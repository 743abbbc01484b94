#include "quadric/verify/suite.hpp"

#include <fnmatch.h>

#include <exception>

namespace quadric::verify {

bool matches_filters(const std::string& name, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const auto& f : filters) {
    if (fnmatch(f.c_str(), name.c_str(), 0) == 0) return true;
  }
  return false;
}

CheckReport run_check(const CheckDef& def, const CheckContext& ctx) {
  try {
    return def.run(ctx);
  } catch (const std::exception& e) {
    CheckReport r;
    r.name = def.name;
    r.anchor = def.anchor;
    r.mode = ctx.mode;
    r.seed = ctx.seed;
    r.tolerance = ctx.tolerance;
    r.residual = ctx.mode == Mode::Exact ? Scalar(QSqrt2()) : Scalar(0.0);
    r.status = Status::SetupError;
    r.parameters.emplace_back("m", std::to_string(ctx.m));
    if (ctx.tube) {
      const std::string d = ctx.tube->describe();
      const auto eq = d.find('=');
      r.parameters.emplace_back(d.substr(0, eq), d.substr(eq + 1));
    } else {
      r.parameters.emplace_back("seed", std::to_string(ctx.seed));
    }
    r.message = e.what();
    return r;
  }
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  std::vector<Mode> modes;
  if (config.exact) modes.push_back(Mode::Exact);
  if (config.floating) modes.push_back(Mode::Float);

  for (const auto& def : registry()) {
    if (!matches_filters(def.name, config.filters)) continue;
    for (Mode mode : modes) {
      if (mode == Mode::Exact && !def.exact) continue;
      if (mode == Mode::Float && !def.floating) continue;
      for (int m : config.m_values) {
        CheckContext base;
        base.m = m;
        base.mode = mode;
        base.trials = config.trials;
        base.tolerance = config.tolerance.value_or(kDefaultTolerance);
        base.lambda_shift = config.lambda_shift;
        base.alphas = config.alphas;
        if (def.kind == ParamKind::Tube) {
          base.seed = config.seeds.empty() ? 0 : config.seeds.front();
          std::vector<surface::TubeSpec> specs;
          for (const auto& u : config.u_values) specs.push_back(surface::TubeSpec::from_u(m, u));
          if (mode == Mode::Float) {
            for (double r : config.r_values) specs.push_back(surface::TubeSpec::from_radius(m, r));
          }
          for (const auto& spec : specs) {
            CheckContext ctx = base;
            ctx.tube = spec;
            result.reports.push_back(run_check(def, ctx));
          }
        } else {
          for (auto seed : config.seeds) {
            CheckContext ctx = base;
            ctx.seed = seed;
            result.reports.push_back(run_check(def, ctx));
          }
        }
      }
    }
  }
  result.summary = summarize(result.reports);
  return result;
}

}  // namespace quadric::verify
