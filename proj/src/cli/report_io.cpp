#include "quadric/cli/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace quadric::cli {

using json = Json;
using verify::CheckReport;
using verify::SuiteResult;

namespace {

std::string upper_status(verify::Status s) {
  switch (s) {
    case verify::Status::Pass:
      return "PASS";
    case verify::Status::Fail:
      return "FAIL";
    case verify::Status::Skipped:
      return "SKIP";
    case verify::Status::SetupError:
      return "ERROR";
  }
  return "?";
}

json counts_json(const verify::CategoryCounts& c) {
  return {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped},
          {"setup_errors", c.setup_errors}};
}

json config_json(const RunConfig& cfg) {
  const auto& s = cfg.suite;
  json u = json::array(), seeds = json::array();
  for (const auto& x : s.u_values) u.push_back(rational_to_string(x));
  for (auto x : s.seeds) seeds.push_back(x);
  json doc = {{"m", s.m_values},
              {"mode", cfg.mode},
              {"u", u},
              {"r", s.r_values},
              {"seeds", seeds},
              {"trials", s.trials},
              {"tolerance", s.tolerance.value_or(verify::kDefaultTolerance)},
              {"suite", s.filters},
              {"format", cfg.format == Format::Json ? "json" : "text"},
              {"perturb_lambda", rational_to_string(s.lambda_shift)}};
  doc["out"] = cfg.out ? json(*cfg.out) : json(nullptr);
  return doc;
}

}  // namespace

std::string format_text(const SuiteResult& result) {
  std::ostringstream os;
  for (const auto& r : result.reports) {
    os << std::left << std::setw(6) << upper_status(r.status) << r.label() << "  {" << r.anchor
       << "}  residual=" << r.residual.to_string();
    if (r.mode == Mode::Float || r.bound == verify::Bound::Above) {
      os << (r.bound == verify::Bound::AtMost ? " <= " : " > ");
      os << (r.mode == Mode::Exact ? std::string("0") : FieldTraits<double>::to_string(r.tolerance));
    }
    if (!r.message.empty() && !r.passed()) os << "  (" << r.message << ")";
    os << '\n';
  }
  const auto& s = result.summary;
  os << "\n" << s.total << " checks: " << s.passed << " passed, " << s.failed << " failed, "
     << s.skipped << " skipped, " << s.setup_errors << " setup errors\n";
  for (const auto& [cat, c] : s.by_category) {
    os << "  " << std::left << std::setw(10) << cat << c.passed << " passed, " << c.failed
       << " failed, " << c.skipped << " skipped, " << c.setup_errors << " errors\n";
  }
  if (!s.failing.empty()) {
    os << "failing:\n";
    for (const auto& f : s.failing) os << "  " << f << '\n';
  }
  return os.str();
}

json to_json(const SuiteResult& result, const RunConfig& config) {
  json reports = json::array();
  for (const auto& r : result.reports) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    reports.push_back({{"name", r.name},
                       {"anchor", r.anchor},
                       {"mode", std::string(to_string(r.mode))},
                       {"residual", r.residual.to_string()},
                       {"tolerance", r.tolerance},
                       {"bound", std::string(verify::to_string(r.bound))},
                       {"status", std::string(verify::to_string(r.status))},
                       {"passed", r.passed()},
                       {"seed", r.seed},
                       {"parameters", params},
                       {"elapsed_ns", r.elapsed_ns},
                       {"message", r.message}});
  }
  const auto& s = result.summary;
  json by_cat = json::object();
  for (const auto& [cat, c] : s.by_category) by_cat[cat] = counts_json(c);
  json summary = {{"total", s.total},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"skipped", s.skipped},
                  {"setup_errors", s.setup_errors},
                  {"by_category", by_cat},
                  {"failing", s.failing},
                  {"all_passed", result.all_passed()}};
  return {{"version", kReportVersion},
          {"config", config_json(config)},
          {"reports", reports},
          {"summary", summary}};
}

SuiteResult from_json(const json& doc) {
  SuiteResult result;
  for (const auto& j : doc.at("reports")) {
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    r.mode = mode == "exact" ? Mode::Exact : Mode::Float;
    r.residual = Scalar::parse(r.mode, j.at("residual").get<std::string>());
    r.tolerance = j.at("tolerance").get<double>();
    r.bound = verify::bound_from_string(j.at("bound").get<std::string>());
    r.status = verify::status_from_string(j.at("status").get<std::string>());
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("parameters").items()) {
      r.parameters.emplace_back(k, v.get<std::string>());
    }
    r.elapsed_ns = j.at("elapsed_ns").get<std::int64_t>();
    r.message = j.at("message").get<std::string>();
    result.reports.push_back(std::move(r));
  }
  const auto& s = doc.at("summary");
  result.summary.total = s.at("total").get<int>();
  result.summary.passed = s.at("passed").get<int>();
  result.summary.failed = s.at("failed").get<int>();
  result.summary.skipped = s.at("skipped").get<int>();
  result.summary.setup_errors = s.at("setup_errors").get<int>();
  for (const auto& [cat, c] : s.at("by_category").items()) {
    result.summary.by_category[cat] = {c.at("passed").get<int>(), c.at("failed").get<int>(),
                                       c.at("skipped").get<int>(), c.at("setup_errors").get<int>()};
  }
  result.summary.failing = s.at("failing").get<std::vector<std::string>>();
  return result;
}

int emit_report(const SuiteResult& result, const RunConfig& config, std::ostream& console,
                std::ostream& errors) {
  const std::string text =
      config.format == Format::Json ? to_json(result, config).dump(2) + "\n" : format_text(result);
  if (config.out) {
    std::ofstream f(*config.out);
    if (!f || !(f << text) || !f.flush()) {
      errors << "error: cannot write report to '" << *config.out << "'\n";
      return 2;
    }
  } else {
    console << text;
  }
  return result.all_passed() ? 0 : 1;
}

}  // namespace quadric::cli
