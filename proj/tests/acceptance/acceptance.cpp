// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <quadric-verify>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "quadric/cli/report_io.hpp"
#include "quadric/verify/suite.hpp"

using namespace quadric;
using namespace quadric::verify;

namespace {

int failures = 0;

void line(const std::string& id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << what << "  [" << detail
            << "]\n";
  if (!ok) ++failures;
}

struct Verdict {
  bool ok = true;
  int reports = 0;
  double worst = 0.0;  // largest float residual, raw for commutators
  double smallest = -1.0;  // smallest float residual of lower-bound probes
  std::string first_bad;
  double seconds = 0.0;
};

std::string describe(const Verdict& v) {
  std::ostringstream os;
  os << v.reports << " reports";
  if (v.worst > 0.0) os << ", max float residual " << v.worst;
  if (v.smallest >= 0.0) os << ", min float residual " << v.smallest;
  os << ", " << v.seconds << " s";
  if (!v.first_bad.empty()) os << ", first failure " << v.first_bad;
  return os.str();
}

/// Runs a configuration and judges it: every report must pass at the run's
/// tolerance, float commutators also on their raw (unnormalized) maximum.
Verdict judge(SuiteConfig cfg, double float_tol) {
  cfg.tolerance = float_tol;
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = run_suite(cfg);
  Verdict v;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : result.reports) {
    ++v.reports;
    bool ok = r.status == Status::Pass;
    if (r.mode == Mode::Float) {
      double value = r.residual.as_float();
      if (const auto raw = r.parameter("raw_max"); !raw.empty()) value = std::stod(raw);
      if (r.bound == Bound::AtMost) {
        v.worst = std::max(v.worst, value);
        ok = ok && value <= float_tol;
      } else {
        v.smallest = v.smallest < 0.0 ? value : std::min(v.smallest, value);
      }
    }
    if (!ok) {
      v.ok = false;
      if (v.first_bad.empty()) v.first_bad = r.label() + " residual=" + r.residual.to_string();
    }
  }
  if (v.reports == 0) {
    v.ok = false;
    v.first_bad = "no reports";
  }
  return v;
}

SuiteConfig config(std::vector<std::string> filters, std::vector<int> ms, bool exact,
                   bool floating) {
  SuiteConfig c;
  c.filters = std::move(filters);
  c.m_values = std::move(ms);
  c.exact = exact;
  c.floating = floating;
  c.u_values = {mpq_class(1, 2), 1, 2, 3};
  return c;
}

int run_exe(const std::string& exe, const std::string& args) {
  const std::string cmd = exe + " " + args + " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

cli::Json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return cli::Json::parse(f);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to quadric-verify>\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::vector<int> m36{3, 4, 5, 6}, m35{3, 4, 5};

  {
    auto exact = config({"tube.commuting_structure", "tube.commuting_rx"}, m36, true, false);
    auto flt = config({"tube.commuting_structure", "tube.commuting_rx"}, m36, false, true);
    flt.u_values.clear();
    flt.r_values = {0.2, 0.5, 0.9};
    const auto a = judge(exact, 1e-12);
    const auto b = judge(flt, 1e-12);
    const double total = a.seconds + b.seconds;
    line("1", a.ok && b.ok && total < 5.0,
         "tube: [R_N, R_xi] = 0 and [R_N, R_X] = 0 on a basis of C, exact zero / float <= 1e-12, < 5 s",
         "exact " + describe(a) + "; float " + describe(b));
  }
  {
    auto eig = config({"tube.principal_curvatures"}, m36, true, true);
    eig.r_values = {0.2, 0.5, 0.9};
    auto contact = config({"tube.contact"}, m36, true, true);
    contact.r_values = eig.r_values;
    const auto a = judge(eig, 1e-10);
    const auto b = judge(contact, 1e-12);
    const auto c = judge(config({"tube.trace"}, m36, true, false), 0.0);
    line("2", a.ok && b.ok && c.ok,
         "tube eigen table, contact identity (<= 1e-12), exact trace",
         "eigen " + describe(a) + "; contact " + describe(b) + "; trace " + describe(c));
  }
  {
    auto nj = config({"surface.normal_jacobi_routes"}, m35, false, true);
    nj.trials = 500;
    auto sj = config({"surface.structure_jacobi_routes", "surface.rx_routes"}, m35, false, true);
    sj.trials = 100;
    const auto a = judge(nj, 1e-12);
    const auto b = judge(sj, 1e-12);
    line("3", a.ok && b.ok,
         "R_N formula vs projected ambient Jacobi (500 normals); R_xi and R_X vs Gauss (100 instances)",
         "normal " + describe(a) + "; structure/RX " + describe(b));
  }
  {
    auto c = config({"model.curvature_symmetries"}, m35, true, true);
    c.trials = 100;
    const auto v = judge(c, 1e-12);
    line("4", v.ok, "curvature symmetries and first Bianchi, 100 float quadruples + exact instance",
         describe(v));
  }
  {
    const auto v = judge(config({"tube.principal_algebra"}, m36, true, false), 0.0);
    line("5", v.ok, "principal algebra on the tube, exact zero", describe(v));
  }
  {
    const auto v =
        judge(config({"tube.hopf_identity", "tube.phi_partner"}, m36, true, false), 0.0);
    line("6", v.ok, "Hopf pointwise identity on all basis pairs; phi-partner value 0 via alpha lambda = -2",
         describe(v));
  }
  {
    auto van = config({"isotropic.vanishing_reeb"}, m35, true, true);
    van.trials = 50;
    const auto a = judge(van, 1e-12);
    line("7a", a.ok, "isotropic, alpha = 0, constrained S: commutator <= 1e-12 (50 trials)",
         describe(a));
    auto non = config({"isotropic.nonvanishing_reeb"}, m35, false, true);
    non.trials = 50;
    non.alphas = {1.0};
    const auto b = judge(non, kNonvanishingThreshold);
    line("7b", b.ok, "isotropic, alpha = 1, constrained S: commutator > 1e-6 in every trial",
         describe(b));
  }
  {
    auto c = config({"model.singular_decomposition"}, m35, false, true);
    c.trials = 20;
    const auto v = judge(c, 1e-12);
    line("8", v.ok, "planted singular angle recovered within 1e-12, endpoint labels correct",
         describe(v));
  }
  {
    const auto v = judge(
        config({"tube.commuting_structure", "tube.commuting_rx"}, {3, 4}, true, false), 0.0);
    line("9", v.ok, "operator tables and the nine-case composed table, entrywise exact", describe(v));
  }
  {
    const int code = run_exe(exe, "");
    line("10a", code == 0, "default run exits 0", "exit code " + std::to_string(code));

    const auto tmp = std::filesystem::temp_directory_path();
    const auto bad = tmp / "quadric_acceptance_corrupt.json";
    const int bad_code =
        run_exe(exe, "--suite 'tube*' --perturb-lambda 1e-3 --format json --out " + bad.string());
    bool named = false;
    if (std::filesystem::exists(bad)) {
      const auto doc = read_json(bad);
      for (const auto& f : doc.at("summary").at("failing")) {
        named = named || f.get<std::string>().rfind("tube.commuting", 0) == 0;
      }
      std::filesystem::remove(bad);
    }
    line("10b", bad_code == 1 && named, "lambda perturbed by 1e-3 exits 1 naming the commuting check",
         "exit code " + std::to_string(bad_code) + (named ? ", commuting check named" : ", not named"));

    const auto out = tmp / "quadric_acceptance_default.json";
    const int json_code = run_exe(exe, "--format json --out " + out.string());
    bool same = false;
    if (std::filesystem::exists(out)) {
      const auto doc = read_json(out);
      const auto back = cli::from_json(doc);
      cli::RunConfig cfg;
      const auto again = cli::to_json(back, cfg);
      same = again.at("reports") == doc.at("reports") && again.at("summary") == doc.at("summary");
      for (std::size_t i = 0; same && i < back.reports.size(); ++i) {
        same = back.reports[i].residual.to_string() ==
               doc.at("reports")[i].at("residual").get<std::string>();
      }
      std::filesystem::remove(out);
    }
    line("10c", same && json_code != 2, "structured output round-trips losslessly",
         "json run exit " + std::to_string(json_code));

    const int rest = run_exe(
        exe, "--suite 'model*,surface*,tube*,principal*,regular*,isotropic.constrained*,"
             "isotropic.vanishing*,isotropic.defect*,isotropic.forced*'");
    std::cout << "INFO  default run without isotropic.nonvanishing_reeb exits " << rest << "\n";
  }

  std::cout << "\n" << failures << " criteria failing\n";
  return failures == 0 ? 0 : 1;
}
