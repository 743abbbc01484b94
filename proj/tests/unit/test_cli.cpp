#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "quadric/cli/config.hpp"
#include "quadric/cli/report_io.hpp"

using namespace quadric;
using namespace quadric::cli;

namespace {

ParseOutcome parse(std::vector<const char*> args) {
  args.insert(args.begin(), "quadric-verify");
  return parse_args(static_cast<int>(args.size()), args.data());
}

int run_exe(const std::string& args) {
  const std::string cmd = std::string(QUADRIC_VERIFY_EXE) + " " + args + " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("defaults") {
    const auto p = parse({});
    REQUIRE(p.config);
    const auto& s = p.config->suite;
    CHECK(s.m_values == std::vector<int>{3, 4, 5});
    CHECK(s.exact);
    CHECK(s.floating);
    CHECK(s.u_values == std::vector<mpq_class>{mpq_class(1, 2), 1, 2});
    CHECK(s.seeds == std::vector<std::uint64_t>{42});
    CHECK(p.config->format == Format::Text);
    CHECK_FALSE(p.config->out);
  }

  TEST_CASE("flag mapping") {
    const auto p = parse({"--m", "3", "--mode", "exact", "--u", "3/2", "--suite", "tube*"});
    REQUIRE(p.config);
    CHECK(p.config->suite.m_values == std::vector<int>{3});
    CHECK_FALSE(p.config->suite.floating);
    CHECK(p.config->suite.u_values == std::vector<mpq_class>{mpq_class(3, 2)});
    CHECK(p.config->suite.filters == std::vector<std::string>{"tube*"});
    const auto q = parse({"--mode", "float", "--r", "0.2,0.5", "--perturb-lambda", "1e-3",
                          "--format", "json"});
    REQUIRE(q.config);
    CHECK(q.config->suite.r_values == std::vector<double>{0.2, 0.5});
    CHECK(q.config->suite.u_values.empty());
    CHECK(q.config->suite.lambda_shift == mpq_class(1, 1000));
    CHECK(q.config->format == Format::Json);
  }

  TEST_CASE("usage errors exit 2") {
    for (const auto& args : std::vector<std::vector<const char*>>{
             {"--m", "2"},
             {"--bogus"},
             {"--mode", "exact", "--r", "0.3"},
             {"--u", "abc"},
             {"--m", "3,,4"},
             {"--format", "xml"},
             {"--r", "2.0"}}) {
      const auto p = parse(args);
      CHECK_FALSE(p.config);
      CHECK(p.exit_code == 2);
    }
    CHECK(parse({"--m", "2"}).output.find("at least 3") != std::string::npos);
    const auto help = parse({"--help"});
    CHECK_FALSE(help.config);
    CHECK(help.exit_code == 0);
  }

  TEST_CASE("json output round-trips") {
    auto p = parse({"--m", "3", "--suite", "tube.trace,surface.frame*,isotropic.forced*",
                    "--trials", "3", "--format", "json"});
    REQUIRE(p.config);
    const auto result = verify::run_suite(p.config->suite);
    const auto doc = to_json(result, *p.config);
    const auto back = from_json(Json::parse(doc.dump()));
    REQUIRE(back.reports.size() == result.reports.size());
    for (std::size_t i = 0; i < back.reports.size(); ++i) {
      const auto& a = result.reports[i];
      const auto& b = back.reports[i];
      CHECK(a.label() == b.label());
      CHECK(a.residual == b.residual);
      CHECK(a.status == b.status);
      CHECK(a.parameters == b.parameters);
    }
    CHECK(back.summary == result.summary);
    CHECK(to_json(back, *p.config) == doc);
    CHECK(doc.at("version") == kReportVersion);
  }

  TEST_CASE("emit_report exit codes") {
    auto p = parse({"--m", "3", "--suite", "tube.trace"});
    REQUIRE(p.config);
    auto result = verify::run_suite(p.config->suite);
    std::ostringstream out, err;
    CHECK(emit_report(result, *p.config, out, err) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
    result.reports.front().status = verify::Status::Fail;
    result.summary = verify::summarize(result.reports);
    std::ostringstream out2;
    CHECK(emit_report(result, *p.config, out2, err) == 1);
    CHECK(out2.str().find("failing:\n  tube.trace") != std::string::npos);
    p.config->out = "/nonexistent-dir/report.json";
    CHECK(emit_report(result, *p.config, out2, err) == 2);
  }

  TEST_CASE("executable exit codes") {
    CHECK(run_exe("--m 2") == 2);
    CHECK(run_exe("--no-such-flag") == 2);
    CHECK(run_exe("--m 3 --suite tube.trace") == 0);
    CHECK(run_exe("--m 3 --suite tube.commuting_rx --perturb-lambda 1/1000") == 1);
    CHECK(run_exe("--m 3 --suite tube.trace --out /nonexistent-dir/x.txt") == 2);
    const auto path = std::filesystem::temp_directory_path() / "quadric_cli_test.json";
    CHECK(run_exe("--m 3 --suite tube.trace --format json --out " + path.string()) == 0);
    std::ifstream f(path);
    const auto doc = Json::parse(f);
    CHECK(doc.at("summary").at("passed") == doc.at("summary").at("total"));
    std::filesystem::remove(path);
  }
}
