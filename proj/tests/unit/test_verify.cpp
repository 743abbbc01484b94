#include <doctest.h>

#include <algorithm>
#include <set>

#include "quadric/verify/suite.hpp"

using namespace quadric;
using namespace quadric::verify;

namespace {

const CheckDef& find_check(const std::string& name) {
  for (const auto& d : registry()) {
    if (d.name == name) return d;
  }
  throw PreconditionError("no check " + name);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("registry names are unique and cover the required anchors") {
    std::set<std::string> names, anchors;
    for (const auto& d : registry()) {
      CHECK(names.insert(d.name).second);
      anchors.insert(d.anchor);
      CHECK((d.exact || d.floating));
    }
    for (const auto& a : required_anchors()) {
      INFO(a);
      CHECK(anchors.count(a) == 1);
    }
  }

  TEST_CASE("residual bounds") {
    CHECK(residual_passes(Scalar(QSqrt2(0)), 1e-10, Bound::AtMost));
    CHECK_FALSE(residual_passes(Scalar(QSqrt2::ratio(1, 1000000)), 1e-10, Bound::AtMost));
    CHECK(residual_passes(Scalar(1e-11), 1e-10, Bound::AtMost));
    CHECK(residual_passes(Scalar(1e-5), 1e-6, Bound::Above));
    CHECK_FALSE(residual_passes(Scalar(1e-7), 1e-6, Bound::Above));
    CHECK(residual_passes(Scalar(QSqrt2(1)), 0.0, Bound::Above));
  }

  TEST_CASE("runs are deterministic for a fixed seed") {
    SuiteConfig cfg;
    cfg.m_values = {3};
    cfg.filters = {"surface.rx_routes", "isotropic.defect*", "tube.contact"};
    cfg.trials = 5;
    const auto a = run_suite(cfg);
    const auto b = run_suite(cfg);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      CHECK(a.reports[i].label() == b.reports[i].label());
      CHECK(a.reports[i].residual == b.reports[i].residual);
    }
    cfg.seeds = {43};
    cfg.exact = false;
    const auto c = run_suite(cfg);
    const auto differs = std::any_of(c.reports.begin(), c.reports.end(), [&](const CheckReport& r) {
      for (const auto& o : a.reports) {
        if (o.name == r.name && o.mode == r.mode && o.name != "tube.contact") {
          return !(o.residual == r.residual);
        }
      }
      return false;
    });
    CHECK(differs);
  }

  TEST_CASE("summary tallies") {
    std::vector<CheckReport> reports(5);
    reports[0].name = "tube.a";
    reports[1].name = "tube.b";
    reports[1].status = Status::Fail;
    reports[2].name = "model.c";
    reports[2].status = Status::Skipped;
    reports[3].name = "model.d";
    reports[3].status = Status::SetupError;
    reports[4].name = "model.e";
    const auto s = summarize(reports);
    CHECK(s.total == 5);
    CHECK(s.passed == 2);
    CHECK(s.failed == 1);
    CHECK(s.skipped == 1);
    CHECK(s.setup_errors == 1);
    CHECK(s.by_category.at("tube") == CategoryCounts{1, 1, 0, 0});
    CHECK(s.by_category.at("model") == CategoryCounts{1, 0, 1, 1});
    CHECK(s.failing.size() == 2);
    SuiteResult r{reports, s};
    CHECK_FALSE(r.all_passed());
  }

  TEST_CASE("exceptions become setup errors") {
    const CheckDef broken{"model.broken", "x", ParamKind::Seeded, true, true,
                          [](const CheckContext&) -> CheckReport {
                            throw PreconditionError("boom");
                          }};
    CheckContext ctx;
    const auto r = run_check(broken, ctx);
    CHECK(r.status == Status::SetupError);
    CHECK(r.message == "boom");
    // A tube check without tube parameters cannot run.
    CHECK(run_check(find_check("tube.trace"), ctx).status == Status::SetupError);
  }

  TEST_CASE("regular-case constraints skip when beta = 0") {
    CheckContext ctx;
    ctx.alphas = {1.0, 0.0};
    const auto r = run_check(find_check("regular.forced_shape_value"), ctx);
    CHECK(r.status == Status::Skipped);
    ctx.alphas = {1.0, 0.5};
    CHECK(run_check(find_check("regular.forced_shape_value"), ctx).status == Status::Pass);
  }

  TEST_CASE("a perturbed tube fails the commuting table checks") {
    CheckContext ctx;
    ctx.mode = Mode::Exact;
    ctx.tube = surface::TubeSpec::from_u(3, 1);
    CHECK(run_check(find_check("tube.commuting_rx"), ctx).status == Status::Pass);
    ctx.lambda_shift = mpq_class(1, 1000);
    const auto r = run_check(find_check("tube.commuting_rx"), ctx);
    CHECK(r.status == Status::Fail);
    CHECK(r.message.find("X=") != std::string::npos);
  }

  TEST_CASE("non-vanishing probes report a lower bound") {
    CheckContext ctx;
    ctx.trials = 5;
    const auto control = run_check(find_check("principal.noncommuting_control"), ctx);
    CHECK(control.bound == Bound::Above);
    CHECK(control.status == Status::Pass);
    CHECK(control.residual.as_float() > kNonvanishingThreshold);
  }
}
