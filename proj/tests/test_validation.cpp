#include <cmath>

#include <doctest.h>

#include "spintensor/validation.hpp"

using namespace spintensor;

TEST_CASE("check result comparator flags deviations beyond tolerance") {
  CheckResult ok{"ok", 10, 5e-13, 1e-12};
  CheckResult bad{"bad", 10, 1e-6, 1e-12};
  CHECK(ok.pass());
  CHECK(!bad.pass());
  ValidationReport r{{ok, bad}};
  CHECK(!r.all_pass());
}

TEST_CASE("validation suite passes at reduced sample count") {
  const ValidationReport report = run_validation(500, 777);
  for (const CheckResult& c : report.checks) {
    INFO(c.name, " max dev ", c.max_abs_dev, " tol ", c.tolerance);
    CHECK(c.pass());
  }
  CHECK(report.all_pass());
  CHECK(report.checks.size() == 17);
}

TEST_CASE("validation is deterministic for a fixed seed") {
  const ValidationReport a = run_validation(200, 42);
  const ValidationReport b = run_validation(200, 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].max_abs_dev == b.checks[i].max_abs_dev);  // bitwise
  }
}

TEST_CASE("oracle path values agree with closed forms at a reference point") {
  const Velocity v(0.3, 0.4, 0.2);
  CHECK(std::fabs(oracle_path_value(Formula::Eq7, v) - prob_eq7(v)) < 1e-13);
  CHECK(std::fabs(oracle_path_value(Formula::Eq4, v) -
                  prob_eq4(momentum_from_velocity(v))) < 1e-13);
}
