#include <doctest.h>

#include "csq/verification.hpp"

using namespace csq;

TEST_CASE("invariant suite passes on seeded inputs") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const VerifyReport report = run_verification(seed);
    CHECK(report.all_pass);
    CHECK(report.checks.size() >= 20);
    for (const CheckResult& c : report.checks) {
      INFO("check: ", c.name, " measured ", c.measured);
      CHECK(c.pass);
      CHECK(c.measured <= c.tolerance);
    }
  }
}

TEST_CASE("report text is deterministic for a fixed seed") {
  const std::string a = format_report(run_verification(7), 7);
  const std::string b = format_report(run_verification(7), 7);
  CHECK(a == b);
  CHECK(a.find("invariant suite (seed 7)") == 0);
  CHECK(a.find("FAIL") == std::string::npos);
  CHECK(a.rfind("checks passed\n") == a.size() - 14);
}

TEST_CASE("an impossible tolerance override fails every check") {
  const VerifyReport report = run_verification(0, 1e-30);
  CHECK(!report.all_pass);
  bool any_fail = false;
  for (const CheckResult& c : report.checks) {
    CHECK(c.tolerance == 1e-30);
    if (!c.pass) any_fail = true;
  }
  CHECK(any_fail);
  const std::string text = format_report(report, 0);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("FAILED") != std::string::npos);
}

TEST_CASE("a loose tolerance override passes every check") {
  const VerifyReport report = run_verification(0, 1.0);
  CHECK(report.all_pass);
  for (const CheckResult& c : report.checks) CHECK(c.tolerance == 1.0);
}
