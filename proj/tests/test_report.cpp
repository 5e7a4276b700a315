#include "doctest.h"
#include "speclab/quadrature.hpp"
#include "speclab/report.hpp"

#include <cmath>

using namespace speclab;

namespace {

VerificationReport sample() {
  VerificationReport r;
  r.command = "lt-check";
  r.parameters = {{"potential", "sech2:g=6"}, {"alpha", "1"}, {"sigma", "2"}};
  CheckResult c{"sharp-moment-bound", "sharp-lieb-thirring"};
  c.value = 0.964;
  c.tolerance = 1.005;
  c.pass = true;
  c.detail = "ratio of scaled moment to the phase-space bound";
  r.add(c);
  r.runtime_seconds = 0.125;
  r.seal();
  return r;
}

}  // namespace

TEST_CASE("report serialization round-trips") {
  const auto r = sample();
  const auto back = parse_report(serialize(r));
  CHECK(back == r);
}

TEST_CASE("input hash is stable and parameter-sensitive") {
  auto a = sample();
  auto b = sample();
  CHECK(a.input_hash == b.input_hash);
  b.parameters["alpha"] = "2";
  b.seal();
  CHECK(a.input_hash != b.input_hash);
}

TEST_CASE("all_pass aggregates check outcomes") {
  auto r = sample();
  CHECK(r.all_pass());
  CheckResult bad{"failing", "sum-rule"};
  bad.pass = false;
  r.add(bad);
  CHECK(!r.all_pass());
}

TEST_CASE("unknown schema is rejected") {
  auto j = to_json(sample());
  j["schema"] = "speclab-report/99";
  CHECK_THROWS(report_from_json(j));
}

TEST_CASE("adaptive quadrature on smooth and kinked integrands") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
        doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-11));
  CHECK(integrate([](double x) { return std::abs(x); }, -1.0, 2.0) ==
        doctest::Approx(2.5).epsilon(1e-10));
}

TEST_CASE("decay radius doubles out past the tail floor") {
  const double r =
      decay_radius([](double x) { return std::exp(-x * x); }, 1.0, 1.0);
  CHECK(std::exp(-r * r) < 1e-16);
  CHECK(r < 100.0);
}
