#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "speclab/potentials.hpp"

using namespace speclab;
namespace nb = std::numbers;

TEST_CASE("potential evaluation closed forms") {
  CHECK(evaluate(PotentialSpec::sech2(6.0), 0.0) == doctest::Approx(-6.0));
  CHECK(evaluate(PotentialSpec::harmonic(1.0), 2.0) == doctest::Approx(4.0));
  CHECK(evaluate(PotentialSpec::square(1.0, 1.0), 1.5) == 0.0);
  CHECK(evaluate(PotentialSpec::square(1.0, 1.0), 0.3) == -1.0);
  CHECK(evaluate(PotentialSpec::gaussian(2.0, 1.0), 0.0) == doctest::Approx(-2.0));
  CHECK(evaluate(PotentialSpec::quartic(3.0), 2.0) == doctest::Approx(48.0));
}

TEST_CASE("decay and confinement classification by sampling") {
  for (const auto& w : {PotentialSpec::sech2(6.0), PotentialSpec::square(1.0, 1.0),
                        PotentialSpec::gaussian(1.0, 1.0)}) {
    CHECK(w.decaying());
    CHECK(!w.confining());
    for (double x : {-7.0, -1.0, 0.0, 2.0, 9.0}) CHECK(evaluate(w, x) <= 0.0);
    CHECK(std::abs(evaluate(w, 50.0)) < 1e-8);
  }
  for (const auto& c : {PotentialSpec::harmonic(1.0), PotentialSpec::quartic(1.0)}) {
    CHECK(c.confining());
    CHECK(!c.decaying());
    for (double x : {-3.0, 0.0, 3.0}) CHECK(evaluate(c, x) >= 0.0);
    CHECK(evaluate(c, 100.0) >= 1e4);
  }
}

TEST_CASE("separable evaluation sums factors coordinate-wise") {
  const auto s = PotentialSpec::separable(
      {PotentialSpec::harmonic(1.0), PotentialSpec::harmonic(4.0)});
  CHECK(s.dimension == 2);
  CHECK(evaluate(s, {1.0, 2.0}) == doctest::Approx(1.0 + 16.0));
}

TEST_CASE("gamma function: exact half-integer recurrence") {
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(nb::pi)).epsilon(1e-14));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(3.5) ==
        doctest::Approx(15.0 * std::sqrt(nb::pi) / 8.0).epsilon(1e-14));
  CHECK(gamma_fn(2.3) == doctest::Approx(std::tgamma(2.3)).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
}

TEST_CASE("classical constant values and d-monotonicity") {
  CHECK(classical_constant(2.0, 1) ==
        doctest::Approx(8.0 / (15.0 * nb::pi)).epsilon(1e-10));
  CHECK(classical_constant(0.0, 1) == doctest::Approx(1.0 / nb::pi).epsilon(1e-10));
  CHECK(classical_constant(1.5, 1) == doctest::Approx(0.1875).epsilon(1e-10));
  for (double sigma : {0.0, 1.0, 2.0, 2.7})
    for (int d = 1; d < 5; ++d)
      CHECK(classical_constant(sigma, d + 1) < classical_constant(sigma, d));
  CHECK_THROWS_AS(classical_constant(-0.1, 1), std::domain_error);
}

TEST_CASE("phase-space integrals against closed forms") {
  CHECK(phase_space_integral(PotentialSpec::sech2(6.0), 2.5) ==
        doctest::Approx(std::pow(6.0, 2.5) * 3.0 * nb::pi / 8.0).epsilon(1e-9));
  CHECK(phase_space_integral(PotentialSpec::square(1.0, 1.0), 2.5) ==
        doctest::Approx(2.0));
  CHECK(phase_space_integral(PotentialSpec::gaussian(1.0, 1.0), 1.0) ==
        doctest::Approx(std::sqrt(nb::pi)).epsilon(1e-9));
  CHECK_THROWS_AS(phase_space_integral(PotentialSpec::harmonic(1.0), 2.0),
                  std::domain_error);
}

TEST_CASE("square-well phase-space integral scales as depth^exponent") {
  const double base = phase_space_integral(PotentialSpec::square(1.0, 1.5), 2.5);
  const double scaled = phase_space_integral(PotentialSpec::square(3.0, 1.5), 2.5);
  CHECK(scaled / base == doctest::Approx(std::pow(3.0, 2.5)).epsilon(1e-12));
}

TEST_CASE("laplace integrals against closed forms, decreasing in t") {
  CHECK(laplace_integral(PotentialSpec::harmonic(1.0), 1.0) ==
        doctest::Approx(std::sqrt(nb::pi)).epsilon(1e-9));
  CHECK(laplace_integral(PotentialSpec::harmonic(1.0), 4.0) ==
        doctest::Approx(std::sqrt(nb::pi / 4.0)).epsilon(1e-9));
  CHECK(laplace_integral(PotentialSpec::quartic(1.0), 1.0) ==
        doctest::Approx(2.0 * gamma_fn(1.25)).epsilon(1e-9));
  double prev = 1e300;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double v = laplace_integral(PotentialSpec::quartic(2.0), t);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(laplace_integral(PotentialSpec::sech2(6.0), 1.0),
                  std::domain_error);
}

TEST_CASE("separable laplace integral is the product of factors") {
  const auto s = PotentialSpec::separable(
      {PotentialSpec::harmonic(1.0), PotentialSpec::harmonic(1.0)});
  CHECK(laplace_integral(s, 1.0) == doctest::Approx(nb::pi).epsilon(1e-9));
}

TEST_CASE("classical bound is the exact product of its parts") {
  const auto b = classical_bound(PotentialSpec::sech2(6.0), 2.0);
  CHECK(b.bound ==
        doctest::Approx(b.classical_constant * b.phase_space_integral)
            .epsilon(1e-12));
  CHECK(b.bound == doctest::Approx(17.63525).epsilon(1e-4));
}

TEST_CASE("grid potential: csv read, interpolation, range error") {
  const char* path = "test_grid_potential.csv";
  {
    std::ofstream f(path);
    f << "x,V\n-2,0\n-1,-1\n0,-2\n1,-1\n2,0\n";
  }
  const auto g = read_grid_potential_csv(path);
  CHECK(g.decaying());
  CHECK(evaluate(g, 0.0) == doctest::Approx(-2.0));
  CHECK(evaluate(g, 0.5) == doctest::Approx(-1.5));
  CHECK_THROWS_AS(evaluate(g, 3.0), std::out_of_range);
  // trapezoid phase-space integral: piecewise-linear (-V)^1 integrates to 4
  CHECK(phase_space_integral(g, 1.0) == doctest::Approx(4.0));
  std::remove(path);
}

TEST_CASE("spec factories validate parameters") {
  CHECK_THROWS(PotentialSpec::sech2(-1.0));
  CHECK_THROWS(PotentialSpec::square(1.0, 0.0));
  CHECK_THROWS(PotentialSpec::grid({1.0, 0.5}, {0.0, 0.0}));
}
