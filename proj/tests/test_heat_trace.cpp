#include <cmath>

#include "doctest.h"
#include "speclab/heat_trace.hpp"

using namespace speclab;

TEST_CASE("oscillator heat trace against the geometric series") {
  const auto r1 = heat_trace(PotentialSpec::harmonic(1.0), 1.0, 1.0,
                             standard_confining_grid());
  CHECK(std::abs(r1.value - 0.5 / std::sinh(1.0)) < 1e-5);
  CHECK(r1.tail_bound <= 1e-9 * r1.value);

  const auto r2 = heat_trace(PotentialSpec::harmonic(1.0), 1.0, 2.0,
                             standard_confining_grid());
  CHECK(std::abs(r2.value - 0.5 / std::sinh(2.0)) < 1e-5);

  // deep in the gap: single-term dominance
  const auto r20 = heat_trace(PotentialSpec::harmonic(1.0), 1.0, 20.0,
                              standard_confining_grid());
  CHECK(std::abs(r20.value - std::exp(-20.0)) / std::exp(-20.0) < 1e-3);

  CHECK_THROWS_AS(heat_trace(PotentialSpec::sech2(6.0), 1.0, 1.0,
                             standard_confining_grid()),
                  std::domain_error);
}

TEST_CASE("explicit cutoff below the certified tail raises with a suggestion") {
  try {
    heat_trace(PotentialSpec::harmonic(1.0), 1.0, 1.0,
               standard_confining_grid(), /*cutoff=*/2.0);
    FAIL("expected CutoffTooLow");
  } catch (const CutoffTooLow& e) {
    CHECK(e.suggested_cutoff > 2.0);
  }
  // generous explicit cutoff is accepted
  CHECK_NOTHROW(heat_trace(PotentialSpec::harmonic(1.0), 1.0, 1.0,
                           standard_confining_grid(), 80.0));
}

TEST_CASE("phase-space bound on the heat trace") {
  const auto g = golden_thompson_check(PotentialSpec::harmonic(1.0), 1.0, 1.0, 1,
                                       standard_confining_grid());
  CHECK(std::abs(g.trace - 0.42546) < 1e-4);
  CHECK(std::abs(g.bound - 0.5) < 1e-9);
  CHECK(std::abs(g.ratio - 0.8509) < 1e-3);

  // small-t sharpness: ratio = t sqrt(a) / sinh(t sqrt(a))
  const auto tight = golden_thompson_check(PotentialSpec::harmonic(1.0), 1.0, 0.1,
                                           1, standard_confining_grid());
  CHECK(std::abs(tight.ratio - 0.1 / std::sinh(0.1)) < 5e-4);

  const auto quart = golden_thompson_check(PotentialSpec::quartic(1.0), 1.0, 1.0,
                                           1, standard_confining_grid());
  CHECK(quart.ratio <= 1.0);
}

TEST_CASE("ratio increases monotonically as t decreases") {
  double prev = 0.0;
  for (double t : {2.0, 1.0, 0.5, 0.25}) {
    const auto g = golden_thompson_check(PotentialSpec::harmonic(1.0), 1.0, t, 1,
                                         standard_confining_grid());
    CHECK(g.ratio > prev);
    prev = g.ratio;
  }
}

TEST_CASE("separable product: two-dimensional oscillator") {
  const auto g = golden_thompson_check(PotentialSpec::harmonic(1.0), 1.0, 1.0, 2,
                                       standard_confining_grid());
  const double exact = std::pow(0.5 / std::sinh(1.0), 2);
  CHECK(std::abs(g.trace - exact) < 1e-4);
  CHECK(g.ratio <= 1.0);
  CHECK(oscillator_exact_heat_trace(1.0, 1.0, 2) ==
        doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("scaled heat curves are non-increasing") {
  const auto grid = geometric_grid(0.1, 10.0, 20);
  const auto exact = exact_oscillator_heat_curve(1.0, grid, 1);
  CHECK(exact.verdict.non_increasing);
  CHECK(exact.verdict.slack_used == 0.0);
  const auto exact_t2 = exact_oscillator_heat_curve(2.0, grid, 1);
  CHECK(exact_t2.verdict.non_increasing);

  const auto numeric = scaled_heat_curve(PotentialSpec::quartic(1.0), 1.0,
                                         geometric_grid(0.25, 4.0, 10), 1,
                                         standard_confining_grid(), 1e-6);
  CHECK(numeric.verdict.non_increasing);
  CHECK(numeric.curve.truncation_tail_bound <
        1e-8 * numeric.curve.values.back());
}

TEST_CASE("numeric curve tracks the exact scaled oscillator curve") {
  const auto grid = geometric_grid(0.25, 4.0, 6);
  const auto numeric = scaled_heat_curve(PotentialSpec::harmonic(1.0), 1.0, grid,
                                         1, standard_confining_grid(), 1e-6);
  for (size_t i = 0; i < grid.size(); ++i) {
    const double exact =
        std::sqrt(grid[i]) * oscillator_exact_heat_trace(grid[i], 1.0, 1);
    // O(h^2) eigenvalue bias on the fixed confining grid, ~1.4e-5 worst case
    CHECK(std::abs(numeric.curve.values[i] - exact) < 5e-5);
  }
}
