#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "speclab/discretize.hpp"
#include "speclab/eigensolve.hpp"
#include "speclab/moments.hpp"

using namespace speclab;

namespace {

PotentialSpec zero_potential(double reach) {
  return PotentialSpec::grid({-reach, reach}, {0.0, 0.0});
}

}  // namespace

TEST_CASE("hamiltonian assembly: structure and grid layout") {
  const auto H = build_hamiltonian(PotentialSpec::harmonic(1.0), 2.0,
                                   DiscretizationConfig{10.0, 99});
  CHECK(H.size() == 99);
  CHECK(H.spacing == doctest::Approx(20.0 / 100.0));
  CHECK(H.off_diagonal == doctest::Approx(-2.0 / (H.spacing * H.spacing)));
  CHECK(H.grid_point(0) == doctest::Approx(-10.0 + H.spacing));
  CHECK(H.grid_point(98) == doctest::Approx(10.0 - H.spacing));
  CHECK(H.diagonal[49] == doctest::Approx(2.0 * 2.0 / (H.spacing * H.spacing) +
                                          H.grid_point(49) * H.grid_point(49)));
  CHECK_THROWS(build_hamiltonian(PotentialSpec::harmonic(1.0), -1.0,
                                 DiscretizationConfig{10.0, 99}));
  CHECK_THROWS(build_hamiltonian(PotentialSpec::harmonic(1.0), 1.0,
                                 DiscretizationConfig{10.0, 2}));
}

TEST_CASE("free matrix eigenvalues match the Toeplitz closed form") {
  const int n = 120;
  const double alpha = 1.7;
  const auto H =
      build_hamiltonian(zero_potential(30.0), alpha, DiscretizationConfig{5.0, n});
  const auto s = full_spectrum(H, false);
  const double h = H.spacing;
  for (int k = 1; k <= n; ++k) {
    const double exact =
        2.0 * alpha / (h * h) * (1.0 - std::cos(k * std::numbers::pi / (n + 1)));
    CHECK(s.eigenvalues[k - 1] ==
          doctest::Approx(exact).epsilon(1e-12).scale(H.norm_bound()));
  }
}

TEST_CASE("oscillator ground state energy converges to 1") {
  const auto H = build_hamiltonian(PotentialSpec::harmonic(1.0), 1.0,
                                   standard_confining_grid());
  const auto ev = eigenvalues_in(H, -1.0, 2.0, 1e-12);
  REQUIRE(ev.size() == 1);
  CHECK(std::abs(ev[0] - 1.0) < 1e-5);
}

TEST_CASE("second-order refinement for the reflectionless well") {
  double err[2];
  int idx = 0;
  for (int n : {1999, 3999}) {
    const auto s = negative_spectrum(PotentialSpec::sech2(6.0), 1.0,
                                     DiscretizationConfig{20.0, n});
    REQUIRE(s.size() == 2);
    err[idx++] = std::abs(s.eigenvalues[0] + 4.0);
  }
  const double ratio = err[0] / err[1];
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("separable composition enumerates sums below the cutoff") {
  Spectrum odd;
  odd.eigenvalues = {1.0, 3.0, 5.0, 7.0};
  const auto two = compose_separable({odd, odd}, 4.5);
  CHECK(two.eigenvalues == std::vector<double>{2.0, 4.0, 4.0});

  const auto one = compose_separable({odd}, 6.0);
  CHECK(one.eigenvalues == std::vector<double>{1.0, 3.0, 5.0});

  Spectrum pt;
  pt.eigenvalues = {-4.0, -1.0};
  const auto sum = compose_separable({pt, pt}, 0.0);
  CHECK(sum.eigenvalues == std::vector<double>{-8.0, -5.0, -5.0, -2.0});
  CHECK(sum.dimension == 2);

  CHECK(compose_separable({odd, odd}, 1.0).eigenvalues.empty());
}

TEST_CASE("composition size matches brute-force tuple counting") {
  Spectrum a, b, c;
  a.eigenvalues = {-2.0, -0.5, 1.0, 2.5};
  b.eigenvalues = {-1.0, 0.25, 3.0};
  c.eigenvalues = {-3.0, 0.0, 0.5};
  const double cutoff = 0.75;
  int count = 0;
  for (double x : a.eigenvalues)
    for (double y : b.eigenvalues)
      for (double z : c.eigenvalues)
        if (x + y + z <= cutoff) ++count;
  CHECK(static_cast<int>(compose_separable({a, b, c}, cutoff).eigenvalues.size()) ==
        count);
}
