#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "speclab/eigensolve.hpp"
#include "speclab/potentials.hpp"

namespace speclab {

struct MomentCurve {
  double sigma = 2.0;
  int dimension = 1;
  std::vector<double> alpha_grid;  // strictly increasing
  std::vector<double> values;      // alpha^{d/2} sum_{E<z} (z-E)^sigma
  double z = 0.0;
  SpectrumSource source = SpectrumSource::Numeric;
  std::vector<int> bound_state_counts;
};

struct MonotonicityVerdict {
  bool non_increasing = true;
  double max_violation = 0.0;  // largest positive successive difference
  std::optional<std::pair<double, double>> violation_location;
  double slack_used = 0.0;
};

// sum over E_j < z of (z - E_j)^sigma; sigma = 0 counts states.
double riesz_mean(const Spectrum& spectrum, double sigma, double z);

MomentCurve moment_curve(const PotentialSpec& spec, double sigma,
                         const std::vector<double>& alpha_grid, int d,
                         const DiscretizationConfig& config, double z = 0.0,
                         Exec exec = Exec::Parallel);

// Closed-form reflectionless-well spectrum: E_n = -alpha (s - n)^2 for
// n < s, with s = (-1 + sqrt(1 + 4 g / alpha)) / 2.
Spectrum poschl_teller_spectrum(double g, double alpha);

MomentCurve exact_poschl_teller_moment_curve(double g, double sigma,
                                             const std::vector<double>& alpha_grid,
                                             double z = 0.0);

MonotonicityVerdict check_monotonicity(const MomentCurve& curve, double slack);
// Generic helper shared with the heat-trace curves.
MonotonicityVerdict check_non_increasing(const std::vector<double>& grid,
                                         const std::vector<double>& values,
                                         double slack);

struct LtCheck {
  double scaled_moment = 0.0;
  double classical_bound = 0.0;
  double ratio = 0.0;
  int bound_states = 0;
};

// Sharp bound check, sigma >= 2 only.
LtCheck lt_check(const PotentialSpec& spec, double sigma, double alpha, int d,
                 const DiscretizationConfig& config);

struct BranchCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FeynmanHellmann {
  double central_difference = 0.0;  // (E_j(a+d) - E_j(a-d)) / 2d
  double kinetic_energy = 0.0;      // T_j = ||D_c phi_j||^2 at alpha
  double residual = 0.0;
};

FeynmanHellmann feynman_hellmann(const PotentialSpec& spec, double alpha, int j,
                                 double delta, const DiscretizationConfig& config);
double feynman_hellmann_residual(const PotentialSpec& spec, double alpha, int j,
                                 double delta, const DiscretizationConfig& config);

struct ALCheck {
  double lhs = 0.0, rhs = 0.0, residual = 0.0;  // residual relative
};

// (-E)^sigma = B(sigma-2, 3)^{-1} * int_0^inf tau^{sigma-3} (-E-tau)_+^2 dtau.
ALCheck aizenman_lieb_identity(double E, double sigma,
                               const QuadratureConfig& quad = {});

std::vector<double> geometric_grid(double lo, double hi, int points);

}  // namespace speclab
