#pragma once

#include <stdexcept>
#include <vector>

#include "speclab/eigensolve.hpp"
#include "speclab/moments.hpp"
#include "speclab/potentials.hpp"

namespace speclab {

struct CutoffTooLow : std::runtime_error {
  CutoffTooLow(const std::string& msg, double suggested)
      : std::runtime_error(msg), suggested_cutoff(suggested) {}
  double suggested_cutoff;
};

struct HeatTraceResult {
  double value = 0.0;
  double tail_bound = 0.0;  // certified bound on the neglected spectral tail
  double cutoff = 0.0;      // energy cutoff actually used
  int states = 0;           // eigenvalues summed explicitly
};

// tr e^{-tH} for a confining 1-d potential, truncated at an energy cutoff
// with a certified tail bound from windowed Sturm counts. cutoff <= 0 picks
// the cutoff automatically (doubling until tail_bound <= tail_tol * value);
// an explicit cutoff that leaves a larger tail raises CutoffTooLow with the
// automatic choice attached.
HeatTraceResult heat_trace(const PotentialSpec& spec, double alpha, double t,
                           const DiscretizationConfig& config,
                           double cutoff = 0.0, double tail_tol = 1e-9,
                           Exec exec = Exec::Parallel);

struct GoldenThompson {
  double trace = 0.0;
  double bound = 0.0;  // (4 pi alpha t)^{-d/2} * int e^{-tV}
  double ratio = 0.0;
  double tail_bound = 0.0;
};

// d > 1 requires a separable confining spec; the trace factorizes.
GoldenThompson golden_thompson_check(const PotentialSpec& spec, double alpha,
                                     double t, int d,
                                     const DiscretizationConfig& config);

struct HeatTraceCurve {
  double t = 1.0;
  int dimension = 1;
  std::vector<double> alpha_grid;
  std::vector<double> values;  // alpha^{d/2} * trace
  double truncation_tail_bound = 0.0;  // worst point
  SpectrumSource source = SpectrumSource::Numeric;
};

struct ScaledHeatCurve {
  HeatTraceCurve curve;
  MonotonicityVerdict verdict;
};

ScaledHeatCurve scaled_heat_curve(const PotentialSpec& spec, double t,
                                  const std::vector<double>& alpha_grid, int d,
                                  const DiscretizationConfig& config,
                                  double slack);

// Closed form for V = omega^2 x^2 per coordinate: (2 sinh(t omega sqrt(alpha)))^{-d}.
double oscillator_exact_heat_trace(double alpha, double t, int d,
                                   double omega = 1.0);

ScaledHeatCurve exact_oscillator_heat_curve(double t,
                                            const std::vector<double>& alpha_grid,
                                            int d, double omega = 1.0);

}  // namespace speclab
