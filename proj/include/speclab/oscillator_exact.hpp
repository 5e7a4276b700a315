#pragma once

#include <stdexcept>

#include "speclab/eigensolve.hpp"

namespace speclab {

// Isotropic oscillator in d dimensions: E = sqrt(alpha) (2 j_1 + ... + 2 j_d + d)
// over nonnegative integer multi-indices; level 2m + d has multiplicity
// C(m + d - 1, d - 1).
struct OscillatorModel {
  int dimension = 1;
  double alpha = 1.0;
};

struct BreakpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Spectrum ho_spectrum(const OscillatorModel& model, double cutoff);

double level_multiplicity(int m, int d);  // C(m+d-1, d-1)

// S_sigma(alpha) = sum_{E < 1} (1 - E)^sigma, closed form over levels.
double s_sigma(const OscillatorModel& model, double sigma);

// p_sigma(alpha) = alpha^{d/2} S_sigma(alpha).
double p_value(const OscillatorModel& model, double sigma);

// Breakpoints where a level crosses 1: alpha = (d + 2k)^{-2}, k = 0, 1, ...
double breakpoint_alpha(int d, int k);
bool is_breakpoint(int d, double alpha);

// Fourth-order difference of p_sigma: central in the interior of a smooth
// piece, right-sided at a breakpoint (the piece to the right). Throws
// BreakpointError when the stencil cannot fit inside the smooth piece.
double p_derivative(int d, double sigma, double at_alpha, double step = 1e-4);

enum class DerivativeSign { Negative, Zero, Positive };

// Sign with |value| <= 1e-8 classified as Zero.
DerivativeSign p_derivative_sign(int d, double sigma, double at_alpha,
                                 double step = 1e-4);

}  // namespace speclab
