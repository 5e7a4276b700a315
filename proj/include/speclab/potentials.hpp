#pragma once

#include <string>
#include <vector>

#include "speclab/quadrature.hpp"

namespace speclab {

enum class PotentialFamily {
  HarmonicWell,      // V = w2 * x^2,             confining
  SechSquaredWell,   // V = -g / cosh^2(x),       decaying
  SquareWell,        // V = -depth on |x| <= a,   decaying
  GaussianWell,      // V = -depth exp(-(x/w)^2), decaying
  QuarticWell,       // V = c * x^4,              confining
  GridSampled,       // piecewise-linear samples
};

struct PotentialSpec {
  PotentialFamily family = PotentialFamily::HarmonicWell;
  double stiffness = 1.0;    // HarmonicWell (omega^2)
  double depth = 1.0;        // SechSquared / Square / Gaussian
  double half_width = 1.0;   // SquareWell
  double width = 1.0;        // GaussianWell
  double coefficient = 1.0;  // QuarticWell
  std::vector<double> abscissae;  // GridSampled, strictly increasing
  std::vector<double> samples;

  int dimension = 1;
  std::vector<PotentialSpec> separable_factors;  // size == dimension when d > 1

  static PotentialSpec harmonic(double omega2 = 1.0);
  static PotentialSpec sech2(double g);
  static PotentialSpec square(double depth, double half_width);
  static PotentialSpec gaussian(double depth, double width);
  static PotentialSpec quartic(double c);
  static PotentialSpec grid(std::vector<double> x, std::vector<double> v);
  static PotentialSpec separable(std::vector<PotentialSpec> factors);

  bool decaying() const;   // V <= 0, V -> 0 at infinity
  bool confining() const;  // V >= 0, V -> +infinity
  std::string name() const;
};

// One-dimensional evaluation (d must be 1).
double evaluate(const PotentialSpec& spec, double x);
// General point in R^d (separable sum for d > 1).
double evaluate(const PotentialSpec& spec, const std::vector<double>& x);

// Gamma with exact recurrence for integer/half-integer arguments,
// std::tgamma otherwise (relative error well below 1e-12).
double gamma_fn(double x);
double beta_fn(double a, double b);

// L^cl_{sigma,d} = (4 pi)^{-d/2} Gamma(sigma+1)/Gamma(sigma+d/2+1).
double classical_constant(double sigma, int d);

// integral over R of (-V)^exponent for a decaying well (d = 1).
double phase_space_integral(const PotentialSpec& spec, double exponent,
                            const QuadratureConfig& quad = {});

// integral over R^d of exp(-t V) for a confining potential.
double laplace_integral(const PotentialSpec& spec, double t,
                        const QuadratureConfig& quad = {});

struct ClassicalBound {
  double sigma = 0;
  int dimension = 1;
  double classical_constant = 0;
  double phase_space_integral = 0;
  double bound = 0;  // product of the two
};

ClassicalBound classical_bound(const PotentialSpec& spec, double sigma,
                               const QuadratureConfig& quad = {});

// Two-column CSV (abscissa, value), header line optional.
PotentialSpec read_grid_potential_csv(const std::string& path);

}  // namespace speclab
