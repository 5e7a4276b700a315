#include "speclab/oscillator_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace speclab {

namespace {

void validate(const OscillatorModel& m) {
  if (m.dimension < 1 || !(m.alpha > 0))
    throw std::invalid_argument("oscillator: need d >= 1, alpha > 0");
}

double p_of(int d, double sigma, double alpha) {
  return p_value({d, alpha}, sigma);
}

}  // namespace

double level_multiplicity(int m, int d) {
  double c = 1.0;
  for (int i = 1; i < d; ++i) c = c * (m + i) / i;
  return c;
}

Spectrum ho_spectrum(const OscillatorModel& model, double cutoff) {
  validate(model);
  Spectrum out;
  out.alpha = model.alpha;
  out.dimension = model.dimension;
  out.source = SpectrumSource::ExactModel;
  const double r = std::sqrt(model.alpha);
  for (int m = 0;; ++m) {
    const double e = r * (2.0 * m + model.dimension);
    if (e > cutoff) break;
    const int mult = static_cast<int>(
        std::llround(level_multiplicity(m, model.dimension)));
    out.eigenvalues.insert(out.eigenvalues.end(), mult, e);
  }
  return out;
}

double s_sigma(const OscillatorModel& model, double sigma) {
  validate(model);
  if (sigma < 0) throw std::domain_error("s_sigma: sigma must be >= 0");
  const double r = std::sqrt(model.alpha);
  double sum = 0.0;
  for (int m = 0;; ++m) {
    const double e = r * (2.0 * m + model.dimension);
    if (e >= 1.0) break;
    const double gap = 1.0 - e;
    sum += level_multiplicity(m, model.dimension) *
           (sigma == 0.0 ? 1.0 : std::pow(gap, sigma));
  }
  return sum;
}

double p_value(const OscillatorModel& model, double sigma) {
  return std::pow(model.alpha, 0.5 * model.dimension) * s_sigma(model, sigma);
}

double breakpoint_alpha(int d, int k) {
  const double r = d + 2.0 * k;
  return 1.0 / (r * r);
}

bool is_breakpoint(int d, double alpha) {
  // alpha = (d+2k)^{-2}  <=>  1/sqrt(alpha) = d + 2k
  const double r = 1.0 / std::sqrt(alpha);
  const double k = 0.5 * (r - d);
  if (k < -0.25) return false;
  const double kr = std::round(k);
  return std::abs(alpha - breakpoint_alpha(d, static_cast<int>(kr))) <=
         1e-12 * alpha;
}

double p_derivative(int d, double sigma, double at_alpha, double step) {
  if (d < 1 || !(at_alpha > 0) || !(step > 0) || sigma < 0)
    throw std::invalid_argument("p_derivative: bad parameters");
  // Smooth piece containing at_alpha: (b_m, b_{m-1}) with m included levels.
  // Right endpoint of the piece (next breakpoint above), +inf past b_0.
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (int k = 0;; ++k) {
    const double b = breakpoint_alpha(d, k);
    if (b <= at_alpha * (1.0 + 1e-12)) {
      lo = b;
      break;
    }
    hi = b;
  }
  const double h = step;
  if (is_breakpoint(d, at_alpha)) {
    // right-sided piece [b_m, b_{m-1}); the level at the breakpoint is
    // already excluded (strict E < 1), so p itself belongs to this piece
    if (at_alpha + 4.0 * h >= hi)
      throw BreakpointError("p_derivative: stencil does not fit the piece right of the breakpoint");
    const double a = at_alpha;
    return (-25.0 * p_of(d, sigma, a) + 48.0 * p_of(d, sigma, a + h) -
            36.0 * p_of(d, sigma, a + 2.0 * h) +
            16.0 * p_of(d, sigma, a + 3.0 * h) -
            3.0 * p_of(d, sigma, a + 4.0 * h)) /
           (12.0 * h);
  }
  if (at_alpha - 2.0 * h <= lo || at_alpha + 2.0 * h >= hi)
    throw BreakpointError(
        "p_derivative: central stencil crosses a breakpoint; reduce step");
  const double a = at_alpha;
  return (p_of(d, sigma, a - 2.0 * h) - 8.0 * p_of(d, sigma, a - h) +
          8.0 * p_of(d, sigma, a + h) - p_of(d, sigma, a + 2.0 * h)) /
         (12.0 * h);
}

DerivativeSign p_derivative_sign(int d, double sigma, double at_alpha,
                                 double step) {
  const double v = p_derivative(d, sigma, at_alpha, step);
  if (std::abs(v) <= 1e-8) return DerivativeSign::Zero;
  return v > 0 ? DerivativeSign::Positive : DerivativeSign::Negative;
}

}  // namespace speclab
