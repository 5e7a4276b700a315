#include "speclab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace speclab {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double abs_tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol)
    return left + right + delta / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * abs_tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  if (!(b > a)) return 0.0;
  // Coarse estimate over a few panels fixes the absolute tolerance scale.
  const int panels = 8;
  double coarse = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double x0 = a + p * w;
    coarse += w / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * w) + f(x0 + w));
  }
  const double abs_tol =
      cfg.rel_tol * std::max(std::abs(coarse), 1e-300) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double x0 = a + p * w, x1 = x0 + w, xm = x0 + 0.5 * w;
    const double f0 = f(x0), f1 = f(x1), fm = f(xm);
    total += adapt(f, x0, f0, x1, f1, xm, fm, simpson(f, x0, f0, x1, f1, xm, fm),
                   abs_tol, cfg.max_depth);
  }
  return total;
}

double decay_radius(const std::function<double(double)>& f, double peak,
                    double r0, double floor_ratio) {
  double r = r0;
  const double floor = floor_ratio * std::max(peak, 1e-300);
  while (f(r) > floor) {
    r *= 2.0;
    if (r > 1e7)
      throw std::runtime_error("decay_radius: integrand tail does not decay");
  }
  return r;
}

}  // namespace speclab
