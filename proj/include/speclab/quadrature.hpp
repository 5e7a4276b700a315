#pragma once

#include <functional>

namespace speclab {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_depth = 48;
};

// Adaptive Simpson on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

// Doubles r until f(r) < floor_ratio * peak. f must be eventually decreasing.
double decay_radius(const std::function<double(double)>& f, double peak,
                    double r0 = 1.0, double floor_ratio = 1e-16);

}  // namespace speclab
