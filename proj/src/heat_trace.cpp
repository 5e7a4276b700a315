#include "speclab/heat_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace speclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Certified bound on sum_{E_j >= c} e^{-t E_j} over the matrix spectrum:
// doubling energy windows, Sturm count per window, each window charged at
// its bottom. Exact counts make this a rigorous upper bound.
double tail_bound_above(const Hamiltonian1D& H, double t, double c) {
  const double top = H.gersh_hi() + 1.0;
  double bound = 0.0;
  double lo = c;
  double w = std::max(std::abs(c), 1.0);
  while (lo < top) {
    const double hi = std::min(lo + w, top);
    const int m = count_below(H, hi) - count_below(H, lo);
    if (m > 0) bound += m * std::exp(-t * lo);
    lo = hi;
    w *= 2.0;
  }
  return bound;
}

std::vector<PotentialSpec> confining_factors(const PotentialSpec& spec, int d) {
  std::vector<PotentialSpec> factors;
  if (spec.dimension == 1) {
    factors.assign(d, spec);  // isotropic: same well in every coordinate
  } else {
    if (spec.dimension != d ||
        static_cast<int>(spec.separable_factors.size()) != d)
      throw std::invalid_argument("heat trace: d > 1 needs d separable factors");
    factors = spec.separable_factors;
  }
  for (const auto& f : factors)
    if (!f.confining())
      throw std::domain_error("heat trace: potential must be confining");
  return factors;
}

}  // namespace

HeatTraceResult heat_trace(const PotentialSpec& spec, double alpha, double t,
                           const DiscretizationConfig& config, double cutoff,
                           double tail_tol, Exec exec) {
  if (!spec.confining())
    throw std::domain_error("heat_trace: potential must be confining");
  if (!(t > 0)) throw std::invalid_argument("heat_trace: t must be > 0");
  const Hamiltonian1D H = build_hamiltonian(spec, alpha, config);
  const double lo = H.gersh_lo() - 1.0;
  const double tol = std::max(8.0 * kEps * H.norm_bound(), 1e-14);

  // Ground state alone lower-bounds the trace; good enough to certify
  // the relative tail before the full window is solved.
  double hi0 = lo + 1.0;
  while (count_below(H, hi0) < 1) hi0 = lo + 2.0 * (hi0 - lo);
  const double e0 = eigenvalues_in(H, lo, hi0, tol, exec).front();
  const double floor_value = std::exp(-t * e0);

  double auto_cutoff = e0 + std::max(1.0, 2.0 / t);
  while (tail_bound_above(H, t, auto_cutoff) > tail_tol * floor_value &&
         auto_cutoff < H.gersh_hi())
    auto_cutoff = e0 + 2.0 * (auto_cutoff - e0);

  HeatTraceResult out;
  out.cutoff = cutoff > 0.0 ? cutoff : auto_cutoff;
  out.tail_bound = tail_bound_above(H, t, out.cutoff);
  const auto evs = eigenvalues_in(H, lo, out.cutoff, tol, exec);
  out.states = static_cast<int>(evs.size());
  for (double e : evs) out.value += std::exp(-t * e);
  if (out.tail_bound > tail_tol * out.value)
    throw CutoffTooLow("heat_trace: tail bound " +
                           std::to_string(out.tail_bound) +
                           " exceeds tolerance; suggested cutoff " +
                           std::to_string(auto_cutoff),
                       auto_cutoff);
  return out;
}

GoldenThompson golden_thompson_check(const PotentialSpec& spec, double alpha,
                                     double t, int d,
                                     const DiscretizationConfig& config) {
  if (d < 1) throw std::invalid_argument("golden_thompson_check: d must be >= 1");
  const auto factors = confining_factors(spec, d);
  GoldenThompson out;
  out.trace = 1.0;
  double lap = 1.0, rel_tail = 0.0;
  for (const auto& f : factors) {
    const auto h = heat_trace(f, alpha, t, config);
    out.trace *= h.value;
    rel_tail += h.tail_bound / h.value;
    lap *= laplace_integral(f, t);
  }
  out.tail_bound = out.trace * rel_tail;
  out.bound = std::pow(4.0 * std::numbers::pi * alpha * t, -0.5 * d) * lap;
  out.ratio = out.trace / out.bound;
  return out;
}

ScaledHeatCurve scaled_heat_curve(const PotentialSpec& spec, double t,
                                  const std::vector<double>& alpha_grid, int d,
                                  const DiscretizationConfig& config,
                                  double slack) {
  if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("scaled_heat_curve: alpha grid must be ascending");
  const auto factors = confining_factors(spec, d);
  ScaledHeatCurve out;
  out.curve.t = t;
  out.curve.dimension = d;
  out.curve.alpha_grid = alpha_grid;
  for (double alpha : alpha_grid) {
    double trace = 1.0, rel_tail = 0.0;
    for (const auto& f : factors) {
      const auto h = heat_trace(f, alpha, t, config);
      trace *= h.value;
      rel_tail += h.tail_bound / h.value;
    }
    out.curve.values.push_back(std::pow(alpha, 0.5 * d) * trace);
    out.curve.truncation_tail_bound =
        std::max(out.curve.truncation_tail_bound,
                 out.curve.values.back() * rel_tail);
  }
  out.verdict = check_non_increasing(alpha_grid, out.curve.values, slack);
  return out;
}

double oscillator_exact_heat_trace(double alpha, double t, int d, double omega) {
  if (!(alpha > 0) || !(t > 0) || !(omega > 0) || d < 1)
    throw std::invalid_argument("oscillator_exact_heat_trace: bad parameters");
  return std::pow(2.0 * std::sinh(t * omega * std::sqrt(alpha)), -d);
}

ScaledHeatCurve exact_oscillator_heat_curve(double t,
                                            const std::vector<double>& alpha_grid,
                                            int d, double omega) {
  if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("heat curve: alpha grid must be ascending");
  ScaledHeatCurve out;
  out.curve.t = t;
  out.curve.dimension = d;
  out.curve.alpha_grid = alpha_grid;
  out.curve.source = SpectrumSource::ExactModel;
  for (double alpha : alpha_grid)
    out.curve.values.push_back(std::pow(alpha, 0.5 * d) *
                               oscillator_exact_heat_trace(alpha, t, d, omega));
  out.verdict = check_non_increasing(alpha_grid, out.curve.values, 0.0);
  return out;
}

}  // namespace speclab
