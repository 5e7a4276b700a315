#include "speclab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "speclab/matrix_elements.hpp"

namespace speclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Spectrum spectrum_below(const PotentialSpec& spec, double alpha,
                        const DiscretizationConfig& config, double z,
                        Exec exec) {
  if (!spec.decaying())
    throw std::domain_error("moment_curve: potential must be a decaying well");
  const Hamiltonian1D H = build_hamiltonian(spec, alpha, config);
  const double tol = std::max(8.0 * kEps * H.norm_bound(), 1e-14);
  Spectrum s;
  s.alpha = alpha;
  s.dimension = 1;
  s.source = SpectrumSource::Numeric;
  s.eigenvalues = eigenvalues_in(H, H.gersh_lo() - 1.0, z, tol, exec);
  return s;
}

}  // namespace

double riesz_mean(const Spectrum& spectrum, double sigma, double z) {
  if (sigma < 0) throw std::domain_error("riesz_mean: sigma must be >= 0");
  double sum = 0.0;
  for (double e : spectrum.eigenvalues) {
    if (e >= z) break;  // ascending
    sum += (sigma == 0.0) ? 1.0 : std::pow(z - e, sigma);
  }
  return sum;
}

MomentCurve moment_curve(const PotentialSpec& spec, double sigma,
                         const std::vector<double>& alpha_grid, int d,
                         const DiscretizationConfig& config, double z,
                         Exec exec) {
  if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("moment_curve: alpha grid must be ascending");
  if (z > 0)
    throw std::invalid_argument(
        "moment_curve: z must be <= 0 (positive spectrum is continuous)");
  if (d < 1) throw std::invalid_argument("moment_curve: d must be >= 1");

  MomentCurve curve;
  curve.sigma = sigma;
  curve.dimension = d;
  curve.alpha_grid = alpha_grid;
  curve.z = z;
  curve.values.reserve(alpha_grid.size());
  curve.bound_state_counts.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    Spectrum s;
    if (d == 1) {
      s = spectrum_below(spec, alpha, config, z, exec);
    } else {
      if (static_cast<int>(spec.separable_factors.size()) != d)
        throw std::invalid_argument("moment_curve: need d separable factors");
      std::vector<Spectrum> factors;
      factors.reserve(d);
      for (const auto& f : spec.separable_factors)
        factors.push_back(spectrum_below(f, alpha, config, 0.0, exec));
      s = compose_separable(factors, z);
    }
    curve.bound_state_counts.push_back(
        static_cast<int>(riesz_mean(s, 0.0, z)));
    curve.values.push_back(std::pow(alpha, 0.5 * d) * riesz_mean(s, sigma, z));
  }
  return curve;
}

Spectrum poschl_teller_spectrum(double g, double alpha) {
  if (!(g > 0) || !(alpha > 0))
    throw std::invalid_argument("poschl_teller_spectrum: need g > 0, alpha > 0");
  const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * g / alpha));
  Spectrum out;
  out.alpha = alpha;
  out.dimension = 1;
  out.source = SpectrumSource::ExactModel;
  for (int n = 0; n < s; ++n) {
    const double d = s - n;
    out.eigenvalues.push_back(-alpha * d * d);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

MomentCurve exact_poschl_teller_moment_curve(double g, double sigma,
                                             const std::vector<double>& alpha_grid,
                                             double z) {
  if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("moment curve: alpha grid must be ascending");
  MomentCurve curve;
  curve.sigma = sigma;
  curve.dimension = 1;
  curve.alpha_grid = alpha_grid;
  curve.z = z;
  curve.source = SpectrumSource::ExactModel;
  for (double alpha : alpha_grid) {
    const Spectrum s = poschl_teller_spectrum(g, alpha);
    curve.bound_state_counts.push_back(static_cast<int>(riesz_mean(s, 0.0, z)));
    curve.values.push_back(std::sqrt(alpha) * riesz_mean(s, sigma, z));
  }
  return curve;
}

MonotonicityVerdict check_non_increasing(const std::vector<double>& grid,
                                         const std::vector<double>& values,
                                         double slack) {
  if (grid.size() != values.size())
    throw std::invalid_argument("check_non_increasing: size mismatch");
  MonotonicityVerdict v;
  v.slack_used = slack;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    const double rise = values[i + 1] - values[i];
    if (rise > v.max_violation) {
      v.max_violation = rise;
      v.violation_location = {grid[i], grid[i + 1]};
    }
  }
  v.non_increasing = v.max_violation <= slack;
  if (v.non_increasing) v.violation_location.reset();
  return v;
}

MonotonicityVerdict check_monotonicity(const MomentCurve& curve, double slack) {
  return check_non_increasing(curve.alpha_grid, curve.values, slack);
}

LtCheck lt_check(const PotentialSpec& spec, double sigma, double alpha, int d,
                 const DiscretizationConfig& config) {
  if (sigma < 2)
    throw std::invalid_argument("lt_check: sharp bound requires sigma >= 2");
  if (d != 1) throw std::invalid_argument("lt_check: d must be 1");
  const Spectrum s = negative_spectrum(spec, alpha, config);
  LtCheck out;
  out.bound_states = s.size();
  out.scaled_moment = std::sqrt(alpha) * riesz_mean(s, sigma, 0.0);
  out.classical_bound = classical_bound(spec, sigma).bound;
  out.ratio = out.scaled_moment / out.classical_bound;
  return out;
}

namespace {

// j-th eigenvalue from the bottom; for decaying wells restricted to the
// negative spectrum so bound-state count changes surface as branch crossings.
double level(const PotentialSpec& spec, double alpha,
             const DiscretizationConfig& config, int j) {
  if (spec.decaying()) {
    const Spectrum s = negative_spectrum(spec, alpha, config);
    if (j >= s.size())
      throw BranchCrossingError(
          "feynman_hellmann: level " + std::to_string(j) +
          " leaves the discrete spectrum inside the difference stencil");
    return s.eigenvalues[j];
  }
  const Hamiltonian1D H = build_hamiltonian(spec, alpha, config);
  const double lo = H.gersh_lo() - 1.0;
  double hi = *std::min_element(H.diagonal.begin(), H.diagonal.end()) + 1.0;
  while (count_below(H, hi) <= j) hi = lo + 2.0 * (hi - lo);
  const double tol = std::max(8.0 * kEps * H.norm_bound(), 1e-14);
  return eigenvalues_in(H, lo, hi, tol)[j];
}

}  // namespace

FeynmanHellmann feynman_hellmann(const PotentialSpec& spec, double alpha, int j,
                                 double delta, const DiscretizationConfig& config) {
  if (!(delta > 0) || delta >= alpha)
    throw std::invalid_argument("feynman_hellmann: need 0 < delta < alpha");
  FeynmanHellmann out;
  out.central_difference = (level(spec, alpha + delta, config, j) -
                            level(spec, alpha - delta, config, j)) /
                           (2.0 * delta);

  const Hamiltonian1D H = build_hamiltonian(spec, alpha, config);
  const auto phi = eigenvector(H, level(spec, alpha, config, j));
  const auto dphi = central_diff(phi, H.spacing);
  double t = 0.0;
  for (double x : dphi) t += x * x;
  out.kinetic_energy = H.spacing * t;
  out.residual = std::abs(out.central_difference - out.kinetic_energy);
  return out;
}

double feynman_hellmann_residual(const PotentialSpec& spec, double alpha, int j,
                                 double delta, const DiscretizationConfig& config) {
  return feynman_hellmann(spec, alpha, j, delta, config).residual;
}

ALCheck aizenman_lieb_identity(double E, double sigma,
                               const QuadratureConfig& quad) {
  if (!(E < 0)) throw std::domain_error("aizenman_lieb_identity: need E < 0");
  if (!(sigma > 2))
    throw std::domain_error("aizenman_lieb_identity: need sigma > 2");
  const double M = -E;
  ALCheck out;
  out.lhs = std::pow(M, sigma);
  // tau = M w^{1/(sigma-2)} flattens the endpoint singularity exactly:
  // tau^{sigma-3} dtau = M^{sigma-2}/(sigma-2) dw.
  const double p = 1.0 / (sigma - 2.0);
  const double shape = integrate(
      [p](double w) {
        const double r = 1.0 - std::pow(w, p);
        return r * r;
      },
      0.0, 1.0, quad);
  out.rhs = std::pow(M, sigma) / ((sigma - 2.0) * beta_fn(sigma - 2.0, 3.0)) * shape;
  out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, std::abs(out.lhs));
  return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("geometric_grid: need 0 < lo < hi, points >= 2");
  std::vector<double> out(points);
  const double r = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = lo * std::exp(r * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace speclab
