#include "speclab/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "speclab/eigensolve.hpp"

namespace speclab {

DiscretizationConfig standard_well_grid() { return {20.0, 3999}; }
DiscretizationConfig standard_confining_grid() { return {12.0, 2399}; }
DiscretizationConfig matrix_grid(int points) { return {20.0, points}; }

void Hamiltonian1D::apply(const double* x, double* y) const {
  const int n = size();
  const double b = off_diagonal;
  for (int i = 0; i < n; ++i) {
    double v = diagonal[i] * x[i];
    if (i > 0) v += b * x[i - 1];
    if (i + 1 < n) v += b * x[i + 1];
    y[i] = v;
  }
}

double Hamiltonian1D::gersh_lo() const {
  const double b = std::abs(off_diagonal);
  double lo = diagonal[0] - b;
  const int n = size();
  for (int i = 1; i < n; ++i)
    lo = std::min(lo, diagonal[i] - ((i + 1 < n) ? 2.0 * b : b));
  return lo;
}

double Hamiltonian1D::gersh_hi() const {
  const double b = std::abs(off_diagonal);
  double hi = diagonal[0] + b;
  const int n = size();
  for (int i = 1; i < n; ++i)
    hi = std::max(hi, diagonal[i] + ((i + 1 < n) ? 2.0 * b : b));
  return hi;
}

double Hamiltonian1D::norm_bound() const {
  return std::max(std::abs(gersh_lo()), std::abs(gersh_hi()));
}

Hamiltonian1D build_hamiltonian(const PotentialSpec& spec, double alpha,
                                const DiscretizationConfig& config) {
  if (spec.dimension != 1)
    throw std::invalid_argument("build_hamiltonian: spec must be one-dimensional");
  if (!(alpha > 0)) throw std::invalid_argument("build_hamiltonian: alpha must be > 0");
  if (config.points < 3)
    throw std::invalid_argument("build_hamiltonian: need at least 3 grid points");
  if (!(config.half_width > 0))
    throw std::invalid_argument("build_hamiltonian: half_width must be > 0");

  Hamiltonian1D H;
  const int n = config.points;
  const double L = config.half_width;
  const double h = 2.0 * L / (n + 1);
  H.spacing = h;
  H.alpha = alpha;
  H.potential = spec;
  H.off_diagonal = -alpha / (h * h);
  H.diagonal.resize(n);
  const double kin = 2.0 * alpha / (h * h);
  for (int i = 0; i < n; ++i) H.diagonal[i] = kin + evaluate(spec, -L + (i + 1) * h);
  return H;
}

namespace {

// Depth-first enumeration of factor-index tuples with sum <= cutoff.
// Factors are sorted ascending, so once a partial sum plus the minimal
// completion exceeds the cutoff the branch is dead.
void enumerate(const std::vector<Spectrum>& factors,
               const std::vector<double>& min_tail, size_t level, double acc,
               double cutoff, std::vector<double>& out) {
  if (level == factors.size()) {
    out.push_back(acc);
    return;
  }
  for (double e : factors[level].eigenvalues) {
    const double s = acc + e;
    if (s + min_tail[level + 1] > cutoff) break;  // ascending order
    enumerate(factors, min_tail, level + 1, s, cutoff, out);
  }
}

}  // namespace

Spectrum compose_separable(const std::vector<Spectrum>& factor_spectra,
                           double energy_cutoff) {
  if (factor_spectra.empty())
    throw std::invalid_argument("compose_separable: need at least one factor");
  for (const auto& f : factor_spectra) {
    if (!std::is_sorted(f.eigenvalues.begin(), f.eigenvalues.end()))
      throw std::invalid_argument("compose_separable: factor spectra must be sorted");
    if (f.eigenvalues.empty()) {
      Spectrum empty;
      empty.alpha = factor_spectra.front().alpha;
      empty.dimension = static_cast<int>(factor_spectra.size());
      empty.source = factor_spectra.front().source;
      return empty;
    }
  }
  const size_t d = factor_spectra.size();
  std::vector<double> min_tail(d + 1, 0.0);
  for (size_t i = d; i-- > 0;)
    min_tail[i] = min_tail[i + 1] + factor_spectra[i].eigenvalues.front();

  Spectrum out;
  out.alpha = factor_spectra.front().alpha;
  out.dimension = static_cast<int>(d);
  out.source = factor_spectra.front().source;
  enumerate(factor_spectra, min_tail, 0, 0.0, energy_cutoff, out.eigenvalues);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace speclab
