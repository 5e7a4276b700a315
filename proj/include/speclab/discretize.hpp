#pragma once

#include <vector>

#include "speclab/potentials.hpp"

namespace speclab {

struct DiscretizationConfig {
  double half_width = 20.0;  // domain [-L, L]
  int points = 3999;         // interior grid points, >= 3
};

// Documented defaults: L=20 for decaying wells, L=12 for confining potentials.
DiscretizationConfig standard_well_grid();
DiscretizationConfig standard_confining_grid();
// Moderate grid for full-eigenbasis work (matrix identities), L = 20.
DiscretizationConfig matrix_grid(int points = 1999);

// Symmetric tridiagonal representation of -alpha*Lap_h + V with Dirichlet ends.
// diagonal_i = 2 alpha / h^2 + V(-L + (i+1) h), all off-diagonals -alpha/h^2.
struct Hamiltonian1D {
  std::vector<double> diagonal;
  double off_diagonal = 0.0;  // shared value, strictly negative
  double spacing = 0.0;
  double alpha = 0.0;
  PotentialSpec potential;

  int size() const { return static_cast<int>(diagonal.size()); }
  double half_width() const { return 0.5 * spacing * (size() + 1); }
  double grid_point(int i) const { return -half_width() + (i + 1) * spacing; }

  // y = H x (x, y of length n)
  void apply(const double* x, double* y) const;

  double gersh_lo() const;
  double gersh_hi() const;
  double norm_bound() const;  // max(|gersh_lo|, |gersh_hi|)
};

Hamiltonian1D build_hamiltonian(const PotentialSpec& spec, double alpha,
                                const DiscretizationConfig& config);

struct Spectrum;  // eigensolve.hpp

// All sums of one eigenvalue per factor not exceeding energy_cutoff,
// with Cartesian multiplicities, sorted ascending. Eigenvalue-only.
Spectrum compose_separable(const std::vector<Spectrum>& factor_spectra,
                           double energy_cutoff);

}  // namespace speclab
