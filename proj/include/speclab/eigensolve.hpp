#pragma once

#include <stdexcept>
#include <vector>

#include "speclab/discretize.hpp"

namespace speclab {

enum class SpectrumSource { Numeric, ExactModel };

// Execution policy for the data-parallel kernels. Serial is the reference
// implementation kept for testing and benchmarking against the OpenMP path.
enum class Exec { Serial, Parallel };

struct Spectrum {
  std::vector<double> eigenvalues;                 // sorted ascending
  std::vector<std::vector<double>> eigenvectors;   // optional, grid-normalized
  double spacing = 0.0;                            // present with eigenvectors
  double alpha = 1.0;
  SpectrumSource source = SpectrumSource::Numeric;
  int dimension = 1;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  bool has_vectors() const { return !eigenvectors.empty(); }
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& msg, double res = 0.0)
      : std::runtime_error(msg), residual(res) {}
  double residual;
};

// Sturm-sequence count of eigenvalues strictly below lambda.
int count_below(const Hamiltonian1D& H, double lambda);

// All eigenvalues in (lo, hi), each bisected to width <= tol, ascending.
std::vector<double> eigenvalues_in(const Hamiltonian1D& H, double lo, double hi,
                                   double tol, Exec exec = Exec::Parallel);

// Inverse iteration from a fixed pseudo-random seed; grid-normalized
// (h * sum v_i^2 = 1). Throws SolverError on non-convergence.
std::vector<double> eigenvector(const Hamiltonian1D& H, double eigenvalue);

// Eigenvalues strictly below 0 (optionally with eigenvectors).
Spectrum negative_spectrum(const PotentialSpec& spec, double alpha,
                           const DiscretizationConfig& config,
                           bool with_vectors = false);

// All n eigenpairs. Rayleigh-quotient refined eigenvalues; clustered
// eigenvectors re-orthogonalized. Capped at n <= 2400 unless allow_large.
Spectrum full_spectrum(const Hamiltonian1D& H, bool with_vectors = true,
                       bool allow_large = false, Exec exec = Exec::Parallel);

}  // namespace speclab
