#pragma once

#include <map>
#include <memory>
#include <vector>

#include "speclab/eigensolve.hpp"

namespace speclab {

// Kinetic matrix elements T_jk = (h <phi_j, D_c phi_k>)^2 over a full
// eigenbasis, with D_c the central difference (Dirichlet ghost values 0).
// Rows are computed on demand and cached; T is symmetric by construction.
class KineticMatrix {
 public:
  explicit KineticMatrix(Spectrum spectrum);

  int size() const { return spec_->size(); }
  double alpha() const { return spec_->alpha; }
  double spacing() const { return spec_->spacing; }
  double eigenvalue(int j) const { return spec_->eigenvalues[j]; }
  const Spectrum& spectrum() const { return *spec_; }

  const std::vector<double>& t_row(int j);
  double t(int j, int k) { return t_row(std::min(j, k))[std::max(j, k)]; }

  // K_j = <-alpha Lap_h phi_j, phi_j> in the grid inner product.
  double diag_kinetic(int j) const { return diag_kinetic_[j]; }
  // ||D_c phi_j||^2 (grid norm); equals the row sum by completeness.
  double kinetic_norm(int j) const { return kinetic_norm_[j]; }
  double row_sum(int j);

 private:
  std::shared_ptr<const Spectrum> spec_;
  std::vector<double> diag_kinetic_, kinetic_norm_;
  std::map<int, std::vector<double>> rows_;
};

KineticMatrix kinetic_matrix(const Spectrum& spectrum);

// D_c v with Dirichlet ghosts.
std::vector<double> central_diff(const std::vector<double>& v, double h);

enum class IdentityKind {
  GapFormula,
  SumRule,
  SumRuleDiscreteCorrected,
  TraceFormula,
  QuadraticIdentity,
};

struct IdentityResidual {
  IdentityKind identity;
  int j = -1, k = -1;
  double residual = 0.0;
  double scale = 0.0;  // magnitude of the largest term entering the identity
  double spacing = 0.0;
  int excluded_pairs = 0;  // degenerate pairs removed from sums
  double relative() const { return residual / scale; }
};

// |(E_k - E_j) <x phi_j, phi_k> + 2 alpha <D_c phi_j, phi_k>|.
// Matrix-exact: the commutator of H with the coordinate matrix is -2 alpha D_c.
IdentityResidual gap_formula_residual(const Spectrum& spectrum, int j, int k);

// |1 - 4 alpha sum_k T_jk / (E_k - E_j)| (continuum identity, O(h^2)).
IdentityResidual sum_rule_residual(KineticMatrix& kin, int j);

// |(1 - h^2 K_j / (2 alpha)) - 4 alpha sum_k T_jk / (E_k - E_j)|,
// exact at matrix level for every j and h.
IdentityResidual sum_rule_discrete_corrected(KineticMatrix& kin, int j);

struct TestFunction {
  enum class Kind { RieszPlus, ExpNeg, Zero } kind = Kind::Zero;
  double sigma = 2.0;  // RieszPlus: f(E) = (z-E)_+^sigma, sigma >= 2
  double z = 0.0;
  double t = 1.0;      // ExpNeg: f(E) = exp(-t E)

  static TestFunction riesz_plus(double sigma, double z = 0.0);
  static TestFunction exp_neg(double t);
  static TestFunction zero() { return {}; }
  double value(double e) const;
  double derivative(double e) const;
};

// |d sum_j f(E_j) + 2 alpha sum_j sum_k T_jk (f(E_k)-f(E_j))/(E_k-E_j)|,
// outer sum over E_j <= energy_cutoff; scale = d * sum |f(E_j)|.
IdentityResidual trace_formula_residual(KineticMatrix& kin,
                                        const TestFunction& f,
                                        double energy_cutoff);

struct QuadraticIdentity {
  double lhs = 0.0, rhs = 0.0;
  double residual = 0.0, scale = 0.0;
  bool rhs_nonpositive = true;
};

// sum_{E_j<z} [d (z-E_j)^2 - 4 alpha (z-E_j) T_j]
//   = 4 sum_{E_j<z} sum_{E_k>=z} T_jk (z-E_j)(z-E_k)/(E_k-E_j),  d = 1.
QuadraticIdentity quadratic_identity_check(KineticMatrix& kin, double z);

// Full scan over a spectrum: worst relative residuals of the matrix-exact
// identities and the row-sum completeness defect. O(n^3); parallel kernel
// with a serial reference path.
struct IdentityScan {
  double max_gap_relative = 0.0;
  double max_corrected_sum_rule_relative = 0.0;
  double max_plain_sum_rule_residual = 0.0;
  double max_row_sum_defect = 0.0;  // relative
};
IdentityScan full_identity_scan(const Spectrum& spectrum,
                                Exec exec = Exec::Parallel);

}  // namespace speclab
