#include "speclab/matrix_elements.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace speclab {

namespace {

double grid_dot(double h, const std::vector<double>& a,
                const std::vector<double>& b) {
  double s = 0.0;
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return h * s;
}

double grid_norm(double h, const std::vector<double>& a) {
  return std::sqrt(grid_dot(h, a, a));
}

void require_basis(const Spectrum& s) {
  if (!s.has_vectors() || s.spacing <= 0)
    throw std::invalid_argument("matrix_elements: full eigenbasis with spacing required");
}

double spectrum_norm_bound(const Spectrum& s) {
  return std::max(std::abs(s.eigenvalues.front()),
                  std::abs(s.eigenvalues.back()));
}

}  // namespace

std::vector<double> central_diff(const std::vector<double>& v, double h) {
  const int n = static_cast<int>(v.size());
  std::vector<double> d(n);
  const double inv = 0.5 / h;
  for (int i = 0; i < n; ++i) {
    const double up = (i + 1 < n) ? v[i + 1] : 0.0;
    const double dn = (i > 0) ? v[i - 1] : 0.0;
    d[i] = (up - dn) * inv;
  }
  return d;
}

KineticMatrix::KineticMatrix(Spectrum spectrum)
    : spec_(std::make_shared<Spectrum>(std::move(spectrum))) {
  require_basis(*spec_);
  const int n = spec_->size();
  if (static_cast<int>(spec_->eigenvectors.size()) != n)
    throw std::invalid_argument("KineticMatrix: eigenbasis incomplete");
  const double h = spec_->spacing;
  const double alpha = spec_->alpha;
  diag_kinetic_.resize(n);
  kinetic_norm_.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto& v = spec_->eigenvectors[j];
    // SPD form of <-alpha Lap_h v, v>: forward differences incl. boundaries
    double k = v[0] * v[0] + v[n - 1] * v[n - 1];
    for (int i = 0; i + 1 < n; ++i) {
      const double d = v[i + 1] - v[i];
      k += d * d;
    }
    diag_kinetic_[j] = alpha * k / h;  // h * sum / h^2
    const auto g = central_diff(v, h);
    kinetic_norm_[j] = grid_dot(h, g, g);
  }
}

const std::vector<double>& KineticMatrix::t_row(int j) {
  auto it = rows_.find(j);
  if (it != rows_.end()) return it->second;
  const int n = size();
  const double h = spacing();
  const auto g = central_diff(spec_->eigenvectors[j], h);
  std::vector<double> row(n);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    const double v = grid_dot(h, g, spec_->eigenvectors[k]);
    row[k] = v * v;
  }
  return rows_.emplace(j, std::move(row)).first->second;
}

double KineticMatrix::row_sum(int j) {
  const auto& row = t_row(j);
  double s = 0.0;
  for (double v : row) s += v;
  return s;
}

KineticMatrix kinetic_matrix(const Spectrum& spectrum) {
  return KineticMatrix(spectrum);
}

IdentityResidual gap_formula_residual(const Spectrum& s, int j, int k) {
  require_basis(s);
  const double h = s.spacing, alpha = s.alpha;
  const auto& vj = s.eigenvectors[j];
  const auto& vk = s.eigenvectors[k];
  const int n = s.size();
  std::vector<double> xv(n);
  const double L = 0.5 * h * (n + 1);
  for (int i = 0; i < n; ++i) xv[i] = (-L + (i + 1) * h) * vj[i];
  const auto g = central_diff(vj, h);
  const double X = grid_dot(h, xv, vk);
  const double G = grid_dot(h, g, vk);
  const double dE = s.eigenvalues[k] - s.eigenvalues[j];
  IdentityResidual r;
  r.identity = IdentityKind::GapFormula;
  r.j = j;
  r.k = k;
  r.spacing = h;
  r.residual = std::abs(dE * X + 2.0 * alpha * G);
  r.scale = spectrum_norm_bound(s) * grid_norm(h, xv) + 2.0 * alpha * grid_norm(h, g);
  return r;
}

namespace {

// 4 alpha sum_{k != j} T_jk / (E_k - E_j); also reports the largest |term|
// and the number of degenerate pairs excluded.
double sum_rule_sum(KineticMatrix& kin, int j, double* max_term, int* excluded) {
  const auto& row = kin.t_row(j);
  const int n = kin.size();
  const double ej = kin.eigenvalue(j);
  const double alpha = kin.alpha();
  const double degen =
      1e-12 * std::max(std::abs(kin.eigenvalue(0)),
                       std::abs(kin.eigenvalue(n - 1)));
  double s = 0.0;
  *max_term = 0.0;
  *excluded = 0;
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    const double de = kin.eigenvalue(k) - ej;
    if (std::abs(de) < degen) {
      ++*excluded;
      continue;
    }
    const double term = 4.0 * alpha * row[k] / de;
    s += term;
    *max_term = std::max(*max_term, std::abs(term));
  }
  return s;
}

}  // namespace

IdentityResidual sum_rule_residual(KineticMatrix& kin, int j) {
  IdentityResidual r;
  r.identity = IdentityKind::SumRule;
  r.j = j;
  r.spacing = kin.spacing();
  double max_term;
  const double s = sum_rule_sum(kin, j, &max_term, &r.excluded_pairs);
  r.residual = std::abs(1.0 - s);
  r.scale = std::max(1.0, max_term);
  return r;
}

IdentityResidual sum_rule_discrete_corrected(KineticMatrix& kin, int j) {
  IdentityResidual r;
  r.identity = IdentityKind::SumRuleDiscreteCorrected;
  r.j = j;
  r.spacing = kin.spacing();
  double max_term;
  const double s = sum_rule_sum(kin, j, &max_term, &r.excluded_pairs);
  const double corr =
      kin.spacing() * kin.spacing() * kin.diag_kinetic(j) / (2.0 * kin.alpha());
  r.residual = std::abs((1.0 - corr) - s);
  r.scale = std::max({1.0, corr, max_term});
  return r;
}

TestFunction TestFunction::riesz_plus(double sigma, double z) {
  if (sigma < 2.0)
    throw std::invalid_argument("TestFunction::riesz_plus: sigma >= 2 required (C^1)");
  TestFunction f;
  f.kind = Kind::RieszPlus;
  f.sigma = sigma;
  f.z = z;
  return f;
}

TestFunction TestFunction::exp_neg(double t) {
  if (!(t > 0)) throw std::invalid_argument("TestFunction::exp_neg: t > 0 required");
  TestFunction f;
  f.kind = Kind::ExpNeg;
  f.t = t;
  return f;
}

double TestFunction::value(double e) const {
  switch (kind) {
    case Kind::RieszPlus:
      return e < z ? std::pow(z - e, sigma) : 0.0;
    case Kind::ExpNeg:
      return std::exp(-t * e);
    case Kind::Zero:
      return 0.0;
  }
  return 0.0;
}

double TestFunction::derivative(double e) const {
  switch (kind) {
    case Kind::RieszPlus:
      return e < z ? -sigma * std::pow(z - e, sigma - 1.0) : 0.0;
    case Kind::ExpNeg:
      return -t * std::exp(-t * e);
    case Kind::Zero:
      return 0.0;
  }
  return 0.0;
}

IdentityResidual trace_formula_residual(KineticMatrix& kin,
                                        const TestFunction& f,
                                        double energy_cutoff) {
  const int n = kin.size();
  const int d = 1;
  IdentityResidual r;
  r.identity = IdentityKind::TraceFormula;
  r.spacing = kin.spacing();
  if (f.kind == TestFunction::Kind::Zero) {
    r.scale = 1.0;
    return r;
  }
  const double escale =
      std::max(std::abs(kin.eigenvalue(0)), std::abs(kin.eigenvalue(n - 1)));
  const double degen = 1e-10 * escale;
  auto quotient = [&](double ej, double ek) {
    if (std::abs(ek - ej) <= degen) return f.derivative(ej);
    return (f.value(ek) - f.value(ej)) / (ek - ej);
  };
  double sum_f = 0.0, abs_f = 0.0, pair_sum = 0.0;
  for (int j = 0; j < n && kin.eigenvalue(j) <= energy_cutoff; ++j) {
    const double ej = kin.eigenvalue(j);
    sum_f += f.value(ej);
    abs_f += std::abs(f.value(ej));
    const auto& row = kin.t_row(j);
    for (int k = 0; k < n; ++k) {
      const double q = quotient(ej, kin.eigenvalue(k));
      pair_sum += row[k] * q;
      // pairs with k beyond the cutoff appear only once in the j-loop;
      // their (k, j) mirror is identical by symmetry of T and the quotient
      if (kin.eigenvalue(k) > energy_cutoff) pair_sum += row[k] * q;
    }
  }
  r.residual = std::abs(d * sum_f + 2.0 * kin.alpha() * pair_sum);
  r.scale = std::max(d * abs_f, 1e-300);
  return r;
}

QuadraticIdentity quadratic_identity_check(KineticMatrix& kin, double z) {
  const int n = kin.size();
  const int d = 1;
  const double alpha = kin.alpha();
  QuadraticIdentity q;
  double lhs_abs = 0.0;
  for (int j = 0; j < n && kin.eigenvalue(j) < z; ++j) {
    const double gap = z - kin.eigenvalue(j);
    const double tj = kin.row_sum(j);
    q.lhs += d * gap * gap - 4.0 * alpha * gap * tj;
    lhs_abs += d * gap * gap + 4.0 * alpha * gap * tj;
    const auto& row = kin.t_row(j);
    for (int k = 0; k < n; ++k) {
      if (kin.eigenvalue(k) < z) continue;
      const double de = kin.eigenvalue(k) - kin.eigenvalue(j);
      q.rhs += 4.0 * row[k] * gap * (z - kin.eigenvalue(k)) / de;
    }
  }
  q.residual = std::abs(q.lhs - q.rhs);
  q.scale = std::max(lhs_abs, 1e-300);
  q.rhs_nonpositive = q.rhs <= 0.0;
  return q;
}

IdentityScan full_identity_scan(const Spectrum& s, Exec exec) {
  require_basis(s);
  const int n = s.size();
  const double h = s.spacing, alpha = s.alpha;
  const double L = 0.5 * h * (n + 1);
  const double enorm = spectrum_norm_bound(s);
  const double degen = 1e-12 * enorm;

  std::vector<double> gap_rel(n, 0.0), sum_rel(n, 0.0), plain_res(n, 0.0),
      row_defect(n, 0.0);

  auto scan_row = [&](int j) {
    const auto& vj = s.eigenvectors[j];
    std::vector<double> xv(n);
    for (int i = 0; i < n; ++i) xv[i] = (-L + (i + 1) * h) * vj[i];
    const auto g = central_diff(vj, h);
    const double xnorm = grid_norm(h, xv);
    const double gnorm2 = grid_dot(h, g, g);
    const double gnorm = std::sqrt(gnorm2);
    const double ej = s.eigenvalues[j];
    // K_j from the SPD forward-difference form
    double kq = vj[0] * vj[0] + vj[n - 1] * vj[n - 1];
    for (int i = 0; i + 1 < n; ++i) {
      const double dd = vj[i + 1] - vj[i];
      kq += dd * dd;
    }
    const double kj = alpha * kq / h;

    double srule = 0.0, max_term = 1.0, tsum = 0.0;
    double worst_gap = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto& vk = s.eigenvectors[k];
      double X = 0.0, G = 0.0;
      for (int i = 0; i < n; ++i) {
        X += xv[i] * vk[i];
        G += g[i] * vk[i];
      }
      X *= h;
      G *= h;
      const double de = s.eigenvalues[k] - ej;
      const double gap_res = std::abs(de * X + 2.0 * alpha * G);
      const double gap_scale = enorm * xnorm + 2.0 * alpha * gnorm;
      worst_gap = std::max(worst_gap, gap_res / gap_scale);
      const double t = G * G;
      tsum += t;
      if (k != j && std::abs(de) >= degen) {
        const double term = 4.0 * alpha * t / de;
        srule += term;
        max_term = std::max(max_term, std::abs(term));
      }
    }
    gap_rel[j] = worst_gap;
    const double corr = h * h * kj / (2.0 * alpha);
    sum_rel[j] = std::abs((1.0 - corr) - srule) / std::max(max_term, corr);
    plain_res[j] = std::abs(1.0 - srule);
    row_defect[j] = std::abs(tsum - gnorm2) / gnorm2;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n; ++j) scan_row(j);
  } else {
    for (int j = 0; j < n; ++j) scan_row(j);
  }

  IdentityScan out;
  for (int j = 0; j < n; ++j) {
    out.max_gap_relative = std::max(out.max_gap_relative, gap_rel[j]);
    out.max_corrected_sum_rule_relative =
        std::max(out.max_corrected_sum_rule_relative, sum_rel[j]);
    out.max_plain_sum_rule_residual =
        std::max(out.max_plain_sum_rule_residual, plain_res[j]);
    out.max_row_sum_defect = std::max(out.max_row_sum_defect, row_defect[j]);
  }
  return out;
}

}  // namespace speclab
