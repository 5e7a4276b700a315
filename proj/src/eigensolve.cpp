#include "speclab/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace speclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sturm pivot floor, LAPACK-style: a vanishing pivot is replaced by
// -pivmin (a perturbation of the shifted matrix below rounding level).
double pivmin_of(const Hamiltonian1D& H) {
  const double b2 = H.off_diagonal * H.off_diagonal;
  return std::numeric_limits<double>::min() / kEps * std::max(b2, 1.0);
}

int sturm_count(const std::vector<double>& diag, double b2, double lambda,
                double pivmin) {
  int count = 0;
  double q = diag[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    q = (diag[i] - lambda) - b2 / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

// Bisection for the k-th (0-based) eigenvalue inside [lo, hi].
double bisect_index(const std::vector<double>& diag, double b2, double pivmin,
                    int k, double lo, double hi, double tol) {
  while (hi - lo > tol + 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at rounding limit
    if (sturm_count(diag, b2, mid, pivmin) >= k + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift) x = b for tridiagonal T with constant off-diagonal,
// LU with partial pivoting (fill-in on the second superdiagonal).
void shifted_solve(const std::vector<double>& diag, double off, double shift,
                   std::vector<double>& b, std::vector<double>& work) {
  const int n = static_cast<int>(diag.size());
  // d: main diagonal, u1: superdiag, u2: second superdiag, l: subdiag factor
  std::vector<double>& d = work;
  d.resize(3 * n);
  double* u1 = d.data() + n;
  double* u2 = d.data() + 2 * n;
  for (int i = 0; i < n; ++i) {
    d[i] = diag[i] - shift;
    u1[i] = (i + 1 < n) ? off : 0.0;
    u2[i] = 0.0;
  }
  const double tiny = std::numeric_limits<double>::min() / kEps;
  for (int i = 0; i + 1 < n; ++i) {
    double sub = off;  // current subdiagonal entry in row i+1
    if (std::abs(d[i]) < std::abs(sub)) {
      std::swap(d[i], sub);
      std::swap(u1[i], d[i + 1]);
      u2[i] = u1[i + 1];
      u1[i + 1] = 0.0;
      std::swap(b[i], b[i + 1]);
    }
    if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0 ? -tiny : tiny);
    const double m = sub / d[i];
    d[i + 1] -= m * u1[i];
    u1[i + 1] -= m * u2[i];
    b[i + 1] -= m * b[i];
  }
  if (std::abs(d[n - 1]) < tiny) d[n - 1] = (d[n - 1] < 0 ? -tiny : tiny);
  // back substitution
  b[n - 1] /= d[n - 1];
  if (n >= 2) b[n - 2] = (b[n - 2] - u1[n - 2] * b[n - 1]) / d[n - 2];
  for (int i = n - 3; i >= 0; --i)
    b[i] = (b[i] - u1[i] * b[i + 1] - u2[i] * b[i + 2]) / d[i];
}

// Fixed-seed xorshift64 start vector, salted per eigenvalue index so
// near-degenerate pairs start from distinct mixtures: bit-reproducible.
void seed_vector(std::vector<double>& v, uint64_t salt) {
  uint64_t s = 0x9E3779B97F4A7C15ull ^ (0xD1B54A32D192ED03ull * (salt + 1));
  for (double& x : v) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    x = static_cast<double>(s >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct InverseIterationResult {
  std::vector<double> vector;  // unit 2-norm
  double rayleigh = 0.0;
  double residual = 0.0;  // ||Hv - rho v||_2
};

InverseIterationResult inverse_iteration(const Hamiltonian1D& H, double lambda,
                                         uint64_t salt = 0, int max_iter = 40) {
  const int n = H.size();
  InverseIterationResult r;
  std::vector<double>& v = r.vector;
  v.resize(n);
  seed_vector(v, salt);
  double nv = norm2(v);
  for (double& x : v) x /= nv;

  std::vector<double> work, hv(n);
  const double scale = H.norm_bound();
  const double target = 64.0 * kEps * scale;
  for (int it = 0; it < max_iter; ++it) {
    shifted_solve(H.diagonal, H.off_diagonal, lambda, v, work);
    nv = norm2(v);
    for (double& x : v) x /= nv;
    H.apply(v.data(), hv.data());
    double rho = 0.0;
    for (int i = 0; i < n; ++i) rho += v[i] * hv[i];
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = hv[i] - rho * v[i];
      res += d * d;
    }
    r.rayleigh = rho;
    r.residual = std::sqrt(res);
    if (r.residual <= target) break;
  }
  return r;
}

}  // namespace

int count_below(const Hamiltonian1D& H, double lambda) {
  return sturm_count(H.diagonal, H.off_diagonal * H.off_diagonal, lambda,
                     pivmin_of(H));
}

std::vector<double> eigenvalues_in(const Hamiltonian1D& H, double lo, double hi,
                                   double tol, Exec exec) {
  if (!(lo < hi)) throw std::invalid_argument("eigenvalues_in: need lo < hi");
  if (!(tol > 0)) throw std::invalid_argument("eigenvalues_in: need tol > 0");
  const double b2 = H.off_diagonal * H.off_diagonal;
  const double pivmin = pivmin_of(H);
  const int c_lo = sturm_count(H.diagonal, b2, lo, pivmin);
  const int c_hi = sturm_count(H.diagonal, b2, hi, pivmin);
  std::vector<double> out(std::max(c_hi - c_lo, 0));
  const int m = static_cast<int>(out.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i)
      out[i] = bisect_index(H.diagonal, b2, pivmin, c_lo + i, lo, hi, tol);
  } else {
    for (int i = 0; i < m; ++i)
      out[i] = bisect_index(H.diagonal, b2, pivmin, c_lo + i, lo, hi, tol);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> eigenvector(const Hamiltonian1D& H, double eigenvalue) {
  auto r = inverse_iteration(H, eigenvalue);
  const double contract = 1e-8 * H.norm_bound();
  if (r.residual > contract)
    throw SolverError("eigenvector: inverse iteration did not converge, residual " +
                          std::to_string(r.residual),
                      r.residual);
  const double s = 1.0 / std::sqrt(H.spacing);
  for (double& x : r.vector) x *= s;
  return r.vector;
}

Spectrum negative_spectrum(const PotentialSpec& spec, double alpha,
                           const DiscretizationConfig& config,
                           bool with_vectors) {
  if (!spec.decaying())
    throw std::domain_error("negative_spectrum: potential must be a decaying well");
  const Hamiltonian1D H = build_hamiltonian(spec, alpha, config);
  const double scale = H.norm_bound();
  const double tol = std::max(8.0 * kEps * scale, 1e-14);
  Spectrum s;
  s.alpha = alpha;
  s.dimension = 1;
  s.source = SpectrumSource::Numeric;
  s.eigenvalues = eigenvalues_in(H, H.gersh_lo() - 1.0, 0.0, tol);
  if (with_vectors) {
    s.spacing = H.spacing;
    s.eigenvectors.reserve(s.eigenvalues.size());
    for (double e : s.eigenvalues) s.eigenvectors.push_back(eigenvector(H, e));
  }
  return s;
}

Spectrum full_spectrum(const Hamiltonian1D& H, bool with_vectors,
                       bool allow_large, Exec exec) {
  const int n = H.size();
  if (with_vectors && n > 2400 && !allow_large)
    throw std::invalid_argument(
        "full_spectrum: n > 2400 needs allow_large (O(n^2) eigenbasis cost)");

  const double b2 = H.off_diagonal * H.off_diagonal;
  const double pivmin = pivmin_of(H);
  const double lo = H.gersh_lo() - 1.0, hi = H.gersh_hi() + 1.0;
  const double scale = H.norm_bound();
  const double tol = 8.0 * kEps * scale;

  Spectrum s;
  s.alpha = H.alpha;
  s.dimension = 1;
  s.source = SpectrumSource::Numeric;
  s.eigenvalues.resize(n);
  auto bisect_all = [&](int i) {
    s.eigenvalues[i] = bisect_index(H.diagonal, b2, pivmin, i, lo, hi, tol);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) bisect_all(i);
  } else {
    for (int i = 0; i < n; ++i) bisect_all(i);
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  if (!with_vectors) return s;

  s.spacing = H.spacing;
  s.eigenvectors.resize(n);
  std::vector<double> residuals(n);
  auto solve_one = [&](int i) {
    auto r = inverse_iteration(H, s.eigenvalues[i], static_cast<uint64_t>(i));
    residuals[i] = r.residual;
    s.eigenvalues[i] = r.rayleigh;  // refined, |rho - bisect| <= tol
    s.eigenvectors[i] = std::move(r.vector);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) solve_one(i);
  } else {
    for (int i = 0; i < n; ++i) solve_one(i);
  }
  const double contract = 1e-8 * scale;
  for (int i = 0; i < n; ++i)
    if (residuals[i] > contract)
      throw SolverError("full_spectrum: eigenpair " + std::to_string(i) +
                            " residual " + std::to_string(residuals[i]),
                      residuals[i]);

  // Re-orthogonalize clustered inverse-iteration vectors (sequential sweep;
  // Gram-Schmidt against the preceding vectors in the cluster window). If a
  // vector is annihilated by the sweep -- the iteration converged onto an
  // already-claimed direction -- restart it from a fresh salted seed.
  const double cluster = 1e-6 * scale;
  auto sweep = [&](int i, std::vector<double>& v) {
    for (int k = i - 1; k >= 0 && s.eigenvalues[i] - s.eigenvalues[k] < cluster;
         --k) {
      double ov = 0.0;
      const auto& w = s.eigenvectors[k];
      for (int j = 0; j < n; ++j) ov += v[j] * w[j];
      if (ov != 0.0)
        for (int j = 0; j < n; ++j) v[j] -= ov * w[j];
    }
    return norm2(v);
  };
  for (int i = 1; i < n; ++i) {
    double nv = sweep(i, s.eigenvectors[i]);
    for (int attempt = 1; nv < 1e-3 && attempt <= 5; ++attempt) {
      auto r = inverse_iteration(H, s.eigenvalues[i],
                                 static_cast<uint64_t>(i + 1000 * attempt));
      s.eigenvectors[i] = std::move(r.vector);
      nv = sweep(i, s.eigenvectors[i]);
    }
    if (!(nv > 0.0))
      throw SolverError("full_spectrum: cluster re-orthogonalization failed at "
                        "index " + std::to_string(i), nv);
    for (double& x : s.eigenvectors[i]) x /= nv;
  }
  // grid normalization h * sum v^2 = 1
  const double gs = 1.0 / std::sqrt(H.spacing);
  for (auto& v : s.eigenvectors)
    for (double& x : v) x *= gs;
  // eigenvalue order must survive Rayleigh refinement
  for (int i = 1; i < n; ++i)
    if (s.eigenvalues[i] < s.eigenvalues[i - 1]) {
      std::swap(s.eigenvalues[i], s.eigenvalues[i - 1]);
      std::swap(s.eigenvectors[i], s.eigenvectors[i - 1]);
    }
  return s;
}

}  // namespace speclab
