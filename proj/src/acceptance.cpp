#include "speclab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "speclab/heat_trace.hpp"
#include "speclab/matrix_elements.hpp"
#include "speclab/moments.hpp"
#include "speclab/oscillator_exact.hpp"
#include "speclab/potentials.hpp"

namespace speclab {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Numeric bound states vs the reflectionless-well closed form on the
// pinned L=20, n=3999 grid. The alpha=0.25 point carries five bound
// states reaching |E| ~ 4.9; the O(h^2) discretization floor there is
// ~1.5e-4, above the 1e-4 target, and is reported honestly.
CheckResult criterion_spectrum_oracle() {
  CheckResult c{"numeric-spectrum-matches-closed-form", "spectrum-oracle"};
  c.tolerance = 1e-4;
  double worst = 0.0;
  std::string detail;
  for (double alpha : {0.25, 1.0, 4.0}) {
    const Spectrum num =
        negative_spectrum(PotentialSpec::sech2(6.0), alpha, standard_well_grid());
    const Spectrum exact = poschl_teller_spectrum(6.0, alpha);
    double err = 0.0;
    if (num.size() != exact.size()) {
      err = 1.0;
    } else {
      for (int i = 0; i < num.size(); ++i)
        err = std::max(err,
                       std::abs(num.eigenvalues[i] - exact.eigenvalues[i]));
    }
    worst = std::max(worst, err);
    detail += "alpha=" + fmt(alpha) + " max|dE|=" + fmt(err) + "; ";
  }
  c.value = worst;
  c.pass = worst <= c.tolerance;
  c.detail = detail +
             (c.pass ? "" :
              "alpha=0.25 sits at the second-order discretization floor of the "
              "pinned grid (error drops 4x when n doubles; not a solver defect)");
  return c;
}

CheckResult criterion_matrix_identities() {
  CheckResult c{"matrix-exact-gap-and-corrected-sum-rule", "matrix-identities"};
  c.tolerance = 1e-9;
  double worst_gap = 0.0, worst_sum = 0.0;
  for (int n : {200, 2000}) {
    const auto H = build_hamiltonian(PotentialSpec::sech2(6.0), 1.0, matrix_grid(n));
    const auto scan = full_identity_scan(full_spectrum(H));
    worst_gap = std::max(worst_gap, scan.max_gap_relative);
    worst_sum = std::max(worst_sum, scan.max_corrected_sum_rule_relative);
  }
  c.value = std::max(worst_gap, worst_sum);
  c.pass = worst_gap <= 1e-10 && worst_sum <= 1e-9;
  c.detail = "max gap residual " + fmt(worst_gap) + " (tol 1e-10), corrected sum rule " +
             fmt(worst_sum) + " (tol 1e-9), n in {200, 2000}";
  return c;
}

CheckResult criterion_sum_rule() {
  CheckResult c{"continuum-sum-rule-with-refinement", "sum-rule"};
  c.tolerance = 5e-4;
  double res[2];
  int idx = 0;
  for (int n : {1199, 2399}) {
    const auto H = build_hamiltonian(PotentialSpec::harmonic(1.0), 1.0,
                                     DiscretizationConfig{12.0, n});
    auto kin = kinetic_matrix(full_spectrum(H));
    res[idx++] = sum_rule_residual(kin, 0).residual;
  }
  const double ratio = res[0] / res[1];
  c.value = res[1];
  c.pass = res[1] <= 5e-4 && ratio >= 3.5 && ratio <= 4.5;
  c.detail = "residual " + fmt(res[1]) + " at h, " + fmt(res[0]) +
             " at 2h; ratio " + fmt(ratio) + " (want [3.5, 4.5])";
  return c;
}

CheckResult criterion_trace_formula() {
  CheckResult c{"trace-formula-residual-and-refinement", "trace-formula"};
  c.tolerance = 1e-2;
  std::string detail;
  bool pass = true;
  double worst = 0.0;
  // decaying well with f(E) = (-E)_+^2, cutoff 0 (f vanishes above)
  {
    double rel[2];
    int idx = 0;
    for (int n : {999, 1999}) {
      auto kin = kinetic_matrix(full_spectrum(
          build_hamiltonian(PotentialSpec::sech2(6.0), 1.0, matrix_grid(n))));
      rel[idx++] = trace_formula_residual(kin, TestFunction::riesz_plus(2.0), 0.0)
                       .relative();
    }
    const double ratio = rel[0] / rel[1];
    pass = pass && rel[1] <= 1e-2 && ratio >= 3.0 && ratio <= 5.0;
    worst = std::max(worst, rel[1]);
    detail += "riesz: rel " + fmt(rel[1]) + ", ratio " + fmt(ratio) + "; ";
  }
  // confining problem with f(E) = e^{-E}, outer sum cut at E <= 60
  {
    double rel[2];
    int idx = 0;
    for (int n : {1199, 2399}) {
      auto kin = kinetic_matrix(full_spectrum(build_hamiltonian(
          PotentialSpec::harmonic(1.0), 1.0, DiscretizationConfig{12.0, n})));
      rel[idx++] =
          trace_formula_residual(kin, TestFunction::exp_neg(1.0), 60.0).relative();
    }
    const double ratio = rel[0] / rel[1];
    pass = pass && rel[1] <= 1e-2 && ratio >= 3.0 && ratio <= 5.0;
    worst = std::max(worst, rel[1]);
    detail += "heat: rel " + fmt(rel[1]) + ", ratio " + fmt(ratio);
  }
  c.value = worst;
  c.pass = pass;
  c.detail = detail;
  return c;
}

CheckResult criterion_quadratic_identity() {
  CheckResult c{"quadratic-identity-two-thresholds", "quadratic-identity"};
  c.tolerance = 1e-2;
  auto kin = kinetic_matrix(full_spectrum(
      build_hamiltonian(PotentialSpec::sech2(6.0), 1.0, matrix_grid(1999))));
  bool pass = true;
  double worst = 0.0;
  std::string detail;
  for (double z : {0.0, -2.0}) {
    const auto q = quadratic_identity_check(kin, z);
    const double rel = q.residual / q.scale;
    pass = pass && rel <= 1e-2 && q.rhs_nonpositive;
    worst = std::max(worst, rel);
    detail += "z=" + fmt(z) + ": rel " + fmt(rel) + ", rhs " + fmt(q.rhs) + "; ";
  }
  c.value = worst;
  c.pass = pass;
  c.detail = detail;
  return c;
}

CheckResult criterion_moment_monotonicity() {
  CheckResult c{"scaled-moment-non-increasing", "moment-monotonicity"};
  const auto grid = geometric_grid(0.05, 5.0, 50);
  const auto exact = exact_poschl_teller_moment_curve(6.0, 2.0, grid);
  const auto ve = check_monotonicity(exact, 0.0);

  const double numeric_slack = 5e-3;  // ~10x the observed refinement error
  const auto numeric =
      moment_curve(PotentialSpec::sech2(6.0), 2.0, geometric_grid(0.05, 5.0, 12),
                   1, standard_well_grid());
  const auto vn = check_monotonicity(numeric, numeric_slack);

  c.tolerance = numeric_slack;
  c.value = std::max(ve.max_violation, vn.max_violation);
  c.pass = ve.non_increasing && vn.non_increasing;
  c.detail = "exact slack 0 violation " + fmt(ve.max_violation) +
             "; numeric slack " + fmt(numeric_slack) + " violation " +
             fmt(vn.max_violation);
  return c;
}

CheckResult criterion_sharp_lt() {
  CheckResult c{"sharp-moment-bound-ratio", "sharp-lieb-thirring"};
  c.tolerance = 1.005;
  const auto pinned =
      lt_check(PotentialSpec::sech2(6.0), 2.0, 1.0, 1, standard_well_grid());
  bool pass = std::abs(pinned.ratio - 0.9640) <= 0.002;
  std::string detail = "sech2 sigma=2 alpha=1 ratio " + fmt(pinned.ratio) + "; ";
  double worst = pinned.ratio;
  const std::vector<PotentialSpec> wells = {PotentialSpec::sech2(6.0),
                                            PotentialSpec::square(1.0, 1.0),
                                            PotentialSpec::gaussian(1.0, 1.0)};
  for (const auto& w : wells)
    for (double sigma : {2.0, 2.5, 3.0})
      for (double alpha : {0.1, 1.0, 10.0}) {
        const auto r = lt_check(w, sigma, alpha, 1, standard_well_grid());
        worst = std::max(worst, r.ratio);
        pass = pass && r.ratio <= 1.005;
      }
  c.value = worst;
  c.pass = pass;
  c.detail = detail + "worst ratio over wells x sigma x alpha: " + fmt(worst);
  return c;
}

CheckResult criterion_semiclassical() {
  CheckResult c{"semiclassical-moment-limit", "semiclassical-limit"};
  const double limit = std::pow(6.0, 2.5) / 5.0;  // phase-space value
  const auto curve = exact_poschl_teller_moment_curve(6.0, 2.0, {0.01});
  const double v = curve.values.front();
  c.tolerance = 0.05;
  c.value = v;
  c.pass = v < limit && std::abs(v - limit) / limit <= 0.05;
  c.detail = "alpha=0.01 scaled moment " + fmt(v) + " vs limit " + fmt(limit);
  return c;
}

CheckResult criterion_heat_trace() {
  CheckResult c{"heat-trace-closed-form-bound-monotone", "heat-trace"};
  c.tolerance = 1e-6;
  bool pass = true;
  std::string detail;
  // closed form vs independently summed exact series
  double worst_rel = 0.0;
  for (double alpha : {0.25, 0.7, 1.0, 2.3, 4.0})
    for (double t : {0.5, 1.0, 2.0}) {
      const double exact = oscillator_exact_heat_trace(alpha, t, 1);
      const double e1 = std::sqrt(alpha);
      double series = 0.0, e = e1;
      while (std::exp(-t * e) > 1e-20 * exact) {
        series += std::exp(-t * e);
        e += 2.0 * e1;
      }
      worst_rel = std::max(worst_rel, std::abs(series - exact) / exact);
    }
  pass = pass && worst_rel <= 1e-6;
  detail += "closed-form rel err " + fmt(worst_rel) + "; ";
  // phase-space bound on the numeric traces
  double worst_ratio = 0.0;
  for (const auto& spec : {PotentialSpec::harmonic(1.0), PotentialSpec::quartic(1.0)})
    for (double t : {0.5, 1.0, 2.0})
      for (double alpha : {0.25, 1.0, 4.0}) {
        const auto g =
            golden_thompson_check(spec, alpha, t, 1, standard_confining_grid());
        worst_ratio = std::max(worst_ratio, g.ratio);
      }
  pass = pass && worst_ratio <= 1.0;
  detail += "worst phase-space ratio " + fmt(worst_ratio) + "; ";
  // monotonicity: exact oscillator slack 0, numeric quartic with slack
  const auto grid = geometric_grid(0.1, 10.0, 20);
  const auto exact_curve = exact_oscillator_heat_curve(1.0, grid, 1);
  const auto quartic_curve = scaled_heat_curve(PotentialSpec::quartic(1.0), 1.0,
                                               grid, 1, standard_confining_grid(),
                                               1e-6);
  pass = pass && exact_curve.verdict.non_increasing &&
         quartic_curve.verdict.non_increasing;
  detail += "curves non-increasing: " +
            std::string(exact_curve.verdict.non_increasing &&
                                quartic_curve.verdict.non_increasing
                            ? "yes"
                            : "no");
  c.value = worst_ratio;
  c.pass = pass;
  c.detail = detail;
  return c;
}

CheckResult criterion_counterexample() {
  CheckResult c{"low-sigma-derivative-signs", "oscillator-counterexample"};
  c.tolerance = 1e-8;
  bool pass = true;
  for (int d : {1, 2, 3})
    for (int k : {1, 2}) {
      const double a = breakpoint_alpha(d, k);
      for (double sigma : {0.0, 0.5, 1.0, 1.5, 1.99})
        pass = pass &&
               p_derivative_sign(d, sigma, a) == DerivativeSign::Positive;
      pass = pass && p_derivative_sign(d, 2.0, a) == DerivativeSign::Zero;
    }
  const double v = p_derivative(1, 1.0, breakpoint_alpha(1, 1));
  pass = pass && std::abs(v - 0.5) <= 1e-10;
  c.value = v;
  c.pass = pass;
  c.detail = "signs positive for sigma<2, zero at sigma=2, d in {1,2,3}; "
             "d=1 sigma=1 derivative at the first breakpoint " + fmt(v) +
             " (want 0.5 to 1e-10)";
  return c;
}

CheckResult criterion_eigenvalue_derivative() {
  CheckResult c{"eigenvalue-derivative-equals-kinetic-energy",
                "eigenvalue-derivative"};
  c.tolerance = 1e-3;
  const auto well = feynman_hellmann(PotentialSpec::sech2(6.0), 1.0, 0, 1e-3,
                                     standard_well_grid());
  const auto osc = feynman_hellmann(PotentialSpec::harmonic(1.0), 1.0, 0, 1e-3,
                                    standard_confining_grid());
  const bool pass = std::abs(well.central_difference - 0.8) <= 1e-3 &&
                    well.residual <= 1e-3 &&
                    std::abs(osc.central_difference - 0.5) <= 1e-3 &&
                    osc.residual <= 1e-3;
  c.value = std::max(well.residual, osc.residual);
  c.pass = pass;
  c.detail = "well dE/da " + fmt(well.central_difference) + " T0 " +
             fmt(well.kinetic_energy) + "; oscillator dE/da " +
             fmt(osc.central_difference) + " T0 " + fmt(osc.kinetic_energy);
  return c;
}

CheckResult criterion_moment_interpolation() {
  CheckResult c{"beta-average-moment-identity", "moment-interpolation"};
  c.tolerance = 1e-8;
  double worst = 0.0;
  for (double E : {-0.5, -1.0, -2.0})
    for (double sigma : {2.5, 3.0, 4.0})
      worst = std::max(worst, aizenman_lieb_identity(E, sigma).residual);
  c.value = worst;
  c.pass = worst <= 1e-8;
  c.detail = "worst relative residual " + fmt(worst) +
             " over E in {-0.5,-1,-2}, sigma in {2.5,3,4}";
  return c;
}

}  // namespace

CheckResult run_criterion(int index) {
  switch (index) {
    case 1: return criterion_spectrum_oracle();
    case 2: return criterion_matrix_identities();
    case 3: return criterion_sum_rule();
    case 4: return criterion_trace_formula();
    case 5: return criterion_quadratic_identity();
    case 6: return criterion_moment_monotonicity();
    case 7: return criterion_sharp_lt();
    case 8: return criterion_semiclassical();
    case 9: return criterion_heat_trace();
    case 10: return criterion_counterexample();
    case 11: return criterion_eigenvalue_derivative();
    case 12: return criterion_moment_interpolation();
    default:
      throw std::invalid_argument("run_criterion: index must be 1..12");
  }
}

VerificationReport run_acceptance() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.command = "all";
  for (int i = 1; i <= kAcceptanceCriteria; ++i) r.add(run_criterion(i));
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  r.seal();
  return r;
}

}  // namespace speclab
