#include "speclab/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace speclab {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

PotentialSpec PotentialSpec::harmonic(double omega2) {
  require(omega2 > 0, "harmonic: stiffness must be > 0");
  PotentialSpec s;
  s.family = PotentialFamily::HarmonicWell;
  s.stiffness = omega2;
  return s;
}

PotentialSpec PotentialSpec::sech2(double g) {
  require(g > 0, "sech2: depth must be > 0");
  PotentialSpec s;
  s.family = PotentialFamily::SechSquaredWell;
  s.depth = g;
  return s;
}

PotentialSpec PotentialSpec::square(double depth, double half_width) {
  require(depth > 0 && half_width > 0, "square: depth and half-width must be > 0");
  PotentialSpec s;
  s.family = PotentialFamily::SquareWell;
  s.depth = depth;
  s.half_width = half_width;
  return s;
}

PotentialSpec PotentialSpec::gaussian(double depth, double width) {
  require(depth > 0 && width > 0, "gaussian: depth and width must be > 0");
  PotentialSpec s;
  s.family = PotentialFamily::GaussianWell;
  s.depth = depth;
  s.width = width;
  return s;
}

PotentialSpec PotentialSpec::quartic(double c) {
  require(c > 0, "quartic: coefficient must be > 0");
  PotentialSpec s;
  s.family = PotentialFamily::QuarticWell;
  s.coefficient = c;
  return s;
}

PotentialSpec PotentialSpec::grid(std::vector<double> x, std::vector<double> v) {
  require(x.size() == v.size() && x.size() >= 2,
          "grid: need matching abscissae/values, at least 2 points");
  for (size_t i = 1; i < x.size(); ++i)
    require(x[i] > x[i - 1], "grid: abscissae must be strictly increasing");
  PotentialSpec s;
  s.family = PotentialFamily::GridSampled;
  s.abscissae = std::move(x);
  s.samples = std::move(v);
  return s;
}

PotentialSpec PotentialSpec::separable(std::vector<PotentialSpec> factors) {
  require(factors.size() >= 2, "separable: need at least 2 factors");
  for (const auto& f : factors)
    require(f.dimension == 1, "separable: factors must be one-dimensional");
  PotentialSpec s = factors.front();
  s.dimension = static_cast<int>(factors.size());
  s.separable_factors = std::move(factors);
  return s;
}

bool PotentialSpec::decaying() const {
  if (!separable_factors.empty())
    return std::all_of(separable_factors.begin(), separable_factors.end(),
                       [](const PotentialSpec& f) { return f.decaying(); });
  switch (family) {
    case PotentialFamily::SechSquaredWell:
    case PotentialFamily::SquareWell:
    case PotentialFamily::GaussianWell:
      return true;
    case PotentialFamily::GridSampled:
      return std::all_of(samples.begin(), samples.end(),
                         [](double v) { return v <= 0.0; });
    default:
      return false;
  }
}

bool PotentialSpec::confining() const {
  if (!separable_factors.empty())
    return std::all_of(separable_factors.begin(), separable_factors.end(),
                       [](const PotentialSpec& f) { return f.confining(); });
  return family == PotentialFamily::HarmonicWell ||
         family == PotentialFamily::QuarticWell;
}

std::string PotentialSpec::name() const {
  switch (family) {
    case PotentialFamily::HarmonicWell: return "harmonic";
    case PotentialFamily::SechSquaredWell: return "sech2";
    case PotentialFamily::SquareWell: return "square";
    case PotentialFamily::GaussianWell: return "gauss";
    case PotentialFamily::QuarticWell: return "quartic";
    case PotentialFamily::GridSampled: return "grid";
  }
  return "?";
}

double evaluate(const PotentialSpec& spec, double x) {
  require(spec.dimension == 1 || !spec.separable_factors.empty(),
          "evaluate: scalar point needs a one-dimensional spec");
  if (spec.dimension != 1)
    throw std::invalid_argument("evaluate: scalar point on d>1 spec");
  switch (spec.family) {
    case PotentialFamily::HarmonicWell:
      return spec.stiffness * x * x;
    case PotentialFamily::SechSquaredWell: {
      const double c = std::cosh(x);
      return -spec.depth / (c * c);
    }
    case PotentialFamily::SquareWell:
      return std::abs(x) <= spec.half_width ? -spec.depth : 0.0;
    case PotentialFamily::GaussianWell: {
      const double u = x / spec.width;
      return -spec.depth * std::exp(-u * u);
    }
    case PotentialFamily::QuarticWell:
      return spec.coefficient * x * x * x * x;
    case PotentialFamily::GridSampled: {
      const auto& xs = spec.abscissae;
      if (x < xs.front() || x > xs.back())
        throw std::out_of_range("grid potential: point outside sampled range");
      auto it = std::upper_bound(xs.begin(), xs.end(), x);
      if (it == xs.end()) return spec.samples.back();
      const size_t hi = static_cast<size_t>(it - xs.begin());
      if (hi == 0) return spec.samples.front();
      const size_t lo = hi - 1;
      const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
      return (1.0 - w) * spec.samples[lo] + w * spec.samples[hi];
    }
  }
  throw std::logic_error("unreachable");
}

double evaluate(const PotentialSpec& spec, const std::vector<double>& x) {
  if (spec.dimension == 1) {
    require(x.size() == 1, "evaluate: point dimension mismatch");
    return evaluate(spec, x[0]);
  }
  require(static_cast<int>(x.size()) == spec.dimension &&
              spec.separable_factors.size() == x.size(),
          "evaluate: d>1 requires separable factors matching the point");
  double v = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    v += evaluate(spec.separable_factors[i], x[i]);
  return v;
}

double gamma_fn(double x) {
  if (x <= 0.0) throw std::domain_error("gamma_fn: argument must be > 0");
  const double twice = 2.0 * x;
  const double r = std::round(twice);
  if (std::abs(twice - r) < 1e-12 && r < 340.0) {
    // exact recurrence from Gamma(1)=1 or Gamma(1/2)=sqrt(pi)
    long k = static_cast<long>(r);  // x = k/2
    double acc = (k % 2 == 0) ? 1.0 : std::sqrt(kPi);
    double arg = (k % 2 == 0) ? 1.0 : 0.5;
    while (arg + 0.5 < x + 0.25) {  // multiply up to x
      acc *= arg;
      arg += 1.0;
    }
    return acc;
  }
  return std::tgamma(x);  // ~1e-15 relative, documented
}

double beta_fn(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double classical_constant(double sigma, int d) {
  if (sigma < 0) throw std::domain_error("classical_constant: sigma must be >= 0");
  if (d < 1) throw std::domain_error("classical_constant: dimension must be >= 1");
  return std::pow(4.0 * kPi, -0.5 * d) * gamma_fn(sigma + 1.0) /
         gamma_fn(sigma + 0.5 * d + 1.0);
}

double phase_space_integral(const PotentialSpec& spec, double exponent,
                            const QuadratureConfig& quad) {
  if (!(exponent > 0)) throw std::domain_error("phase_space_integral: exponent must be > 0");
  if (!spec.decaying())
    throw std::domain_error("phase_space_integral: potential must be a decaying well");
  if (spec.dimension != 1)
    throw std::invalid_argument("phase_space_integral: implemented for d = 1");
  switch (spec.family) {
    case PotentialFamily::SquareWell:
      // indicator integrand, closed form
      return std::pow(spec.depth, exponent) * 2.0 * spec.half_width;
    case PotentialFamily::GridSampled: {
      // trapezoid on the given grid
      double acc = 0.0;
      for (size_t i = 1; i < spec.abscissae.size(); ++i) {
        const double f0 = std::pow(std::max(-spec.samples[i - 1], 0.0), exponent);
        const double f1 = std::pow(std::max(-spec.samples[i], 0.0), exponent);
        acc += 0.5 * (f0 + f1) * (spec.abscissae[i] - spec.abscissae[i - 1]);
      }
      return acc;
    }
    default: {
      auto f = [&](double x) {
        return std::pow(std::max(-evaluate(spec, x), 0.0), exponent);
      };
      const double peak = f(0.0);
      const double r = decay_radius(f, peak, 4.0);
      return integrate(f, -r, r, quad);
    }
  }
}

double laplace_integral(const PotentialSpec& spec, double t,
                        const QuadratureConfig& quad) {
  if (!(t > 0)) throw std::domain_error("laplace_integral: t must be > 0");
  if (!spec.confining())
    throw std::domain_error("laplace_integral: potential must be confining");
  if (spec.dimension != 1) {
    // separable product of one-dimensional integrals
    double acc = 1.0;
    for (const auto& f : spec.separable_factors) acc *= laplace_integral(f, t, quad);
    return acc;
  }
  auto f = [&](double x) { return std::exp(-t * evaluate(spec, x)); };
  const double r = decay_radius(f, f(0.0), 4.0);
  return integrate(f, -r, r, quad);
}

ClassicalBound classical_bound(const PotentialSpec& spec, double sigma,
                               const QuadratureConfig& quad) {
  ClassicalBound b;
  b.sigma = sigma;
  b.dimension = spec.dimension;
  b.classical_constant = classical_constant(sigma, spec.dimension);
  b.phase_space_integral =
      phase_space_integral(spec, sigma + 0.5 * spec.dimension, quad);
  b.bound = b.classical_constant * b.phase_space_integral;
  return b;
}

PotentialSpec read_grid_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file: " + path);
  std::vector<double> xs, vs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ls(line);
    double x, v;
    if (!(ls >> x >> v)) {
      if (first) { first = false; continue; }  // header
      throw std::runtime_error("malformed line in potential file: " + line);
    }
    first = false;
    xs.push_back(x);
    vs.push_back(v);
  }
  return PotentialSpec::grid(std::move(xs), std::move(vs));
}

}  // namespace speclab
