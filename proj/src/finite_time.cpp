// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/finite_time.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qms/parallel.hpp"

namespace qms {

const char* to_string(PairKind k) {
  return k == PairKind::discrete ? "discrete" : "continuous";
}

const char* to_string(Recipe r) {
  switch (r) {
    case Recipe::user_supplied: return "user_supplied";
    case Recipe::chi2: return "chi2";
    case Recipe::detailed_balance: return "detailed_balance";
    case Recipe::minimal_polynomial: return "minimal_polynomial";
  }
  return "unknown";
}

const char* to_string(Regime r) {
  return r == Regime::pre_threshold ? "pre_threshold" : "post_threshold";
}

ConvergencePair user_pair(double K, double rate, PairKind kind) {
  ConvergencePair p;
  p.K = K;
  p.rate = rate;
  p.kind = kind;
  p.recipe = Recipe::user_supplied;
  return p;
}

namespace {

void check_discrete(const ConvergencePair& pair) {
  if (pair.kind != PairKind::discrete) throw DomainError("expected a discrete pair (K, mu)");
  if (!(pair.K >= 0.0) || !std::isfinite(pair.K)) {
    throw DomainError("K must be finite and >= 0, got " + format_number(pair.K));
  }
  if (!(pair.rate >= 0.0 && pair.rate < 1.0)) {
    throw DomainError("mu must lie in [0, 1), got " + format_number(pair.rate));
  }
}

void check_continuous(const ConvergencePair& pair) {
  if (pair.kind != PairKind::continuous) throw DomainError("expected a continuous pair (K, nu)");
  if (!(pair.K > 0.0) || !std::isfinite(pair.K)) {
    throw DomainError("K must be finite and > 0, got " + format_number(pair.K));
  }
  if (!(pair.rate > 0.0) || !std::isfinite(pair.rate)) {
    throw DomainError("nu must be finite and > 0, got " + format_number(pair.rate));
  }
}

void check_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " + format_number(v));
  }
}

}  // namespace

int discrete_threshold(double K, double mu) {
  if (K <= 1.0 || mu <= 0.0) return 0;
  const double x = std::log(1.0 / K) / std::log(mu);
  // Snap values within rounding of an integer (log(1/4)/log(1/2) = 2).
  const double snapped = std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x))
                             ? std::round(x)
                             : x;
  return std::max(0, static_cast<int>(std::ceil(snapped)));
}

double continuous_threshold(double K, double nu) {
  return K <= 1.0 ? 0.0 : std::log(K) / nu;
}

FiniteTimeBound discrete_bound(const ConvergencePair& pair, int n, double d0, double dT) {
  check_discrete(pair);
  if (n < 0) throw DomainError("n must be >= 0");
  check_nonnegative(d0, "d0");
  check_nonnegative(dT, "dT");
  const double K = pair.K;
  const double mu = pair.rate;
  const int nhat = discrete_threshold(K, mu);
  FiniteTimeBound b;
  b.threshold = nhat;
  if (n <= nhat) {
    b.regime = Regime::pre_threshold;
    b.initial_term = d0;
    b.perturbation_term = n * dT;
  } else {
    b.regime = Regime::post_threshold;
    const double mun = std::pow(mu, n);
    b.initial_term = K * mun * d0;
    b.perturbation_term = (nhat + K * (std::pow(mu, nhat) - mun) / (1.0 - mu)) * dT;
  }
  b.bound_value = b.initial_term + b.perturbation_term;
  return b;
}

double asymptotic_discrete(const ConvergencePair& pair, double dT) {
  check_discrete(pair);
  check_nonnegative(dT, "dT");
  return (discrete_threshold(pair.K, pair.rate) + 1.0 / (1.0 - pair.rate)) * dT;
}

double discrete_limit(const ConvergencePair& pair, double dT) {
  check_discrete(pair);
  check_nonnegative(dT, "dT");
  const int nhat = discrete_threshold(pair.K, pair.rate);
  return (nhat + pair.K * std::pow(pair.rate, nhat) / (1.0 - pair.rate)) * dT;
}

FiniteTimeBound continuous_bound(const ConvergencePair& pair, double t, double d0, double dL) {
  check_continuous(pair);
  check_nonnegative(t, "t");
  check_nonnegative(d0, "d0");
  check_nonnegative(dL, "dL");
  const double K = pair.K;
  const double nu = pair.rate;
  FiniteTimeBound b;
  b.threshold = continuous_threshold(K, nu);
  if (t < b.threshold) {
    b.regime = Regime::pre_threshold;
    b.initial_term = d0;
    b.perturbation_term = t * dL;
  } else {
    b.regime = Regime::post_threshold;
    const double decay = K * std::exp(-nu * t);
    b.initial_term = decay * d0;
    b.perturbation_term =
        K >= 1.0 ? (std::log(K) + 1.0 - decay) / nu * dL : (K - decay) / nu * dL;
  }
  b.bound_value = b.initial_term + b.perturbation_term;
  return b;
}

double asymptotic_continuous(const ConvergencePair& pair, double dL) {
  check_continuous(pair);
  check_nonnegative(dL, "dL");
  return pair.K >= 1.0 ? (std::log(pair.K) + 1.0) / pair.rate * dL : pair.K / pair.rate * dL;
}

namespace {

struct PointCheck {
  bool ok = false;
  double ratio = 0.0;
};

PointCheck check_point(const SuperOperator& diff, double target, const ValidationOptions& opts,
                       Execution inner) {
  PointCheck c;
  const double upper = norm_1to1_upper_bound(diff);
  double value = upper;
  if (upper > target + opts.tol) {
    OptimizerOptions o = opts.optimizer;
    o.execution = inner;
    value = norm_1to1(diff, o, opts.mode).value;
  }
  c.ok = value <= target + opts.tol;
  c.ratio = value / (target + opts.tol);
  return c;
}

void record_validation(ConvergencePair& pair, const std::vector<double>& points,
                       const std::vector<PointCheck>& checks, double requested) {
  pair.validity_requested = requested;
  pair.validity_checked_to = -1.0;
  pair.worst_ratio = 0.0;
  bool failed = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    pair.worst_ratio = std::max(pair.worst_ratio, checks[i].ratio);
    if (!checks[i].ok && !failed) {
      failed = true;
      pair.diagnostic = "validation failed at " + format_number(points[i]) +
                        " (estimate / bound = " + format_number(checks[i].ratio) + ")";
    }
    if (!failed) pair.validity_checked_to = points[i];
  }
  pair.usable = !failed;
}

}  // namespace

void validate_pair(const SuperOperator& t, ConvergencePair& pair, int n_max,
                   const ValidationOptions& opts) {
  check_discrete(pair);
  if (n_max < 0) throw DomainError("validate_pair: n_max must be >= 0");
  const SuperOperator p = fixed_point_projector(t);
  const Eigen::Index d2 = t.matrix().rows();
  std::vector<SuperOperator> diffs;
  diffs.reserve(static_cast<std::size_t>(n_max) + 1);
  diffs.emplace_back(t.dim(), ComplexMatrix::Identity(d2, d2) - p.matrix());
  for (int n = 1; n <= n_max; ++n) {
    diffs.emplace_back(t.dim(), t.matrix() * diffs.back().matrix());
  }
  const auto count = diffs.size();
  std::vector<PointCheck> checks(count);
  std::vector<double> points(count);
  for_each_index(count, opts.optimizer.execution, [&](std::size_t n) {
    points[n] = static_cast<double>(n);
    checks[n] = check_point(diffs[n], pair.K * std::pow(pair.rate, static_cast<double>(n)),
                            opts, Execution::serial);
  });
  record_validation(pair, points, checks, n_max);
}

void validate_pair(const GeneratorMap& l, ConvergencePair& pair, double t_max, int samples,
                   const ValidationOptions& opts) {
  check_continuous(pair);
  if (samples < 1 || !(t_max >= 0.0)) {
    throw DomainError("validate_pair: need samples >= 1 and t_max >= 0");
  }
  const SuperOperator p = fixed_point_projector(l.propagator(1.0));
  const auto count = static_cast<std::size_t>(samples);
  std::vector<PointCheck> checks(count);
  std::vector<double> points(count);
  for_each_index(count, opts.optimizer.execution, [&](std::size_t k) {
    const double t = samples == 1 ? 0.0 : t_max * static_cast<double>(k) / (samples - 1);
    points[k] = t;
    const SuperOperator diff = l.propagator(t) - p;
    checks[k] = check_point(diff, pair.K * std::exp(-pair.rate * t), opts, Execution::serial);
  });
  record_validation(pair, points, checks, t_max);
}

void require_unique_stationary(const SuperOperator& t, const char* what) {
  if (!stationary_states(t).unique) {
    throw HypothesisError(std::string(what) + ": the map does not have a unique stationary state");
  }
}

namespace {

ComplexMatrix hermitian_power(const ComplexMatrix& h, double power) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(h));
  const RealVector v = es.eigenvalues().array().pow(power);
  return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

WeightedMap weighted_map(const SuperOperator& t) {
  const StationaryStates st = stationary_states(t);
  if (!st.unique) throw DomainError("weighted map: stationary state is not unique");
  const DensityMatrix& sigma = st.basis.front();
  const double lambda_min = min_hermitian_eigenvalue(sigma.matrix());
  if (lambda_min <= 1e-12) {
    throw DomainError("weighted map: stationary state is not full rank (lambda_min = " +
                      format_number(lambda_min) + ")");
  }
  const ComplexMatrix up = hermitian_power(sigma.matrix(), 0.25);
  const ComplexMatrix down = hermitian_power(sigma.matrix(), -0.25);
  // X -> A X B is B^T (x) A.
  const ComplexMatrix omega =
      kron(down.transpose(), down) * t.matrix() * kron(up.transpose(), up);
  return WeightedMap{omega, lambda_min, sigma};
}

ConvergencePair pair_chi2(const SuperOperator& t, int n_max, const ValidationOptions& opts) {
  const WeightedMap w = weighted_map(t);
  const RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(w.omega).singularValues();
  ConvergencePair pair;
  pair.kind = PairKind::discrete;
  pair.recipe = Recipe::chi2;
  pair.rate = sv.size() > 1 ? sv(1) : 0.0;
  pair.K = std::sqrt(1.0 / w.lambda_min - 1.0);
  if (pair.rate >= 1.0) {
    throw DomainError("chi2 pair: second singular value of Omega is " +
                      format_number(pair.rate) + " >= 1");
  }
  validate_pair(t, pair, n_max, opts);
  return pair;
}

ConvergencePair pair_detailed_balance(const SuperOperator& t, int n_max,
                                      const ValidationOptions& opts) {
  const WeightedMap w = weighted_map(t);
  const double residual = (w.omega - w.omega.adjoint()).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw DomainError("detailed-balance pair: Omega is not Hermitian (residual " +
                      format_number(residual) + ")");
  }
  ConvergencePair pair;
  pair.kind = PairKind::discrete;
  pair.recipe = Recipe::detailed_balance;
  pair.rate = spectral_quantities(t).subdominant_modulus;
  pair.K = std::sqrt(2.0 * static_cast<double>(t.dim())) / std::sqrt(w.lambda_min);
  if (pair.rate >= 1.0) {
    throw DomainError("detailed-balance pair: subdominant modulus " + format_number(pair.rate) +
                      " >= 1");
  }
  validate_pair(t, pair, n_max, opts);
  return pair;
}

namespace {

double circle_product(const std::vector<Complex>& roots, Complex z) {
  Complex prod = 1.0;
  for (const Complex& l : roots) prod *= (1.0 - std::conj(l) * z) / (z - l);
  return std::abs(prod);
}

double circle_sup(const std::vector<Complex>& roots, double mu) {
  constexpr int kGrid = 4096;
  constexpr int kRefine = 4;
  const double step = 2.0 * std::numbers::pi / kGrid;
  auto f = [&](double theta) { return circle_product(roots, std::polar(mu, theta)); };
  std::vector<double> values(kGrid);
  for (int k = 0; k < kGrid; ++k) values[static_cast<std::size_t>(k)] = f(k * step);
  std::vector<int> order(kGrid);
  for (int k = 0; k < kGrid; ++k) order[static_cast<std::size_t>(k)] = k;
  std::partial_sort(order.begin(), order.begin() + kRefine, order.end(), [&](int a, int b) {
    const double va = values[static_cast<std::size_t>(a)];
    const double vb = values[static_cast<std::size_t>(b)];
    return va != vb ? va > vb : a < b;
  });
  double best = values[static_cast<std::size_t>(order[0])];
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int s = 0; s < kRefine; ++s) {
    // Golden-section search on the bracket around a grid maximum.
    double a = order[static_cast<std::size_t>(s)] * step - step;
    double b = a + 2.0 * step;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 80; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = f(d);
      }
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

}  // namespace

ConvergencePair pair_minimal_polynomial(const SuperOperator& t, double mu, int n_max,
                                   const ValidationOptions& opts,
                                   FactorMultiplicity convention) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw DomainError("spectral pair: mu must lie in (0, 1), got " + format_number(mu));
  }
  const SuperOperator delta = transient_part(t);
  for (const Complex& l : eigenvalues(delta.matrix())) {
    if (std::abs(l) >= mu) {
      throw DomainError("spectral pair: eigenvalue of modulus " + format_number(std::abs(l)) +
                        " of T - T^inf is not inside |z| < mu = " + format_number(mu));
    }
  }
  const MinimalPolynomial mp = minimal_polynomial(delta);
  CircleBoundDetails c;
  c.mu = mu;
  c.factors = mp.factors(convention);
  c.factor_count = static_cast<int>(c.factors.size());
  c.prefactor = 4.0 * std::numbers::e * std::sqrt(static_cast<double>(c.factor_count)) /
                std::pow(1.0 - mu, 1.5);
  c.circle_sup = circle_sup(c.factors, mu);
  c.modulus_product = 1.0;
  for (const Complex& l : c.factors) {
    const double r = std::abs(l);
    c.modulus_product *= (1.0 - mu * r) / (mu - r);
  }
  c.K_circle = c.prefactor * c.circle_sup * mu;
  c.K_product = c.prefactor * c.modulus_product * mu;

  ConvergencePair pair;
  pair.kind = PairKind::discrete;
  pair.recipe = Recipe::minimal_polynomial;
  pair.rate = mu;
  pair.K = std::min(c.K_circle, c.K_product);
  pair.circle = c;
  validate_pair(t, pair, n_max, opts);
  return pair;
}

ConvergencePair continuous_from_discrete(const ConvergencePair& discrete, double h) {
  check_discrete(discrete);
  if (!(h > 0.0)) throw DomainError("continuous_from_discrete: step h must be > 0");
  if (discrete.rate <= 0.0) {
    throw DomainError("continuous_from_discrete: mu = 0 gives no finite rate");
  }
  ConvergencePair out = discrete;
  out.kind = PairKind::continuous;
  out.K = discrete.K / discrete.rate;
  out.rate = -std::log(discrete.rate) / h;
  out.validity_checked_to = -1.0;
  out.validity_requested = -1.0;
  out.worst_ratio = 0.0;
  out.circle.reset();
  return out;
}

namespace {

void require_usable(const ConvergencePair& pair) {
  if (!pair.usable) {
    throw PreconditionError("convergence pair (" + std::string(to_string(pair.recipe)) +
                                ") failed validation: " + pair.diagnostic,
                            pair.worst_ratio);
  }
}

BoundReport make_row(const std::string& instance, double x, double exact,
                     const FiniteTimeBound& b, const ConvergencePair& pair, double tol) {
  BoundReport r;
  r.instance = instance;
  r.n_or_t = x;
  r.exact = exact;
  r.bound = b.bound_value;
  r.slack = b.bound_value - exact;
  r.regime = to_string(b.regime);
  r.K = pair.K;
  r.rate = pair.rate;
  r.recipe = to_string(pair.recipe);
  r.holds = r.slack >= -tol;
  return r;
}

}  // namespace

std::vector<BoundReport> discrete_trajectory_check(const SuperOperator& t,
                                                   const SuperOperator& e,
                                                   const DensityMatrix& rho0,
                                                   const DensityMatrix& sigma0, int steps,
                                                   const ConvergencePair& pair,
                                                   const TrajectoryOptions& opts) {
  if (t.dim() != e.dim() || rho0.dim() != t.dim() || sigma0.dim() != t.dim()) {
    throw DimensionError("discrete_trajectory_check: dimensions differ");
  }
  if (steps < 0) throw DomainError("discrete_trajectory_check: steps must be >= 0");
  check_discrete(pair);
  require_usable(pair);
  require_unique_stationary(t, "discrete_trajectory_check");
  const double dT = opts.perturbation_norm
                        ? *opts.perturbation_norm
                        : norm_1to1(e - t, opts.optimizer, NormMode::general).value;
  const double d0 = hermitian_trace_norm(rho0.matrix() - sigma0.matrix());

  std::vector<BoundReport> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix sigma = sigma0.matrix();
  for (int n = 1; n <= steps; ++n) {
    rho = t.apply(rho);
    sigma = e.apply(sigma);
    const double exact = hermitian_trace_norm(rho - sigma);
    rows.push_back(make_row(opts.instance, n, exact, discrete_bound(pair, n, d0, dT), pair,
                            opts.tol));
  }
  return rows;
}

std::vector<BoundReport> continuous_trajectory_check(const GeneratorMap& lt,
                                                     const GeneratorMap& le,
                                                     const DensityMatrix& rho0,
                                                     const DensityMatrix& sigma0, double t_max,
                                                     int steps, const ConvergencePair& pair,
                                                     const TrajectoryOptions& opts) {
  if (lt.dim() != le.dim() || rho0.dim() != lt.dim() || sigma0.dim() != lt.dim()) {
    throw DimensionError("continuous_trajectory_check: dimensions differ");
  }
  if (steps < 1 || !(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw DomainError("continuous_trajectory_check: need steps >= 1 and finite t_max >= 0");
  }
  check_continuous(pair);
  require_usable(pair);
  require_unique_stationary(lt.propagator(1.0), "continuous_trajectory_check");
  const double dL =
      opts.perturbation_norm
          ? *opts.perturbation_norm
          : norm_1to1((le - lt).as_map(), opts.optimizer, NormMode::general).value;
  const double d0 = hermitian_trace_norm(rho0.matrix() - sigma0.matrix());

  const auto count = static_cast<std::size_t>(steps);
  std::vector<BoundReport> rows(count);
  for_each_index(count, opts.optimizer.execution, [&](std::size_t k) {
    const double time = steps == 1 ? 0.0 : t_max * static_cast<double>(k) / (steps - 1);
    const ComplexMatrix rho = lt.propagator(time).apply(rho0.matrix());
    const ComplexMatrix sigma = le.propagator(time).apply(sigma0.matrix());
    const double exact = hermitian_trace_norm(rho - sigma);
    rows[k] = make_row(opts.instance, time, exact, continuous_bound(pair, time, d0, dL), pair,
                       opts.tol);
  });
  return rows;
}

}  // namespace qms
