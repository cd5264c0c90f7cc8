// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/ensembles.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qms/finite_time.hpp"
#include "qms/random.hpp"
#include "qms/spectral.hpp"
#include "qms/stability.hpp"

namespace qms {

namespace {

ComplexMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = scale * rng.complex_gaussian();
  }
  return g;
}

}  // namespace

SuperOperator random_channel(Eigen::Index d, Eigen::Index kraus_rank, std::uint64_t seed) {
  if (d < 1) throw DimensionError("random_channel: d must be >= 1");
  if (kraus_rank < 1) throw ValidationError("random_channel: kraus_rank must be >= 1");
  Rng rng(seed);
  const ComplexMatrix g = gaussian_matrix(rng, d * kraus_rank, d, 1.0);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d * kraus_rank, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_rank));
  for (Eigen::Index k = 0; k < kraus_rank; ++k) kraus.emplace_back(q.middleRows(k * d, d));
  return from_kraus(kraus);
}

GeneratorMap random_generator(Eigen::Index d, Eigen::Index jump_count, std::uint64_t seed) {
  if (d < 1) throw DimensionError("random_generator: d must be >= 1");
  if (jump_count < 0) throw ValidationError("random_generator: jump_count must be >= 0");
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(d));
  const ComplexMatrix h = hermitian_part(gaussian_matrix(rng, d, d, scale));
  std::vector<ComplexMatrix> jumps;
  for (Eigen::Index k = 0; k < jump_count; ++k) jumps.push_back(gaussian_matrix(rng, d, d, scale));
  return lindblad_generator(h, jumps);
}

SuperOperator perturb_channel(const SuperOperator& t, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw ValidationError("perturb_channel: eps must lie in [0, 1], got " + format_number(eps));
  }
  if (eps == 0.0) return t;
  const SuperOperator r = random_channel(t.dim(), t.dim() * t.dim(), seed);
  if (eps == 1.0) return r;
  return SuperOperator(t.dim(), (1.0 - eps) * t.matrix() + eps * r.matrix(),
                       Provenance::explicit_matrix, t.flagged_trace_preserving());
}

GeneratorMap perturb_generator(const GeneratorMap& l, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw ValidationError("perturb_generator: eps must lie in [0, 1], got " +
                          format_number(eps));
  }
  if (eps == 0.0) return l;
  const GeneratorMap r = random_generator(l.dim(), l.dim() * l.dim() - 1, seed);
  return GeneratorMap(l.dim(), (1.0 - eps) * l.matrix() + eps * r.matrix());
}

SuperOperator random_detailed_balance_channel(Eigen::Index d, std::uint64_t seed) {
  const SuperOperator t = random_channel(d, d * d, seed);
  const StationaryStates st = stationary_states(t);
  if (!st.unique) {
    throw NumericError("random_detailed_balance_channel: sampled channel has no unique "
                       "stationary state",
                       0.0);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(st.basis.front().matrix());
  const RealVector ev = es.eigenvalues();
  const ComplexMatrix& u = es.eigenvectors();
  const ComplexMatrix half = u * ev.array().sqrt().matrix().asDiagonal() * u.adjoint();
  const ComplexMatrix inv_half = u * ev.array().rsqrt().matrix().asDiagonal() * u.adjoint();
  // X -> A X B is B^T (x) A.
  const ComplexMatrix g = kron(half.transpose(), half);
  const ComplexMatrix g_inv = kron(inv_half.transpose(), inv_half);
  const ComplexMatrix m = 0.5 * (t.matrix() + g * t.matrix().adjoint() * g_inv);
  return SuperOperator(d, m, Provenance::explicit_matrix, false);
}

const char* to_string(EnsembleMode m) {
  return m == EnsembleMode::discrete ? "discrete" : "continuous";
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t i) {
  return derive_seed(master_seed, i);
}

namespace {

BoundReport error_row(const std::string& instance, const std::string& what) {
  BoundReport r;
  r.instance = instance;
  r.error = what;
  return r;
}

template <class F>
void guarded(std::vector<BoundReport>& rows, const std::string& instance, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    rows.push_back(error_row(instance, e.what()));
  }
}

void append(std::vector<BoundReport>& rows, const std::vector<BoundReport>& more) {
  rows.insert(rows.end(), more.begin(), more.end());
}

std::vector<BoundReport> run_discrete(const EnsembleConfig& c, std::uint64_t seed,
                                      const std::string& label, const OptimizerOptions& opt) {
  std::vector<BoundReport> rows;
  const Eigen::Index rank = c.kraus_rank > 0 ? c.kraus_rank : c.dim * c.dim;
  const SuperOperator t = random_channel(c.dim, rank, seed);
  const SuperOperator e = perturb_channel(t, c.perturbation_eps, derive_seed(seed, 1));

  guarded(rows, label, [&] {
    const StationaryStates st = stationary_states(e);
    if (!st.unique) throw HypothesisError("perturbed channel has no unique stationary state");
    append(rows, bound_rows(fixed_point_perturbation(t, e, st.basis.front(), opt), label, c.tol));
  });
  guarded(rows, label, [&] {
    ValidationOptions v;
    v.optimizer = opt;
    const ConvergencePair pair = pair_chi2(t, 50, v);
    TrajectoryOptions to;
    to.optimizer = opt;
    to.tol = c.tol;
    to.instance = label;
    const DensityMatrix start = DensityMatrix::basis_state(c.dim, 0);
    append(rows, discrete_trajectory_check(t, e, start, start, c.steps, pair, to));
  });
  return rows;
}

std::vector<BoundReport> run_continuous(const EnsembleConfig& c, std::uint64_t seed,
                                        const std::string& label, const OptimizerOptions& opt) {
  std::vector<BoundReport> rows;
  const Eigen::Index jumps = c.kraus_rank > 0 ? c.kraus_rank : c.dim * c.dim - 1;
  const GeneratorMap l = random_generator(c.dim, jumps, seed);
  const GeneratorMap le = perturb_generator(l, c.perturbation_eps, derive_seed(seed, 1));
  guarded(rows, label, [&] {
    ValidationOptions v;
    v.optimizer = opt;
    ConvergencePair pair = continuous_from_discrete(pair_chi2(l.propagator(1.0), 50, v), 1.0);
    validate_pair(l, pair, c.t_max, std::max(c.steps, 2), v);
    TrajectoryOptions to;
    to.optimizer = opt;
    to.tol = c.tol;
    to.instance = label;
    const DensityMatrix start = DensityMatrix::basis_state(c.dim, 0);
    append(rows, continuous_trajectory_check(l, le, start, start, c.t_max, c.steps, pair, to));
  });
  return rows;
}

}  // namespace

std::vector<BoundReport> sweep(const EnsembleConfig& config) {
  if (config.count < 1) throw ValidationError("sweep: count must be >= 1");
  if (config.dim < 1) throw ValidationError("sweep: dim must be >= 1");
  if (!(config.perturbation_eps >= 0.0 && config.perturbation_eps <= 1.0)) {
    throw ValidationError("sweep: eps must lie in [0, 1]");
  }
  if (config.kraus_rank < 0) throw ValidationError("sweep: kraus_rank must be >= 1");
  const auto count = static_cast<std::size_t>(config.count);
  OptimizerOptions inner = config.optimizer;
  if (config.execution == Execution::parallel) inner.execution = Execution::serial;

  std::vector<std::vector<BoundReport>> per_instance(count);
  for_each_index(count, config.execution, [&](std::size_t i) {
    const std::string label = std::to_string(i);
    const std::uint64_t seed = instance_seed(config.master_seed, i);
    try {
      per_instance[i] = config.mode == EnsembleMode::discrete
                            ? run_discrete(config, seed, label, inner)
                            : run_continuous(config, seed, label, inner);
    } catch (const Error& e) {
      per_instance[i] = {error_row(label, e.what())};
    }
  });
  std::vector<BoundReport> rows;
  for (auto& r : per_instance) append(rows, r);
  return rows;
}

}  // namespace qms
