// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Finite-time bounds on ||rho_n - sigma_n||_1 for two chains (or two
// semigroups) started anywhere, given a convergence pair
//
//     ||T^n - T^inf||_1->1 <= K mu^n      or      ||e^{tL} - P||_1->1 <= K e^{-nu t},
//
// and recipes deriving such pairs from the map.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qms/contraction.hpp"
#include "qms/report.hpp"
#include "qms/spectral.hpp"

namespace qms {

enum class PairKind { discrete, continuous };
enum class Recipe { user_supplied, chi2, detailed_balance, minimal_polynomial };

const char* to_string(PairKind k);
const char* to_string(Recipe r);

/// Data recorded by the minimal-polynomial recipe.
struct CircleBoundDetails {
  double mu = 0.0;
  int factor_count = 0;          ///< |m|
  std::vector<Complex> factors;  ///< roots entering the product
  double prefactor = 0.0;        ///< 4 e sqrt|m| / (1 - mu)^{3/2}
  double circle_sup = 0.0;       ///< sup_{|z| = mu} |prod (1 - conj(l) z)/(z - l)|
  double modulus_product = 0.0;  ///< prod (1 - mu |l|)/(mu - |l|)
  double K_circle = 0.0;
  double K_product = 0.0;
};

struct ConvergencePair {
  double K = 0.0;
  double rate = 0.0;  ///< mu (discrete) or nu (continuous)
  PairKind kind = PairKind::discrete;
  Recipe recipe = Recipe::user_supplied;
  /// Largest n (or t) up to which the inequality was verified empirically;
  /// negative when nothing was checked.
  double validity_checked_to = -1.0;
  double validity_requested = -1.0;
  /// False once validation failed; such a pair is refused by trajectory
  /// checks.
  bool usable = true;
  double worst_ratio = 0.0;  ///< max over checked points of estimate / (K mu^n + tol)
  std::string diagnostic;
  std::optional<CircleBoundDetails> circle;
};

ConvergencePair user_pair(double K, double rate, PairKind kind);

enum class Regime { pre_threshold, post_threshold };
const char* to_string(Regime r);

struct FiniteTimeBound {
  double threshold = 0.0;  ///< n-hat or t-hat
  Regime regime = Regime::pre_threshold;
  double bound_value = 0.0;
  double initial_term = 0.0;
  double perturbation_term = 0.0;
};

/// max(0, ceil(log(1/K)/log mu)); 0 when K <= 1.
int discrete_threshold(double K, double mu);

/// max(0, log(K)/nu).
double continuous_threshold(double K, double nu);

/// d0 = ||rho0 - sigma0||_1, dT = ||E - T||_1->1.
FiniteTimeBound discrete_bound(const ConvergencePair& pair, int n, double d0, double dT);

/// (n-hat + 1/(1 - mu)) dT.
double asymptotic_discrete(const ConvergencePair& pair, double dT);

/// lim_{n -> inf} of discrete_bound: (n-hat + K mu^n-hat/(1 - mu)) dT.
double discrete_limit(const ConvergencePair& pair, double dT);

/// For K < 1 the perturbation term is K (1 - e^{-nu t})/nu dL.
FiniteTimeBound continuous_bound(const ConvergencePair& pair, double t, double d0, double dL);

/// (log K + 1)/nu dL, or K/nu dL when K < 1.
double asymptotic_continuous(const ConvergencePair& pair, double dL);

struct ValidationOptions {
  OptimizerOptions optimizer;
  /// Norm in which ||T^n - T^inf|| is estimated.
  NormMode mode = NormMode::hermitian_only;
  double tol = kTolOpt;
};

/// Checks ||T^n - T^inf||_1->1 <= K mu^n + tol for n = 0..n_max, first with
/// the certified sqrt(d)||.||_2 bound and otherwise with the estimator.
void validate_pair(const SuperOperator& t, ConvergencePair& pair, int n_max,
                   const ValidationOptions& opts = {});

/// Same for a continuous pair at `samples` uniform times in [0, t_max].
void validate_pair(const GeneratorMap& l, ConvergencePair& pair, double t_max, int samples,
                   const ValidationOptions& opts = {});

/// Second singular value of Omega(X) = s^{-1/4} T(s^{1/4} X s^{1/4}) s^{-1/4}
/// and K = (1/lambda_min - 1)^{1/2}, s the unique stationary state.
ConvergencePair pair_chi2(const SuperOperator& t, int n_max = 50,
                          const ValidationOptions& opts = {});

/// Requires Omega Hermitian to 1e-8. mu = subdominant modulus,
/// K = sqrt(2d) lambda_min^{-1/2}.
ConvergencePair pair_detailed_balance(const SuperOperator& t, int n_max = 50,
                                      const ValidationOptions& opts = {});

/// K from the minimal polynomial of T - T^inf on the circle |z| = mu.
ConvergencePair pair_minimal_polynomial(const SuperOperator& t, double mu, int n_max = 100,
                                   const ValidationOptions& opts = {},
                                   FactorMultiplicity convention =
                                       FactorMultiplicity::per_block_size);

/// The superoperator Omega of the chi2 recipe; also its stationary state's
/// smallest eigenvalue.
struct WeightedMap {
  ComplexMatrix omega;
  double lambda_min = 0.0;
  DensityMatrix sigma;
};
WeightedMap weighted_map(const SuperOperator& t);

/// A discrete pair (K, mu) of exp(h L) gives (K/mu, -log(mu)/h) for L.
ConvergencePair continuous_from_discrete(const ConvergencePair& discrete, double h);

/// Throws HypothesisError unless t has a unique stationary state.
void require_unique_stationary(const SuperOperator& t, const char* what);

struct TrajectoryOptions {
  OptimizerOptions optimizer;
  double tol = kTolOpt;
  std::string instance;
  /// Overrides the estimate of ||E - T||_1->1 (or the generator difference).
  std::optional<double> perturbation_norm;
};

/// Rows for n = 1..steps.
std::vector<BoundReport> discrete_trajectory_check(const SuperOperator& t,
                                                   const SuperOperator& e,
                                                   const DensityMatrix& rho0,
                                                   const DensityMatrix& sigma0, int steps,
                                                   const ConvergencePair& pair,
                                                   const TrajectoryOptions& opts = {});

/// Rows at `steps` uniform times in [0, t_max].
std::vector<BoundReport> continuous_trajectory_check(const GeneratorMap& lt,
                                                     const GeneratorMap& le,
                                                     const DensityMatrix& rho0,
                                                     const DensityMatrix& sigma0, double t_max,
                                                     int steps, const ConvergencePair& pair,
                                                     const TrajectoryOptions& opts = {});

}  // namespace qms
