// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Trace-norm contraction coefficient tau(L) and induced 1->1 norms.
//
// tau(L) = 1/2 sup_{phi _|_ psi} || L(|phi><phi|) - L(|psi><psi|) ||_1
//
// Estimates from local search are lower bounds. For d = 2 the qubit grid
// covers the Bloch sphere and reports a Lipschitz error term.

#pragma once

#include <cstdint>
#include <vector>

#include "qms/channel.hpp"
#include "qms/parallel.hpp"

namespace qms {

enum class EstimateMethod { qubit_grid, multistart_manifold, analytic };

const char* to_string(EstimateMethod m);

/// What the witness vectors of a ContractionEstimate mean.
enum class WitnessKind {
  orthonormal_pair,    ///< tau objective at (first, second)
  vector_pair,         ///< ||L(first second^H)||_1, general 1->1 norm
  pure_state,          ///< ||L(first first^H)||_1, Hermitian-restricted norm
  traceless_hermitian, ///< ||L(matrix)||_1 / ||matrix||_1
};

struct ContractionEstimate {
  double value = 0.0;
  EstimateMethod method = EstimateMethod::multistart_manifold;
  int restarts = 0;
  WitnessKind witness_kind = WitnessKind::orthonormal_pair;
  ComplexVector witness_first;
  ComplexVector witness_second;
  ComplexMatrix witness_matrix;
  /// max - min over the restart optima that converged.
  double convergence_spread = 0.0;
  int converged = 0;
  /// Grid estimates only: the true value is at most value + error_bound.
  double error_bound = 0.0;
};

struct OptimizerOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  double fd_step = 1e-5;
  double rel_stop = 1e-10;
  int max_iterations = 2000;
  int grid = 20000;
  Execution execution = Execution::parallel;
};

/// Default optimizer tolerance used when comparing estimates.
inline constexpr double kTolOpt = 1e-6;

enum class TauPath {
  orthogonal_pure_states,  ///< requires a Hermiticity-preserving map
  traceless_hermitian,     ///< ratio over traceless Hermitian inputs, any map
};

/// Contraction coefficient. d = 2 with the pure-state path uses the qubit
/// grid; otherwise a multistart ascent. Throws DomainError for
/// non-Hermiticity-preserving maps on the pure-state path.
ContractionEstimate tau(const SuperOperator& l, const OptimizerOptions& opts = {},
                        TauPath path = TauPath::orthogonal_pure_states);

/// Fibonacci-sphere grid over Bloch vectors followed by local refinement.
ContractionEstimate tau_exact_qubit(const SuperOperator& l, int grid = 20000,
                                    Execution execution = Execution::parallel);

/// Closed form for qubit maps sending the Pauli matrices to traceless
/// Hermitian matrices (trace-preserving or trace-annihilating, Hermiticity
/// preserving): the largest singular value of the 3x3 Bloch block.
ContractionEstimate tau_bloch_qubit(const SuperOperator& l);

enum class NormMode { general, hermitian_only };

const char* to_string(NormMode m);

/// Induced trace norm sup ||L(X)||_1/||X||_1 over all X (general) or over
/// Hermitian X (hermitian_only). Lower-bound estimate by multistart ascent.
ContractionEstimate norm_1to1(const SuperOperator& l, const OptimizerOptions& opts = {},
                              NormMode mode = NormMode::general);

/// Cheap certified upper bound sqrt(d) * ||M_L||_2 on ||L||_1->1.
double norm_1to1_upper_bound(const SuperOperator& l);

/// Recomputes the objective at the witness of `e`.
double evaluate_witness(const SuperOperator& l, const ContractionEstimate& e);

struct PowerRow {
  int n = 0;
  double tau_of_power = 0.0;  ///< tau(L^n)
  double power_of_tau = 0.0;  ///< tau(L)^n
  bool holds = false;         ///< tau(L^n) <= tau(L)^n + kTolOpt
};

std::vector<PowerRow> tau_of_powers_check(const SuperOperator& l, int n_max,
                                          const OptimizerOptions& opts = {});

/// Choi-Hermiticity residual used for the Hermiticity-preservation check.
double hermiticity_residual(const SuperOperator& l);

}  // namespace qms
