// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random channels, generators and perturbations, and the ensemble
// sweep that runs the stability and finite-time checks on each instance.

#pragma once

#include <cstdint>
#include <vector>

#include "qms/channel.hpp"
#include "qms/contraction.hpp"
#include "qms/report.hpp"

namespace qms {

/// Kraus operators sliced from a (d r) x d isometry: Gaussian matrix, QR,
/// R diagonal made positive.
SuperOperator random_channel(Eigen::Index d, Eigen::Index kraus_rank, std::uint64_t seed);

/// -i[H, .] + dissipator with Hermitized Gaussian H and Gaussian jumps, all
/// entries of variance 1/d.
GeneratorMap random_generator(Eigen::Index d, Eigen::Index jump_count, std::uint64_t seed);

/// (1 - eps) T + eps R with R = random_channel(d, d^2, seed).
SuperOperator perturb_channel(const SuperOperator& t, double eps, std::uint64_t seed);

/// (1 - eps) L + eps R with R = random_generator(d, d^2 - 1, seed).
GeneratorMap perturb_generator(const GeneratorMap& l, double eps, std::uint64_t seed);

/// (T + G T^* G^{-1})/2 with G(X) = s^{1/2} X s^{1/2} and s the stationary
/// state of T = random_channel(d, d^2, seed). Satisfies detailed balance with
/// respect to s.
SuperOperator random_detailed_balance_channel(Eigen::Index d, std::uint64_t seed);

enum class EnsembleMode { discrete, continuous };
const char* to_string(EnsembleMode m);

struct EnsembleConfig {
  Eigen::Index dim = 2;
  int count = 1;
  std::uint64_t master_seed = 0;
  Eigen::Index kraus_rank = 0;  ///< 0 means d^2
  double perturbation_eps = 1e-3;
  EnsembleMode mode = EnsembleMode::discrete;
  int steps = 50;
  double t_max = 20.0;
  double tol = kTolOpt;
  OptimizerOptions optimizer;
  Execution execution = Execution::parallel;
};

/// Seed of instance i: master_seed * 0x9E3779B97F4A7C15 + i.
std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t i);

/// Rows of every instance in index order. Per-instance failures become
/// error rows.
std::vector<BoundReport> sweep(const EnsembleConfig& config);

}  // namespace qms
