// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Condition numbers for the stationary states of a channel and the
// perturbation bound ||rho1 - rho2||_1 <= kappa ||T1 - T2||_1->1.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qms/contraction.hpp"
#include "qms/report.hpp"
#include "qms/spectral.hpp"

namespace qms {

/// 2 (5 pi / 3 + 2 sqrt 2) d^3
double spectral_upper_constant(Eigen::Index d);

struct ConditionReport {
  ContractionEstimate kappa_tau_z;  ///< tau(Z(T))
  ContractionEstimate tau_t;        ///< tau(T)
  /// (1 - tau(T))^{-1}, +inf when tau(T) >= 1 - 1e-9. Absent when the
  /// stationary state is not unique.
  std::optional<double> kappa_contraction;
  std::string kappa_contraction_reason;
  double spectral_lower = 0.0;  ///< 1 / min|1 - lambda|
  double spectral_upper = 0.0;  ///< spectral_upper_constant(d) / min|1 - lambda|
  double min_dist_to_one = kInf;
  /// False when T has no eigenvalue away from 1; both spectral fields are
  /// then 0 and +inf.
  bool sandwich_applicable = true;
  /// Eigenvalues of modulus one other than 1 are present.
  bool peripheral = false;
  Eigen::Index dim = 0;
  SpectralData spectral;
};

ConditionReport condition_numbers(const SuperOperator& t, const OptimizerOptions& opts = {});

/// One (kappa variant, norm mode) combination of the perturbation bound.
struct BoundEntry {
  std::string kappa_variant;  ///< tau_z, contraction, spectral_upper
  NormMode norm_mode = NormMode::general;
  double kappa = 0.0;
  double norm = 0.0;  ///< estimate of ||T1 - T2||_1->1 in norm_mode
  double bound = 0.0;
  double slack = 0.0;
};

struct PerturbationOutcome {
  DensityMatrix rho1;
  DensityMatrix rho2;
  double actual_distance = 0.0;
  double bound_value = 0.0;  ///< tau(Z(T1)) times the general-norm estimate
  double identity_residual = 0.0;
  double stationarity_residual = 0.0;  ///< ||T2(rho2) - rho2||_1
  std::vector<BoundEntry> entries;
  ConditionReport condition;
};

/// rho2 must be stationary for t2 (residual <= 1e-9), otherwise
/// PreconditionError. rho1 = T1^inf(rho2).
PerturbationOutcome fixed_point_perturbation(const SuperOperator& t1, const SuperOperator& t2,
                                             const DensityMatrix& rho2,
                                             const OptimizerOptions& opts = {});

/// Rows for every bound entry; slack tolerance `tol`.
std::vector<BoundReport> bound_rows(const PerturbationOutcome& outcome,
                                    const std::string& instance, double tol);

}  // namespace qms
