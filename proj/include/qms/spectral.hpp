// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Fixed-point structure of a map: the projector T^inf onto its fixed
// points, the fundamental map Z = (id - (T - T^inf))^{-1}, spectral scalars
// and the minimal polynomial of T - T^inf.

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qms/channel.hpp"

namespace qms {

/// Membership tolerance for the eigenvalue-1 group.
inline constexpr double kTolFix = 1e-9;

struct FixedPointProjection {
  SuperOperator projector;
  Eigen::Index fixed_dimension = 0;
  double idempotence_residual = 0.0;   ///< ||P P - P||_2
  double commutation_residual = 0.0;   ///< max(||T P - P||_2, ||P T - P||_2)
  /// Cesaro cross-check over n = 2^14 powers. The plain average carries an
  /// O(1/n) bias; the check compares it against the exact finite-n expression
  /// (1/n) D (I - D^n)(I - D)^{-1} with D = T - P.
  bool cesaro_checked = false;
  double cesaro_residual = 0.0;
  double cesaro_raw_deviation = 0.0;  ///< ||A_n - P||_2 without bias correction
  std::string cesaro_note;
};

/// T^inf with residual diagnostics. Throws SpectralResolutionError when the
/// eigenvalue-1 group cannot be separated from the rest of the spectrum.
FixedPointProjection resolve_fixed_points(const SuperOperator& t);

SuperOperator fixed_point_projector(const SuperOperator& t);

struct StationaryStates {
  std::vector<DensityMatrix> basis;
  bool unique = false;
};

StationaryStates stationary_states(const SuperOperator& t);

/// D = T - T^inf.
SuperOperator transient_part(const SuperOperator& t);

/// Z(T) = (id - (T - T^inf))^{-1}.
SuperOperator fundamental_map(const SuperOperator& t);
SuperOperator fundamental_map(const SuperOperator& t, const SuperOperator& projector);

struct SpectralData {
  std::vector<Complex> eigenvalues;     ///< full spectrum, sorted
  std::vector<Complex> non_unit;        ///< spectrum minus the eigenvalue-1 group
  Eigen::Index one_multiplicity = 0;
  double min_dist_to_one = std::numeric_limits<double>::infinity();
  double spectral_gap = std::numeric_limits<double>::infinity();
  double subdominant_modulus = 0.0;
  Eigen::Index peripheral_count = 0;
  bool degenerate = false;  ///< no non-unit eigenvalue
};

SpectralData spectral_quantities(const SuperOperator& t);

/// How often a root of the minimal polynomial enters the circle product of
/// the spectral convergence bound.
enum class FactorMultiplicity { per_block_size, single };

struct MinimalPolynomial {
  std::vector<Complex> distinct_roots;
  std::vector<int> block_sizes;
  std::vector<int> algebraic_multiplicities;
  int degree = 0;
  int linear_factor_count = 0;
  double annihilation_residual = 0.0;

  /// Roots repeated according to `convention`.
  std::vector<Complex> factors(FactorMultiplicity convention) const;
};

/// Spectral norm at or below which a transient part is treated as zero.
inline constexpr double kZeroTransient = 1e-12;

/// m(z) = z when ||delta||_2 <= kZeroTransient.
MinimalPolynomial minimal_polynomial(const ComplexMatrix& delta);
MinimalPolynomial minimal_polynomial(const SuperOperator& delta);

}  // namespace qms
