// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Linear maps on d x d matrices: channels, positive maps, generators.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qms/foundation.hpp"

namespace qms {

enum class Provenance {
  kraus,
  explicit_matrix,
  stochastic_embedding,
  exponential_of_generator,
  composed,
};

const char* to_string(Provenance p);

/// A linear map on M_d(C) stored as its d^2 x d^2 matrix (column stacking).
class SuperOperator {
 public:
  SuperOperator(Eigen::Index dim, ComplexMatrix matrix,
                Provenance provenance = Provenance::explicit_matrix,
                bool flagged_trace_preserving = false);

  Eigen::Index dim() const noexcept { return dim_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Provenance provenance() const noexcept { return provenance_; }

  /// True when the constructor that produced the map checked trace
  /// preservation (Kraus completeness, stochastic rows, ...).
  bool flagged_trace_preserving() const noexcept { return tp_flag_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// this o inner
  SuperOperator compose(const SuperOperator& inner) const;

  /// this^n (n >= 0)
  SuperOperator power(unsigned n) const;

  friend SuperOperator operator+(const SuperOperator& a, const SuperOperator& b);
  friend SuperOperator operator-(const SuperOperator& a, const SuperOperator& b);
  friend SuperOperator operator*(double s, const SuperOperator& a);

 private:
  Eigen::Index dim_;
  ComplexMatrix matrix_;
  Provenance provenance_;
  bool tp_flag_;
};

/// Hermitian, positive semidefinite, unit-trace d x d matrix.
class DensityMatrix {
 public:
  /// Validates with the given tolerance; the anti-Hermitian part is dropped.
  static DensityMatrix from(const ComplexMatrix& m, double tol = 1e-10);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix basis_state(Eigen::Index d, Eigen::Index i);
  static DensityMatrix maximally_mixed(Eigen::Index d);

  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

enum class GeneratorProvenance { lindblad_parts, explicit_matrix };

/// Generator L of a semigroup exp(tL), as a d^2 x d^2 matrix.
class GeneratorMap {
 public:
  GeneratorMap(Eigen::Index dim, ComplexMatrix matrix,
               GeneratorProvenance provenance = GeneratorProvenance::explicit_matrix);

  Eigen::Index dim() const noexcept { return dim_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  GeneratorProvenance provenance() const noexcept { return provenance_; }

  /// ||vec(I)^H L||_2; zero for trace-annihilating generators.
  double trace_annihilation_residual() const;

  /// exp(t L) as a superoperator.
  SuperOperator propagator(double t) const;

  /// The generator viewed as a plain linear map (for norm estimates).
  SuperOperator as_map() const;

  friend GeneratorMap operator-(const GeneratorMap& a, const GeneratorMap& b);

 private:
  Eigen::Index dim_;
  ComplexMatrix matrix_;
  GeneratorProvenance provenance_;
};

struct ResidualCheck {
  bool ok = false;
  double residual = 0.0;
};

struct PositivitySampling {
  int n_samples = 0;
  bool counterexample = false;
  ComplexVector witness;               ///< pure input state (when counterexample)
  double witness_min_eigenvalue = 0.0; ///< min eigenvalue of the image
};

struct ValidationReport {
  ResidualCheck trace_preserving;
  ResidualCheck hermiticity_preserving;
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
  ResidualCheck unital;
  PositivitySampling positivity;
};

inline constexpr double kTolStructure = 1e-10;

/// Sum_k conj(A_k) (x) A_k; flagged trace-preserving when
/// ||Sum_k A_k^H A_k - I||_max <= 1e-10.
SuperOperator from_kraus(const std::vector<ComplexMatrix>& operators);

/// T(X) = Sum_{i,j} S_ij <i|X|i> |j><j|; rows of S must sum to one.
SuperOperator from_stochastic(const RealMatrix& s);

/// Hilbert-Schmidt adjoint (conjugate transpose of the matrix).
SuperOperator dual(const SuperOperator& t);

/// Unnormalized Choi matrix Sum_{ij} |i><j| (x) T(|i><j|).
ComplexMatrix choi(const SuperOperator& t);

double trace_preservation_residual(const ComplexMatrix& superop, Eigen::Index d);

ValidationReport validate(const SuperOperator& t, int n_samples = 1000,
                          std::uint64_t seed = 0);

/// L(X) = -i[H, X] + Sum_k (L_k X L_k^H - {L_k^H L_k, X}/2)
GeneratorMap lindblad_generator(const ComplexMatrix& hamiltonian,
                                const std::vector<ComplexMatrix>& jumps);

/// Standard maps used as fixtures and by the CLI.
namespace maps {

ComplexMatrix pauli(int k);  ///< k = 0 (identity), 1 (X), 2 (Y), 3 (Z)

SuperOperator identity(Eigen::Index d);
/// X -> (1-p) X + p tr[X] I/d
SuperOperator depolarizing(Eigen::Index d, double p);
SuperOperator transpose(Eigen::Index d);
SuperOperator unitary(const ComplexMatrix& u);
SuperOperator amplitude_damping(double gamma);
/// X -> (1-p) X + p tr[X] sigma
SuperOperator replacement_mix(const ComplexMatrix& sigma, double p);
/// L(X) = gamma (tr[X] I/d - X)
GeneratorMap depolarizing_generator(Eigen::Index d, double gamma);

}  // namespace maps

}  // namespace qms
