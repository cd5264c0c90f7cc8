// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex linear algebra shared by every module.
//
// Vectorization convention (used by every superoperator in the library):
// vec(X) stacks the columns of X top to bottom, so that
//
//     vec(B X A) = (A^T (x) B) vec(X).
//
// Matrix entry (r, c) of a d x d matrix lands at index r + c*d.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qms/errors.hpp"

namespace qms {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Relative clustering tolerance for "distinct eigenvalue" decisions.
inline constexpr double kTolCluster = 1e-7;

/// Throws DimensionError unless M is square.
void require_square(const ComplexMatrix& m, const char* what);

/// Throws ValidationError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

/// Sum of the singular values of a square matrix.
double trace_norm(const ComplexMatrix& m);

/// Trace norm of the Hermitian part of m (sum of absolute eigenvalues).
double hermitian_trace_norm(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Eigen-decomposition with biorthogonalized left/right vectors.
///
/// Eigenvalues are sorted by nonincreasing modulus (ties broken by real and
/// then imaginary part, descending). Column i of `left` satisfies
/// left.col(i)^H * M = eigenvalues[i] * left.col(i)^H and, whenever the
/// decomposition is not flagged `degenerate`, left^H * right = I.
struct EigenSystem {
  std::vector<Complex> eigenvalues;
  ComplexMatrix right;
  ComplexMatrix left;
  double residual = 0.0;           ///< max_i ||M r_i - lambda_i r_i||_2, r_i unit
  double biorthogonality = 0.0;    ///< max |(L^H R - I)_ij|
  bool degenerate = false;         ///< true if a cluster could not be biorthogonalized
  std::vector<int> cluster;        ///< cluster id per eigenvalue (kTolCluster)
};

EigenSystem eig(const ComplexMatrix& m);

/// Eigenvalues only, sorted as in eig().
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

/// exp(t*M) by scaling and squaring with a Pade approximant.
ComplexMatrix matrix_exp(const ComplexMatrix& m, double t);

ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index d);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian part (X + X^H)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& x);

/// Smallest eigenvalue of the Hermitian part of x.
double min_hermitian_eigenvalue(const ComplexMatrix& x);

/// Number of singular values strictly above `threshold`.
Eigen::Index numerical_rank(const ComplexMatrix& m, double threshold);

/// Groups values whose distance is at most tol (single linkage). Returns a
/// cluster id per entry; ids are assigned in order of first appearance.
std::vector<int> cluster_values(const std::vector<Complex>& values, double tol);

}  // namespace qms
