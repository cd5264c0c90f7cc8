// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/foundation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace qms {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + ": matrix has non-finite entries");
  }
}

namespace {

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  if (m.rows() <= 16) {
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  }
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

// Sort key: modulus desc, then real desc, then imag desc.
bool eigen_order(const Complex& a, const Complex& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::vector<Eigen::Index> sorted_order(const ComplexVector& values) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(values.size()));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index i, Eigen::Index j) {
    return eigen_order(values(i), values(j));
  });
  return idx;
}

}  // namespace

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (m.rows() == 2) {
    // (s1 + s2)^2 = s1^2 + s2^2 + 2 s1 s2 = ||M||_F^2 + 2|det M|
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return std::sqrt(m.squaredNorm() + 2.0 * std::abs(det));
  }
  return singular_values(m).sum();
}

double hermitian_trace_norm(const ComplexMatrix& m) {
  require_square(m, "hermitian_trace_norm");
  if (m.rows() == 2) {
    // Eigenvalues a +- r of [[p, c], [conj c, q]].
    const double a = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double h = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const Complex c = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double r = std::sqrt(h * h + std::norm(c));
    return std::abs(a + r) + std::abs(a - r);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

std::vector<int> cluster_values(const std::vector<Complex>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<int> id(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (id[i] >= 0) continue;
    id[i] = next;
    // Breadth-first single linkage.
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const std::size_t k = frontier.back();
      frontier.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (id[j] < 0 && std::abs(values[j] - values[k]) <= tol) {
          id[j] = next;
          frontier.push_back(j);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  require_square(m, "eigenvalues");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalues: QR iteration did not converge",
                       std::numeric_limits<double>::infinity());
  }
  const ComplexVector& ev = solver.eigenvalues();
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i : sorted_order(ev)) out.push_back(ev(i));
  return out;
}

EigenSystem eig(const ComplexMatrix& m) {
  require_square(m, "eig");
  require_finite(m, "eig");
  const Eigen::Index n = m.rows();
  EigenSystem out;
  if (n == 0) return out;

  Eigen::ComplexEigenSolver<ComplexMatrix> rsolver(m, true);
  Eigen::ComplexEigenSolver<ComplexMatrix> lsolver(m.adjoint(), true);
  if (rsolver.info() != Eigen::Success || lsolver.info() != Eigen::Success) {
    throw NumericError("eig: QR iteration did not converge",
                       std::numeric_limits<double>::infinity());
  }

  const auto order = sorted_order(rsolver.eigenvalues());
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.right.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<std::size_t>(k)] = rsolver.eigenvalues()(order[k]);
    out.right.col(k) = rsolver.eigenvectors().col(order[k]).normalized();
  }

  // Pair each right eigenvalue with the nearest unused conjugated eigenvalue
  // of M^H.
  const ComplexVector lvals = lsolver.eigenvalues().conjugate();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  out.left.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double dist = std::abs(lvals(j) - out.eigenvalues[static_cast<std::size_t>(k)]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    out.left.col(k) = lsolver.eigenvectors().col(best).normalized();
  }

  double radius = 0.0;
  for (const Complex& v : out.eigenvalues) radius = std::max(radius, std::abs(v));
  const double tol = kTolCluster * std::max(radius, std::numeric_limits<double>::min());
  out.cluster = cluster_values(out.eigenvalues, tol);

  // Biorthogonalize cluster by cluster: L_c <- L_c G^{-H}, G = L_c^H R_c.
  const int n_clusters = out.cluster.empty()
                             ? 0
                             : *std::max_element(out.cluster.begin(), out.cluster.end()) + 1;
  for (int c = 0; c < n_clusters; ++c) {
    std::vector<Eigen::Index> members;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (out.cluster[static_cast<std::size_t>(k)] == c) members.push_back(k);
    }
    const auto size = static_cast<Eigen::Index>(members.size());
    ComplexMatrix lc(n, size);
    ComplexMatrix rc(n, size);
    for (Eigen::Index j = 0; j < size; ++j) {
      lc.col(j) = out.left.col(members[static_cast<std::size_t>(j)]);
      rc.col(j) = out.right.col(members[static_cast<std::size_t>(j)]);
    }
    const ComplexMatrix g = lc.adjoint() * rc;
    const RealVector sv = singular_values(g);
    if (sv(sv.size() - 1) <= 1e-8 * std::max(sv(0), 1.0)) {
      out.degenerate = true;
      continue;
    }
    const ComplexMatrix fixed = lc * g.inverse().adjoint();
    for (Eigen::Index j = 0; j < size; ++j) {
      out.left.col(members[static_cast<std::size_t>(j)]) = fixed.col(j);
    }
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex lambda = out.eigenvalues[static_cast<std::size_t>(k)];
    out.residual =
        std::max(out.residual, (m * out.right.col(k) - lambda * out.right.col(k)).norm());
  }
  const ComplexMatrix gram = out.left.adjoint() * out.right;
  out.biorthogonality =
      (gram - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (out.biorthogonality > 1e-8) out.degenerate = true;
  return out;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, double t) {
  require_square(m, "matrix_exp");
  require_finite(m, "matrix_exp");
  if (!std::isfinite(t)) throw ValidationError("matrix_exp: t must be finite");
  const ComplexMatrix scaled = t * m;
  const ComplexMatrix out = scaled.exp();
  if (!out.allFinite()) {
    throw NumericError("matrix_exp: overflow", scaled.cwiseAbs().colwise().sum().maxCoeff());
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& x) {
  require_square(x, "vec");
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index d) {
  if (d < 0 || v.size() != d * d) {
    throw DimensionError("unvec: vector of length " + std::to_string(v.size()) +
                         " cannot be reshaped to " + std::to_string(d) + "x" +
                         std::to_string(d));
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  return 0.5 * (x + x.adjoint());
}

double min_hermitian_eigenvalue(const ComplexMatrix& x) {
  require_square(x, "min_hermitian_eigenvalue");
  if (x.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(x),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

Eigen::Index numerical_rank(const ComplexMatrix& m, double threshold) {
  const RealVector sv = singular_values(m);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace qms
