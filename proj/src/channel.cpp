// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qms/random.hpp"

namespace qms {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kraus: return "kraus";
    case Provenance::explicit_matrix: return "explicit";
    case Provenance::stochastic_embedding: return "stochastic_embedding";
    case Provenance::exponential_of_generator: return "exponential_of_generator";
    case Provenance::composed: return "composed";
  }
  return "unknown";
}

namespace {

void require_superop_shape(Eigen::Index dim, const ComplexMatrix& m, const char* what) {
  if (dim < 1 || m.rows() != dim * dim || m.cols() != dim * dim) {
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(dim * dim) +
                         "x" + std::to_string(dim * dim) + " matrix for d=" +
                         std::to_string(dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

ComplexVector vec_identity(Eigen::Index d) {
  return vec(ComplexMatrix::Identity(d, d));
}

}  // namespace

// ---------------------------------------------------------------------------
// SuperOperator

SuperOperator::SuperOperator(Eigen::Index dim, ComplexMatrix matrix, Provenance provenance,
                             bool flagged_trace_preserving)
    : dim_(dim), matrix_(std::move(matrix)), provenance_(provenance),
      tp_flag_(flagged_trace_preserving) {
  require_superop_shape(dim_, matrix_, "SuperOperator");
  require_finite(matrix_, "SuperOperator");
}

ComplexMatrix SuperOperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw DimensionError("SuperOperator::apply: input is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + ", map acts on d=" + std::to_string(dim_));
  }
  return unvec(matrix_ * vec(x), dim_);
}

SuperOperator SuperOperator::compose(const SuperOperator& inner) const {
  if (inner.dim_ != dim_) throw DimensionError("compose: dimension mismatch");
  return SuperOperator(dim_, matrix_ * inner.matrix_, Provenance::composed,
                       tp_flag_ && inner.tp_flag_);
}

SuperOperator SuperOperator::power(unsigned n) const {
  ComplexMatrix result = ComplexMatrix::Identity(matrix_.rows(), matrix_.cols());
  ComplexMatrix base = matrix_;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return SuperOperator(dim_, std::move(result), Provenance::composed, tp_flag_);
}

SuperOperator operator+(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionError("operator+: dimension mismatch");
  return SuperOperator(a.dim_, a.matrix_ + b.matrix_);
}

SuperOperator operator-(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionError("operator-: dimension mismatch");
  return SuperOperator(a.dim_, a.matrix_ - b.matrix_);
}

SuperOperator operator*(double s, const SuperOperator& a) {
  return SuperOperator(a.dim_, s * a.matrix_);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::from(const ComplexMatrix& m, double tol) {
  require_square(m, "DensityMatrix");
  require_finite(m, "DensityMatrix");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    throw ValidationError("DensityMatrix: not Hermitian (residual " + std::to_string(herm) + ")");
  }
  ComplexMatrix h = hermitian_part(m);
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw ValidationError("DensityMatrix: trace is " + std::to_string(trace));
  }
  const double min_eig = min_hermitian_eigenvalue(h);
  if (min_eig < -tol) {
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0) || !psi.allFinite()) throw ValidationError("DensityMatrix::pure: zero vector");
  const ComplexVector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::basis_state(Eigen::Index d, Eigen::Index i) {
  if (i < 0 || i >= d) throw DimensionError("DensityMatrix::basis_state: index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(i, i) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
  if (d < 1) throw DimensionError("DensityMatrix::maximally_mixed: d must be positive");
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

// ---------------------------------------------------------------------------
// GeneratorMap

GeneratorMap::GeneratorMap(Eigen::Index dim, ComplexMatrix matrix,
                           GeneratorProvenance provenance)
    : dim_(dim), matrix_(std::move(matrix)), provenance_(provenance) {
  require_superop_shape(dim_, matrix_, "GeneratorMap");
  require_finite(matrix_, "GeneratorMap");
}

double GeneratorMap::trace_annihilation_residual() const {
  return (vec_identity(dim_).adjoint() * matrix_).norm();
}

SuperOperator GeneratorMap::propagator(double t) const {
  return SuperOperator(dim_, matrix_exp(matrix_, t), Provenance::exponential_of_generator,
                       trace_annihilation_residual() <= kTolStructure);
}

SuperOperator GeneratorMap::as_map() const {
  return SuperOperator(dim_, matrix_);
}

GeneratorMap operator-(const GeneratorMap& a, const GeneratorMap& b) {
  if (a.dim_ != b.dim_) throw DimensionError("GeneratorMap operator-: dimension mismatch");
  return GeneratorMap(a.dim_, a.matrix_ - b.matrix_);
}

// ---------------------------------------------------------------------------
// Constructions

SuperOperator from_kraus(const std::vector<ComplexMatrix>& operators) {
  if (operators.empty()) throw DimensionError("from_kraus: empty Kraus list");
  const Eigen::Index d = operators.front().rows();
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < operators.size(); ++k) {
    const ComplexMatrix& a = operators[k];
    if (a.rows() != d || a.cols() != d) {
      throw DimensionError("from_kraus: operator " + std::to_string(k) + " is " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    require_finite(a, "from_kraus");
    m += kron(a.conjugate(), a);
    completeness += a.adjoint() * a;
  }
  const double tp = (completeness - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  return SuperOperator(d, std::move(m), Provenance::kraus, tp <= kTolStructure);
}

SuperOperator from_stochastic(const RealMatrix& s) {
  if (s.rows() != s.cols() || s.rows() < 1) {
    throw DimensionError("from_stochastic: expected a square matrix");
  }
  if (!s.allFinite()) throw ValidationError("from_stochastic: non-finite entry");
  const Eigen::Index d = s.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (s(i, j) < 0.0) {
        throw ValidationError("from_stochastic: negative entry at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
    }
    const double row = s.row(i).sum();
    if (std::abs(row - 1.0) > kTolStructure) {
      throw ValidationError("from_stochastic: row " + std::to_string(i) + " sums to " +
                            std::to_string(row));
    }
  }
  // |i><i| sits at index i + i d; T(|i><i|) = Sum_j S_ij |j><j|.
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(j + j * d, i + i * d) = s(i, j);
  }
  return SuperOperator(d, std::move(m), Provenance::stochastic_embedding, true);
}

SuperOperator dual(const SuperOperator& t) {
  return SuperOperator(t.dim(), t.matrix().adjoint(), t.provenance());
}

ComplexMatrix choi(const SuperOperator& t) {
  const Eigen::Index d = t.dim();
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      // T(|a><b|) is column a + b d of the superoperator.
      j.block(a * d, b * d, d, d) = unvec(t.matrix().col(a + b * d), d);
    }
  }
  return j;
}

double trace_preservation_residual(const ComplexMatrix& superop, Eigen::Index d) {
  const ComplexVector id = vec_identity(d);
  return (id.adjoint() * superop - id.adjoint()).norm();
}

ValidationReport validate(const SuperOperator& t, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw ValidationError("validate: n_samples must be >= 1");
  const Eigen::Index d = t.dim();
  ValidationReport report;

  report.trace_preserving.residual = trace_preservation_residual(t.matrix(), d);
  report.trace_preserving.ok = report.trace_preserving.residual <= kTolStructure;

  const ComplexMatrix j = choi(t);
  report.hermiticity_preserving.residual = (j - j.adjoint()).cwiseAbs().maxCoeff();
  report.hermiticity_preserving.ok = report.hermiticity_preserving.residual <= kTolStructure;

  report.min_choi_eigenvalue = min_hermitian_eigenvalue(j);
  report.completely_positive =
      report.hermiticity_preserving.ok && report.min_choi_eigenvalue >= -kTolStructure;

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  report.unital.residual = (t.apply(id) - id).cwiseAbs().maxCoeff();
  report.unital.ok = report.unital.residual <= kTolStructure;

  Rng rng(seed);
  report.positivity.n_samples = n_samples;
  for (int s = 0; s < n_samples; ++s) {
    ComplexVector psi(d);
    for (Eigen::Index i = 0; i < d; ++i) psi(i) = rng.complex_gaussian();
    psi.normalize();
    const ComplexMatrix out = t.apply(psi * psi.adjoint());
    const double lo = min_hermitian_eigenvalue(out);
    if (lo < -1e-8) {
      report.positivity.counterexample = true;
      report.positivity.witness = psi;
      report.positivity.witness_min_eigenvalue = lo;
      break;
    }
  }
  return report;
}

GeneratorMap lindblad_generator(const ComplexMatrix& hamiltonian,
                                const std::vector<ComplexMatrix>& jumps) {
  require_square(hamiltonian, "lindblad_generator");
  const Eigen::Index d = hamiltonian.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  // -i(H X - X H)  ->  -i (I (x) H - H^T (x) I)
  ComplexMatrix m = -i_unit * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    const ComplexMatrix& l = jumps[k];
    if (l.rows() != d || l.cols() != d) {
      throw DimensionError("lindblad_generator: jump operator " + std::to_string(k) +
                           " has the wrong shape");
    }
    const ComplexMatrix ldl = l.adjoint() * l;
    m += kron(l.conjugate(), l) - 0.5 * (kron(id, ldl) + kron(ldl.transpose(), id));
  }
  return GeneratorMap(d, std::move(m), GeneratorProvenance::lindblad_parts);
}

namespace maps {

ComplexMatrix pauli(int k) {
  ComplexMatrix p(2, 2);
  switch (k) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: throw DimensionError("pauli: index must be 0..3");
  }
  return p;
}

SuperOperator identity(Eigen::Index d) {
  return SuperOperator(d, ComplexMatrix::Identity(d * d, d * d), Provenance::explicit_matrix,
                       true);
}

SuperOperator depolarizing(Eigen::Index d, double p) {
  const ComplexVector id = vec_identity(d);
  ComplexMatrix m = (1.0 - p) * ComplexMatrix::Identity(d * d, d * d) +
                    (p / static_cast<double>(d)) * id * id.adjoint();
  return SuperOperator(d, std::move(m), Provenance::explicit_matrix, true);
}

SuperOperator transpose(Eigen::Index d) {
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(c + r * d, r + c * d) = 1.0;
  }
  return SuperOperator(d, std::move(m), Provenance::explicit_matrix, true);
}

SuperOperator unitary(const ComplexMatrix& u) {
  return from_kraus({u});
}

SuperOperator amplitude_damping(double gamma) {
  ComplexMatrix a0(2, 2), a1(2, 2);
  a0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  a1 << 0, std::sqrt(gamma), 0, 0;
  return from_kraus({a0, a1});
}

SuperOperator replacement_mix(const ComplexMatrix& sigma, double p) {
  require_square(sigma, "replacement_mix");
  const Eigen::Index d = sigma.rows();
  const ComplexVector id = vec_identity(d);
  ComplexMatrix m = (1.0 - p) * ComplexMatrix::Identity(d * d, d * d) +
                    p * vec(sigma) * id.adjoint();
  return SuperOperator(d, std::move(m), Provenance::explicit_matrix,
                       std::abs(sigma.trace() - 1.0) <= kTolStructure);
}

GeneratorMap depolarizing_generator(Eigen::Index d, double gamma) {
  const ComplexVector id = vec_identity(d);
  ComplexMatrix m = gamma * (id * id.adjoint() / static_cast<double>(d) -
                             ComplexMatrix::Identity(d * d, d * d));
  return GeneratorMap(d, std::move(m), GeneratorProvenance::explicit_matrix);
}

}  // namespace maps

}  // namespace qms
