// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace qms {

namespace {

constexpr int kCesaroDoublings = 14;

Eigen::Index count_unit_group(const std::vector<Complex>& ev) {
  Eigen::Index k = 0;
  for (const Complex& v : ev) {
    const double dist = std::abs(v - 1.0);
    if (dist <= kTolFix) {
      ++k;
    } else if (dist <= kTolCluster) {
      throw SpectralResolutionError(
          "eigenvalue " + std::to_string(v.real()) + "+" + std::to_string(v.imag()) +
              "i is within the clustering tolerance of 1 but outside the fixed-point group",
          dist);
    }
  }
  return k;
}

}  // namespace

FixedPointProjection resolve_fixed_points(const SuperOperator& t) {
  const ComplexMatrix& m = t.matrix();
  const Eigen::Index n = m.rows();
  const std::vector<Complex> ev = eigenvalues(m);
  const Eigen::Index k = count_unit_group(ev);
  if (k == 0) {
    throw SpectralResolutionError("map has no eigenvalue within tolerance of 1", 1.0);
  }

  // Right/left fixed vectors span the null spaces of (M - I) and (M - I)^H.
  const ComplexMatrix a = m - ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  if (sv(n - k) > 1e-6 * scale) {
    throw SpectralResolutionError(
        "eigenvalue 1 is not semisimple: fixed space smaller than its multiplicity", sv(n - k));
  }
  if (k < n && sv(n - k - 1) <= 1e-6 * scale) {
    throw SpectralResolutionError("fixed space larger than the eigenvalue-1 group",
                                  sv(n - k - 1));
  }
  const ComplexMatrix right = svd.matrixV().rightCols(k);
  const ComplexMatrix left = svd.matrixU().rightCols(k);
  const ComplexMatrix gram = left.adjoint() * right;
  const RealVector gsv = Eigen::JacobiSVD<ComplexMatrix>(gram).singularValues();
  if (gsv(k - 1) <= 1e-8) {
    throw SpectralResolutionError("left and right fixed spaces are nearly orthogonal",
                                  gsv(k - 1));
  }
  ComplexMatrix p = right * gram.inverse() * left.adjoint();

  FixedPointProjection out{SuperOperator(t.dim(), p, Provenance::explicit_matrix, true), k, 0.0, 0.0, false, 0.0, 0.0, {}};
  out.idempotence_residual = spectral_norm(p * p - p);
  out.commutation_residual = std::max(spectral_norm(m * p - p), spectral_norm(p * m - p));

  bool peripheral = false;
  for (const Complex& v : ev) {
    if (std::abs(v - 1.0) > kTolFix && std::abs(v) >= 1.0 - kTolCluster) peripheral = true;
  }
  if (peripheral) {
    out.cesaro_note = "skipped: peripheral eigenvalues other than 1";
    return out;
  }

  // A_{m+1} = (A_m + T^{2^m} A_m)/2 averages T^1..T^{2^{m+1}}.
  ComplexMatrix avg = m;
  ComplexMatrix pow = m;
  const ComplexMatrix delta = m - p;
  ComplexMatrix delta_pow = delta;
  for (int s = 0; s < kCesaroDoublings; ++s) {
    avg = 0.5 * (avg + pow * avg);
    pow = pow * pow;
    delta_pow = delta_pow * delta_pow;
  }
  const double n_avg = std::ldexp(1.0, kCesaroDoublings);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix bias =
      delta * (id - delta_pow) * (id - delta).partialPivLu().inverse() / n_avg;
  out.cesaro_checked = true;
  out.cesaro_raw_deviation = spectral_norm(avg - p);
  out.cesaro_residual = spectral_norm(avg - p - bias);
  out.cesaro_note = out.cesaro_residual <= 1e-6 ? "agrees" : "disagrees";
  return out;
}

SuperOperator fixed_point_projector(const SuperOperator& t) {
  return resolve_fixed_points(t).projector;
}

StationaryStates stationary_states(const SuperOperator& t) {
  const FixedPointProjection fp = resolve_fixed_points(t);
  const Eigen::Index d = t.dim();
  StationaryStates out;
  out.unique = fp.fixed_dimension == 1;

  auto to_state = [&](const ComplexMatrix& rho) {
    ComplexMatrix img = fp.projector.apply(rho);
    img = hermitian_part(img);
    img /= img.trace().real();
    return DensityMatrix::from(img, 1e-8);
  };

  if (out.unique) {
    out.basis.push_back(to_state(ComplexMatrix::Identity(d, d) / static_cast<double>(d)));
    return out;
  }

  // Probe states |i>, (|i>+|j>)/sqrt2, (|i>+i|j>)/sqrt2 span M_d; keep the
  // linearly independent images.
  std::vector<ComplexVector> probes;
  for (Eigen::Index i = 0; i < d; ++i) probes.push_back(ComplexVector::Unit(d, i));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      ComplexVector a = ComplexVector::Unit(d, i) + ComplexVector::Unit(d, j);
      ComplexVector b = ComplexVector::Unit(d, i) + Complex(0, 1) * ComplexVector::Unit(d, j);
      probes.push_back(a / std::sqrt(2.0));
      probes.push_back(b / std::sqrt(2.0));
    }
  }
  std::vector<ComplexVector> ortho;
  for (const ComplexVector& psi : probes) {
    if (static_cast<Eigen::Index>(out.basis.size()) == fp.fixed_dimension) break;
    DensityMatrix rho = to_state(psi * psi.adjoint());
    ComplexVector v = vec(rho.matrix());
    for (const ComplexVector& q : ortho) v -= q * q.dot(v);
    if (v.norm() > 1e-8) {
      ortho.push_back(v.normalized());
      out.basis.push_back(std::move(rho));
    }
  }
  return out;
}

SuperOperator transient_part(const SuperOperator& t) {
  return t - fixed_point_projector(t);
}

SuperOperator fundamental_map(const SuperOperator& t) {
  return fundamental_map(t, fixed_point_projector(t));
}

SuperOperator fundamental_map(const SuperOperator& t, const SuperOperator& projector) {
  const Eigen::Index n = t.matrix().rows();
  const ComplexMatrix a =
      ComplexMatrix::Identity(n, n) - (t.matrix() - projector.matrix());
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  ComplexMatrix z = lu.inverse();
  const double residual = spectral_norm(z * a - ComplexMatrix::Identity(n, n));
  if (!z.allFinite() || residual > 1e-8) {
    const double cond = spectral_norm(a) * spectral_norm(z);
    throw NumericError("fundamental_map: inverse residual " + std::to_string(residual) +
                           " exceeds 1e-8 (condition estimate " + std::to_string(cond) + ")",
                       residual);
  }
  const bool tp = trace_preservation_residual(z, t.dim()) <= 1e-8;
  return SuperOperator(t.dim(), std::move(z), Provenance::explicit_matrix, tp);
}

SpectralData spectral_quantities(const SuperOperator& t) {
  SpectralData out;
  out.eigenvalues = eigenvalues(t.matrix());
  for (const Complex& v : out.eigenvalues) {
    if (std::abs(v - 1.0) <= kTolFix) {
      ++out.one_multiplicity;
      continue;
    }
    out.non_unit.push_back(v);
    out.min_dist_to_one = std::min(out.min_dist_to_one, std::abs(1.0 - v));
    out.spectral_gap = std::min(out.spectral_gap, 1.0 - std::abs(v));
    out.subdominant_modulus = std::max(out.subdominant_modulus, std::abs(v));
    if (std::abs(v) >= 1.0 - kTolCluster) ++out.peripheral_count;
  }
  out.degenerate = out.non_unit.empty();
  return out;
}

std::vector<Complex> MinimalPolynomial::factors(FactorMultiplicity convention) const {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < distinct_roots.size(); ++i) {
    const int reps = convention == FactorMultiplicity::per_block_size ? block_sizes[i] : 1;
    for (int r = 0; r < reps; ++r) out.push_back(distinct_roots[i]);
  }
  return out;
}

namespace {

// Rank of m with the straddle check: a singular value within a factor of 10
// of the threshold makes the decision unreliable.
Eigen::Index guarded_rank(const ComplexMatrix& m, double threshold) {
  const RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold / 10.0 && sv(i) < threshold * 10.0) {
      throw IllConditionedStructureError(
          "minimal_polynomial: singular value " + std::to_string(sv(i)) +
              " straddles the rank threshold " + std::to_string(threshold),
          sv(i));
    }
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace

MinimalPolynomial minimal_polynomial(const ComplexMatrix& delta) {
  require_square(delta, "minimal_polynomial");
  const Eigen::Index n = delta.rows();
  const double norm = spectral_norm(delta);
  MinimalPolynomial out;
  if (norm <= kZeroTransient) {
    out.distinct_roots = {Complex(0.0, 0.0)};
    out.block_sizes = {1};
    out.algebraic_multiplicities = {static_cast<int>(n)};
    out.degree = 1;
    out.linear_factor_count = 1;
    return out;
  }

  const std::vector<Complex> ev = eigenvalues(delta);
  double radius = 0.0;
  for (const Complex& v : ev) radius = std::max(radius, std::abs(v));
  const double tol = kTolCluster * std::max(radius, std::numeric_limits<double>::min());
  const std::vector<int> ids = cluster_values(ev, tol);
  const int n_clusters = *std::max_element(ids.begin(), ids.end()) + 1;

  const double threshold = 1e-8 * norm;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix annihilator = id;
  for (int c = 0; c < n_clusters; ++c) {
    Complex root(0.0, 0.0);
    int mult = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ids[i] == c) {
        root += ev[i];
        ++mult;
      }
    }
    root /= static_cast<double>(mult);

    const ComplexMatrix b = delta - root * id;
    ComplexMatrix bk = b;
    Eigen::Index prev_rank = guarded_rank(bk, threshold);
    int block = 0;
    for (int k = 1; k <= mult; ++k) {
      bk = bk * b;
      const Eigen::Index rank = guarded_rank(bk, threshold);
      if (rank == prev_rank) {
        block = k;
        break;
      }
      prev_rank = rank;
    }
    if (block == 0 || n - prev_rank != mult) {
      throw IllConditionedStructureError(
          "minimal_polynomial: generalized eigenspace dimension does not match the "
          "eigenvalue cluster size",
          static_cast<double>(n - prev_rank));
    }
    out.distinct_roots.push_back(root);
    out.block_sizes.push_back(block);
    out.algebraic_multiplicities.push_back(mult);
    out.degree += block;
    for (int k = 0; k < block; ++k) annihilator = annihilator * b;
  }
  out.linear_factor_count = out.degree;
  out.annihilation_residual = spectral_norm(annihilator);
  if (out.annihilation_residual > 1e-6 * std::pow(norm, out.degree)) {
    throw IllConditionedStructureError(
        "minimal_polynomial: candidate polynomial does not annihilate the map",
        out.annihilation_residual);
  }
  return out;
}

MinimalPolynomial minimal_polynomial(const SuperOperator& delta) {
  return minimal_polynomial(delta.matrix());
}

}  // namespace qms
