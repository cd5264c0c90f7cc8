// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qms/channel.hpp"
#include "qms/contraction.hpp"
#include "qms/ensembles.hpp"
#include "qms/random.hpp"

using namespace qms;

namespace {

ComplexMatrix gaussian(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = rng.complex_gaussian();
  }
  return m;
}

ComplexMatrix random_state(Eigen::Index d, std::uint64_t seed) {
  ComplexMatrix g = gaussian(d, seed);
  ComplexMatrix r = g * g.adjoint();
  return r / r.trace();
}

}  // namespace

TEST_CASE("Kraus construction") {
  SuperOperator id = from_kraus({ComplexMatrix::Identity(3, 3)});
  CHECK(id.matrix() == ComplexMatrix::Identity(9, 9));
  CHECK(id.flagged_trace_preserving());

  const double p = 0.3;
  std::vector<ComplexMatrix> ks{std::sqrt(1 - 3 * p / 4) * oracle::pauli(0)};
  for (int k = 1; k <= 3; ++k) ks.push_back(std::sqrt(p / 4) * oracle::pauli(k));
  SuperOperator dep = from_kraus(ks);
  CHECK((dep.matrix() - oracle::depolarizing(p)).norm() < 1e-14);
  auto ev = eigenvalues(dep.matrix());
  CHECK(std::abs(ev[0] - Complex(1.0)) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(ev[i] - Complex(1 - p)) < 1e-12);

  ComplexMatrix a0 = ComplexMatrix::Zero(2, 2), a1 = ComplexMatrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a1(0, 1) = 1.0;
  SuperOperator ad = from_kraus({a0, a1});
  for (std::uint64_t s = 0; s < 5; ++s) {
    ComplexMatrix rho = random_state(2, s);
    ComplexMatrix out = ad.apply(rho);
    CHECK(std::abs(out(0, 0) - Complex(1.0)) < 1e-12);
    CHECK(out.norm() == doctest::Approx(1.0));
  }

  CHECK_THROWS_AS(from_kraus({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}),
                  DimensionError);
}

TEST_CASE("Kraus action and composition match the oracle") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    std::vector<ComplexMatrix> ks{gaussian(3, s), gaussian(3, s + 50)};
    SuperOperator t = from_kraus(ks);
    CHECK((t.matrix() - oracle::superop_from_kraus(ks)).norm() < 1e-12);
    ComplexMatrix x = gaussian(3, s + 99);
    ComplexMatrix direct = ks[0] * x * ks[0].adjoint() + ks[1] * x * ks[1].adjoint();
    CHECK((t.apply(x) - direct).norm() <= 1e-12 * direct.norm());
  }
  SuperOperator a = random_channel(2, 2, 1), b = random_channel(2, 3, 2);
  ComplexMatrix rho = random_state(2, 3);
  CHECK((a.compose(b).apply(rho) - a.apply(b.apply(rho))).norm() < 1e-13);
  CHECK((a.compose(b).matrix() - a.matrix() * b.matrix()).norm() < 1e-13);
}

TEST_CASE("stochastic embedding") {
  RealMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  SuperOperator t = from_stochastic(swap);
  CHECK((t.apply(DensityMatrix::basis_state(2, 0).matrix()) -
         DensityMatrix::basis_state(2, 1).matrix())
            .norm() < 1e-15);
  bool has_minus_one = false;
  for (Complex l : eigenvalues(t.matrix())) has_minus_one |= std::abs(l + 1.0) < 1e-12;
  CHECK(has_minus_one);

  RealMatrix s1(3, 3), s2(3, 3);
  s1 << 0.2, 0.5, 0.3, 0.1, 0.1, 0.8, 0.6, 0.2, 0.2;
  s2 << 0.9, 0.1, 0.0, 0.3, 0.3, 0.4, 0.0, 0.5, 0.5;
  // from_stochastic(S) acts on probability row vectors as p -> p S.
  SuperOperator lhs = from_stochastic(s1 * s2);
  SuperOperator rhs = from_stochastic(s2).compose(from_stochastic(s1));
  CHECK((lhs.matrix() - rhs.matrix()).norm() < 1e-14);

  RealMatrix bad(2, 2);
  bad << 0.5, 0.6, 0.5, 0.5;
  CHECK_THROWS_AS(from_stochastic(bad), ValidationError);
  bad << -0.1, 1.1, 0.5, 0.5;
  CHECK_THROWS_AS(from_stochastic(bad), ValidationError);
}

TEST_CASE("dual is the Hilbert-Schmidt adjoint") {
  SuperOperator id = maps::identity(2);
  CHECK(dual(id).matrix() == id.matrix());
  SuperOperator t = random_channel(3, 4, 11);
  CHECK(dual(dual(t)).matrix() == t.matrix());
  CHECK((dual(t).apply(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)).norm() <
        1e-10);
  for (std::uint64_t s = 0; s < 100; ++s) {
    ComplexMatrix a = gaussian(3, 2 * s), b = gaussian(3, 2 * s + 1);
    Complex lhs = (dual(t).apply(a).adjoint() * b).trace();
    Complex rhs = (a.adjoint() * t.apply(b)).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("Choi matrices") {
  ComplexMatrix omega = choi(maps::identity(2));
  CHECK(omega.trace().real() == doctest::Approx(2.0));
  CHECK(numerical_rank(omega, 1e-10) == 1);

  ComplexMatrix full = choi(maps::depolarizing(2, 1.0));
  CHECK((full - 0.5 * ComplexMatrix::Identity(4, 4)).norm() < 1e-14);

  ComplexMatrix tr = choi(maps::transpose(2));
  CHECK(min_hermitian_eigenvalue(tr) == doctest::Approx(-1.0));
}

TEST_CASE("validation reports") {
  ValidationReport dep = validate(maps::depolarizing(2, 0.5), 200, 3);
  CHECK(dep.trace_preserving.ok);
  CHECK(dep.completely_positive);
  CHECK(dep.min_choi_eigenvalue == doctest::Approx(0.25));
  CHECK(dep.unital.ok);
  CHECK(dep.hermiticity_preserving.ok);
  CHECK_FALSE(dep.positivity.counterexample);

  ValidationReport tr = validate(maps::transpose(2), 200, 3);
  CHECK(tr.trace_preserving.ok);
  CHECK_FALSE(tr.completely_positive);
  CHECK(tr.min_choi_eigenvalue == doctest::Approx(-1.0));
  CHECK_FALSE(tr.positivity.counterexample);
  CHECK(tr.positivity.n_samples == 200);

  SuperOperator traceless = maps::identity(2) - maps::depolarizing(2, 1.0);
  ValidationReport nt = validate(traceless, 10, 3);
  CHECK_FALSE(nt.trace_preserving.ok);
  CHECK(nt.trace_preserving.residual > 0.0);

  ValidationReport again = validate(maps::transpose(2), 200, 3);
  CHECK(again.min_choi_eigenvalue == tr.min_choi_eigenvalue);
}

TEST_CASE("positive trace-preserving maps have unit induced norm") {
  OptimizerOptions opts;
  opts.restarts = 8;
  for (std::uint64_t s = 0; s < 3; ++s) {
    SuperOperator t = random_channel(2, 3, s);
    CHECK(norm_1to1(t, opts).value == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK(norm_1to1(maps::transpose(2), opts).value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("generators") {
  GeneratorMap l = maps::depolarizing_generator(3, 0.7);
  CHECK(l.trace_annihilation_residual() < 1e-12);
  GeneratorMap zero = lindblad_generator(ComplexMatrix::Zero(2, 2), {});
  CHECK(zero.matrix().norm() == 0.0);
  SuperOperator p = l.propagator(0.0);
  CHECK((p.matrix() - ComplexMatrix::Identity(9, 9)).norm() < 1e-14);
}
