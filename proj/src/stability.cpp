// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/stability.hpp"

#include <cmath>
#include <numbers>

namespace qms {

double spectral_upper_constant(Eigen::Index d) {
  const double dd = static_cast<double>(d);
  return 2.0 * (5.0 * std::numbers::pi / 3.0 + 2.0 * std::numbers::sqrt2) * dd * dd * dd;
}

ConditionReport condition_numbers(const SuperOperator& t, const OptimizerOptions& opts) {
  ConditionReport out;
  out.dim = t.dim();
  out.spectral = spectral_quantities(t);
  out.min_dist_to_one = out.spectral.min_dist_to_one;
  out.peripheral = out.spectral.peripheral_count > 0;
  if (out.spectral.non_unit.empty()) {
    out.sandwich_applicable = false;
    out.spectral_lower = 0.0;
    out.spectral_upper = kInf;
  } else {
    out.spectral_lower = 1.0 / out.min_dist_to_one;
    out.spectral_upper = spectral_upper_constant(t.dim()) / out.min_dist_to_one;
  }

  const SuperOperator projector = fixed_point_projector(t);
  out.kappa_tau_z = tau(fundamental_map(t, projector), opts);
  out.tau_t = tau(t, opts);

  if (!stationary_states(t).unique) {
    out.kappa_contraction_reason = "stationary state is not unique";
  } else if (out.tau_t.value >= 1.0 - 1e-9) {
    out.kappa_contraction = kInf;
  } else {
    out.kappa_contraction = 1.0 / (1.0 - out.tau_t.value);
  }
  return out;
}

PerturbationOutcome fixed_point_perturbation(const SuperOperator& t1, const SuperOperator& t2,
                                             const DensityMatrix& rho2,
                                             const OptimizerOptions& opts) {
  if (t1.dim() != t2.dim() || rho2.dim() != t1.dim()) {
    throw DimensionError("fixed_point_perturbation: dimensions of T1, T2 and rho2 differ");
  }
  const double stationarity = trace_norm(t2.apply(rho2.matrix()) - rho2.matrix());
  if (stationarity > 1e-9) {
    throw PreconditionError(
        "fixed_point_perturbation: rho2 is not stationary for T2 (||T2(rho2) - rho2||_1 = " +
            format_number(stationarity) + ")",
        stationarity);
  }

  const SuperOperator p1 = fixed_point_projector(t1);
  const SuperOperator z1 = fundamental_map(t1, p1);
  const SuperOperator diff = t1 - t2;
  const ComplexMatrix r1 = p1.apply(rho2.matrix());

  PerturbationOutcome out{DensityMatrix::from(r1, 1e-8), rho2, 0.0, 0.0, 0.0, 0.0, {}, {}};
  out.stationarity_residual = stationarity;
  const ComplexMatrix gap = out.rho1.matrix() - rho2.matrix();
  out.actual_distance = hermitian_trace_norm(gap);
  out.identity_residual = trace_norm(r1 - rho2.matrix() - z1.apply(diff.apply(rho2.matrix())));

  out.condition = condition_numbers(t1, opts);
  const double norms[2] = {norm_1to1(diff, opts, NormMode::general).value,
                           norm_1to1(diff, opts, NormMode::hermitian_only).value};
  struct Variant {
    const char* name;
    double kappa;
  };
  std::vector<Variant> variants{{"tau_z", out.condition.kappa_tau_z.value}};
  if (out.condition.kappa_contraction) {
    variants.push_back({"contraction", *out.condition.kappa_contraction});
  }
  if (out.condition.sandwich_applicable) {
    variants.push_back({"spectral_upper", out.condition.spectral_upper});
  }
  for (const auto& v : variants) {
    for (NormMode mode : {NormMode::general, NormMode::hermitian_only}) {
      BoundEntry e;
      e.kappa_variant = v.name;
      e.norm_mode = mode;
      e.kappa = v.kappa;
      e.norm = norms[mode == NormMode::general ? 0 : 1];
      // 0 * inf stays 0: no perturbation, no displacement.
      e.bound = e.norm == 0.0 ? 0.0 : e.kappa * e.norm;
      e.slack = e.bound - out.actual_distance;
      out.entries.push_back(e);
    }
  }
  out.bound_value = out.entries.front().bound;
  return out;
}

std::vector<BoundReport> bound_rows(const PerturbationOutcome& outcome,
                                    const std::string& instance, double tol) {
  std::vector<BoundReport> rows;
  for (const auto& e : outcome.entries) {
    BoundReport r;
    r.instance = instance;
    r.n_or_t = kInf;
    r.exact = outcome.actual_distance;
    r.bound = e.bound;
    r.slack = e.slack;
    r.regime = "stationary";
    r.recipe = "perturbation";
    r.kappa_variant = e.kappa_variant + "/" + to_string(e.norm_mode);
    r.holds = e.slack >= -tol;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qms
