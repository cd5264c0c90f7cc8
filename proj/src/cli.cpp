// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qms/channel_io.hpp"
#include "qms/finite_time.hpp"
#include "qms/ensembles.hpp"
#include "qms/report.hpp"
#include "qms/spectral.hpp"
#include "qms/stability.hpp"

namespace qms::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string format = "text";
  double tol = kTolOpt;
  int restarts = 64;
  std::uint64_t seed = 0;
  int steps = 50;
  double t_max = 20.0;
  std::string pair;
  std::string state;
  std::string out_path;
  std::vector<std::string> inputs;
  // ensemble
  int dim = 2;
  int count = 10;
  double eps = 1e-3;
  std::string mode = "discrete";
  int rank = 0;
};

struct Output {
  json document;
  std::vector<BoundReport> rows;
  bool has_rows = false;
  int code = kOk;
};

OptimizerOptions optimizer(const Settings& s) {
  OptimizerOptions o;
  o.restarts = s.restarts;
  o.seed = s.seed;
  return o;
}

ValidationOptions validation(const Settings& s) {
  ValidationOptions v;
  v.optimizer = optimizer(s);
  v.tol = s.tol;
  return v;
}

json complex_json(const Complex& z) { return json::array({json_number(z.real()), json_number(z.imag())}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json estimate_json(const ContractionEstimate& e) {
  return {{"value", json_number(e.value)},
          {"method", to_string(e.method)},
          {"restarts", e.restarts},
          {"converged", e.converged},
          {"convergence_spread", json_number(e.convergence_spread)},
          {"error_bound", json_number(e.error_bound)}};
}

json pair_json(const ConvergencePair& p) {
  json j = {{"K", json_number(p.K)},
            {"rate", json_number(p.rate)},
            {"kind", to_string(p.kind)},
            {"recipe", to_string(p.recipe)},
            {"validity_checked_to", json_number(p.validity_checked_to)},
            {"validity_requested", json_number(p.validity_requested)},
            {"usable", p.usable},
            {"worst_ratio", json_number(p.worst_ratio)}};
  if (p.kind == PairKind::discrete) {
    j["n_hat"] = discrete_threshold(p.K, p.rate);
  } else {
    j["t_hat"] = json_number(continuous_threshold(p.K, p.rate));
  }
  if (!p.diagnostic.empty()) j["diagnostic"] = p.diagnostic;
  if (p.circle) {
    const auto& c = *p.circle;
    json roots = json::array();
    for (const Complex& z : c.factors) roots.push_back(complex_json(z));
    j["minimal_polynomial"] = {{"factor_count", c.factor_count},
                               {"factors", roots},
                               {"prefactor", json_number(c.prefactor)},
                               {"circle_sup", json_number(c.circle_sup)},
                               {"modulus_product", json_number(c.modulus_product)},
                               {"K_circle", json_number(c.K_circle)},
                               {"K_product", json_number(c.K_product)}};
  }
  return j;
}

json condition_json(const ConditionReport& c) {
  json j = {{"dim", c.dim},
            {"kappa_tau_z", estimate_json(c.kappa_tau_z)},
            {"tau_T", estimate_json(c.tau_t)},
            {"spectral_lower", json_number(c.spectral_lower)},
            {"spectral_upper", json_number(c.spectral_upper)},
            {"sandwich_applicable", c.sandwich_applicable},
            {"peripheral", c.peripheral}};
  if (c.kappa_contraction) {
    j["kappa_contraction"] = json_number(*c.kappa_contraction);
  } else {
    j["kappa_contraction"] = nullptr;
    j["kappa_contraction_reason"] = c.kappa_contraction_reason;
  }
  return j;
}

// "a.b[0]: value" lines; the same values as the JSON document.
void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

void emit(const Output& o, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json doc = o.document;
    if (o.has_rows) doc["rows"] = to_json(o.rows);
    os << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv" && o.has_rows) {
    write_csv(os, o.rows);
    return;
  }
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(o.document, "", lines);
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : lines) os << k << ',' << v << '\n';
    return;
  }
  for (const auto& [k, v] : lines) os << k << ": " << v << '\n';
  if (o.has_rows) {
    os << '\n';
    write_csv(os, o.rows);
  }
}

ChannelFile load(const std::string& path) { return load_channel_file(path); }

SuperOperator require_map(const ChannelFile& f, const std::string& path) {
  if (!f.map) throw ParseError(path + ": expected a channel, got a generator");
  return *f.map;
}

DensityMatrix parse_state(const std::string& spec, Eigen::Index d) {
  if (spec == "maximally-mixed") return DensityMatrix::maximally_mixed(d);
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream f(path);
    if (!f) throw ParseError(path + ": cannot open state file");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      throw ParseError(path + ": invalid JSON: " + e.what());
    }
    // {"data": d x d array of [re, im]}
    if (!j.is_object() || !j.contains("data")) throw ParseError(path + ": data: missing field");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<std::size_t>(d)) {
      throw ParseError(path + ": data: expected " + std::to_string(d) + " rows");
    }
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      const auto& row = data[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
        throw ParseError(path + ": data[" + std::to_string(r) + "]: expected " +
                         std::to_string(d) + " entries");
      }
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto& z = row[static_cast<std::size_t>(c)];
        const std::string field =
            "data[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw ParseError(path + ": " + field + ": expected [re, im]");
        }
        const double re = z[0].get<double>();
        const double im = z[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
          throw ParseError(path + ": " + field + ": value is not finite");
        }
        m(r, c) = Complex(re, im);
      }
    }
    try {
      return DensityMatrix::from(m, 1e-8);
    } catch (const Error& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError("--state: expected maximally-mixed or file:PATH, got \"" + spec + "\"");
}

void require_inputs(const Settings& s, std::size_t n, const char* command) {
  if (s.inputs.size() != n) {
    throw ParseError(std::string(command) + ": expected " + std::to_string(n) +
                     " input file(s), got " + std::to_string(s.inputs.size()));
  }
}

json validation_json(const ValidationReport& v) {
  const std::string positivity =
      v.positivity.counterexample
          ? "counterexample"
          : "no_counterexample(" + std::to_string(v.positivity.n_samples) + ")";
  json j = {{"trace_preserving",
             {{"ok", v.trace_preserving.ok}, {"residual", json_number(v.trace_preserving.residual)}}},
            {"hermiticity_preserving",
             {{"ok", v.hermiticity_preserving.ok},
              {"residual", json_number(v.hermiticity_preserving.residual)}}},
            {"completely_positive", v.completely_positive},
            {"min_choi_eigenvalue", json_number(v.min_choi_eigenvalue)},
            {"unital", {{"ok", v.unital.ok}, {"residual", json_number(v.unital.residual)}}},
            {"positivity", positivity}};
  if (v.positivity.counterexample) {
    j["positivity_witness_min_eigenvalue"] = json_number(v.positivity.witness_min_eigenvalue);
  }
  return j;
}

Output cmd_validate(const Settings& s) {
  require_inputs(s, 1, "validate");
  const ChannelFile f = load(s.inputs[0]);
  Output o;
  o.document = {{"command", "validate"},
                {"input", s.inputs[0]},
                {"label", f.label},
                {"representation", f.representation},
                {"dim", f.dim}};
  auto channel_ok = [](const ValidationReport& v) {
    return v.trace_preserving.ok && v.completely_positive;
  };
  if (f.map) {
    const ValidationReport v = validate(*f.map, 1000, s.seed);
    o.document["report"] = validation_json(v);
    if (!channel_ok(v)) o.code = kViolation;
  } else {
    const double res = f.generator->trace_annihilation_residual();
    o.document["trace_annihilation_residual"] = json_number(res);
    if (res > kTolStructure) o.code = kViolation;
    json props = json::array();
    for (double t : {0.1, 1.0}) {
      const ValidationReport v = validate(f.generator->propagator(t), 1000, s.seed);
      props.push_back({{"t", json_number(t)}, {"report", validation_json(v)}});
      if (!channel_ok(v)) o.code = kViolation;
    }
    o.document["propagators"] = props;
  }
  return o;
}

Output cmd_analyze(const Settings& s) {
  require_inputs(s, 1, "analyze");
  const ChannelFile f = load(s.inputs[0]);
  const SuperOperator t = f.map ? *f.map : f.generator->propagator(1.0);
  Output o;
  o.document = {{"command", "analyze"},
                {"input", s.inputs[0]},
                {"label", f.label},
                {"dim", f.dim}};
  if (f.generator) o.document["propagator_time"] = json_number(1.0);

  const FixedPointProjection fp = resolve_fixed_points(t);
  const ConditionReport c = condition_numbers(t, optimizer(s));
  json spectrum = json::array();
  for (const Complex& z : c.spectral.eigenvalues) spectrum.push_back(complex_json(z));
  o.document["spectrum"] = spectrum;
  o.document["fixed_dimension"] = fp.fixed_dimension;
  o.document["min_dist_to_one"] = json_number(c.spectral.min_dist_to_one);
  o.document["spectral_gap"] = json_number(c.spectral.spectral_gap);
  o.document["subdominant_modulus"] = json_number(c.spectral.subdominant_modulus);
  o.document["tau"] = estimate_json(c.tau_t);
  o.document["condition"] = condition_json(c);
  o.document["cesaro"] = {{"checked", fp.cesaro_checked},
                          {"residual", json_number(fp.cesaro_residual)}};
  if (!fp.cesaro_note.empty()) o.document["cesaro"]["note"] = fp.cesaro_note;
  return o;
}

Output cmd_compare(const Settings& s) {
  require_inputs(s, 2, "compare");
  const SuperOperator t1 = require_map(load(s.inputs[0]), s.inputs[0]);
  const SuperOperator t2 = require_map(load(s.inputs[1]), s.inputs[1]);
  if (t1.dim() != t2.dim()) throw DimensionError("compare: channels have different dimensions");
  std::optional<DensityMatrix> rho2;
  if (!s.state.empty()) {
    rho2 = parse_state(s.state, t2.dim());
  } else {
    const StationaryStates st = stationary_states(t2);
    if (!st.unique) {
      throw PreconditionError(
          "compare: " + s.inputs[1] +
              " has several stationary states; choose one with --state",
          0.0);
    }
    rho2 = st.basis.front();
  }
  const PerturbationOutcome p = fixed_point_perturbation(t1, t2, *rho2, optimizer(s));
  Output o;
  o.document = {{"command", "compare"},
                {"inputs", s.inputs},
                {"rho1", matrix_json(p.rho1.matrix())},
                {"rho2", matrix_json(p.rho2.matrix())},
                {"actual_distance", json_number(p.actual_distance)},
                {"bound_value", json_number(p.bound_value)},
                {"identity_residual", json_number(p.identity_residual)},
                {"stationarity_residual", json_number(p.stationarity_residual)},
                {"condition", condition_json(p.condition)}};
  json entries = json::array();
  for (const auto& e : p.entries) {
    entries.push_back({{"kappa_variant", e.kappa_variant},
                       {"norm_mode", to_string(e.norm_mode)},
                       {"kappa", json_number(e.kappa)},
                       {"norm", json_number(e.norm)},
                       {"bound", json_number(e.bound)},
                       {"slack", json_number(e.slack)}});
  }
  o.document["entries"] = entries;
  o.rows = bound_rows(p, "0", s.tol);
  o.has_rows = true;
  bool ok = p.identity_residual <= 1e-8;
  for (const auto& r : o.rows) ok = ok && r.holds;
  if (!ok) o.code = kViolation;
  return o;
}

/// MU of "auto-minpoly:MU" (or its alias "auto-eq10:MU"); empty otherwise.
std::string minpoly_mu(const std::string& spec) {
  for (const char* prefix : {"auto-minpoly:", "auto-eq10:"}) {
    const std::string p = prefix;
    if (spec.rfind(p, 0) == 0) return spec.substr(p.size());
  }
  return {};
}

ConvergencePair discrete_pair(const SuperOperator& t, const std::string& spec,
                              const Settings& s) {
  const ValidationOptions v = validation(s);
  if (spec.empty() || spec == "auto-chi2") return pair_chi2(t, 50, v);
  if (spec == "auto-db") return pair_detailed_balance(t, 50, v);
  if (const std::string mu = minpoly_mu(spec); !mu.empty()) {
    return pair_minimal_polynomial(t, std::stod(mu), 100, v);
  }
  const auto colon = spec.find(':');
  return user_pair(std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1)),
                   PairKind::discrete);
}

void check_pair_spec(const std::string& spec) {
  if (spec.empty() || spec == "auto-chi2" || spec == "auto-db") return;
  auto is_number = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t used = 0;
    try {
      std::stod(x, &used);
    } catch (const std::exception&) {
      return false;
    }
    return used == x.size();
  };
  if (is_number(minpoly_mu(spec))) return;
  const auto colon = spec.find(':');
  if (colon != std::string::npos && is_number(spec.substr(0, colon)) &&
      is_number(spec.substr(colon + 1))) {
    return;
  }
  throw ParseError("--pair: expected auto-chi2, auto-db, auto-minpoly:MU or K:MU, got \"" + spec +
                   "\"");
}

ConvergencePair continuous_pair(const GeneratorMap& l, const std::string& spec,
                                const Settings& s) {
  if (!spec.empty() && spec.rfind("auto-", 0) != 0) {
    const auto colon = spec.find(':');
    return user_pair(std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1)),
                     PairKind::continuous);
  }
  ConvergencePair pair = continuous_from_discrete(discrete_pair(l.propagator(1.0), spec, s), 1.0);
  validate_pair(l, pair, s.t_max, std::max(s.steps, 2), validation(s));
  return pair;
}

Output cmd_trajectory(const Settings& s) {
  require_inputs(s, 2, "trajectory");
  check_pair_spec(s.pair);
  const ChannelFile a = load(s.inputs[0]);
  const ChannelFile b = load(s.inputs[1]);
  if (a.is_generator() != b.is_generator()) {
    throw ParseError("trajectory: inputs must both be channels or both be generators");
  }
  if (a.dim != b.dim) throw DimensionError("trajectory: inputs have different dimensions");
  const DensityMatrix start =
      s.state.empty() ? DensityMatrix::basis_state(a.dim, 0) : parse_state(s.state, a.dim);
  TrajectoryOptions to;
  to.optimizer = optimizer(s);
  to.tol = s.tol;
  to.instance = "0";
  Output o;
  o.document = {{"command", "trajectory"}, {"inputs", s.inputs}};
  ConvergencePair pair;
  if (!a.is_generator()) {
    pair = discrete_pair(*a.map, s.pair, s);
    o.document["mode"] = "discrete";
    o.rows = discrete_trajectory_check(*a.map, *b.map, start, start, s.steps, pair, to);
  } else {
    pair = continuous_pair(*a.generator, s.pair, s);
    o.document["mode"] = "continuous";
    o.rows = continuous_trajectory_check(*a.generator, *b.generator, start, start, s.t_max,
                                         s.steps, pair, to);
  }
  o.document["pair"] = pair_json(pair);
  o.has_rows = true;
  for (const auto& r : o.rows) {
    if (!r.holds) o.code = kViolation;
  }
  return o;
}

Output cmd_pairs(const Settings& s) {
  require_inputs(s, 1, "pairs");
  check_pair_spec(s.pair);
  const ChannelFile f = load(s.inputs[0]);
  const SuperOperator t = f.map ? *f.map : f.generator->propagator(1.0);
  std::vector<std::string> specs;
  if (!s.pair.empty()) {
    specs.push_back(s.pair);
  } else {
    const double sub = spectral_quantities(t).subdominant_modulus;
    specs = {"auto-chi2", "auto-db", "auto-minpoly:" + format_number((1.0 + sub) / 2.0)};
  }
  Output o;
  o.document = {{"command", "pairs"}, {"input", s.inputs[0]}};
  json pairs = json::array();
  for (const auto& spec : specs) {
    try {
      ConvergencePair p = discrete_pair(t, spec, s);
      if (p.recipe == Recipe::user_supplied) validate_pair(t, p, s.steps, validation(s));
      json j = pair_json(p);
      j["spec"] = spec;
      pairs.push_back(j);
      if (!p.usable) o.code = kViolation;
    } catch (const DomainError& e) {
      pairs.push_back({{"spec", spec}, {"error", e.what()}});
    }
  }
  o.document["pairs"] = pairs;
  return o;
}

Output cmd_ensemble(const Settings& s) {
  if (!s.inputs.empty()) throw ParseError("ensemble: takes no input files");
  EnsembleConfig c;
  c.dim = s.dim;
  c.count = s.count;
  c.master_seed = s.seed;
  c.kraus_rank = s.rank;
  c.perturbation_eps = s.eps;
  c.steps = s.steps;
  c.t_max = s.t_max;
  c.tol = s.tol;
  c.optimizer = optimizer(s);
  if (s.mode == "discrete") {
    c.mode = EnsembleMode::discrete;
  } else if (s.mode == "continuous") {
    c.mode = EnsembleMode::continuous;
  } else {
    throw ParseError("--mode: expected discrete or continuous, got \"" + s.mode + "\"");
  }
  Output o;
  o.rows = sweep(c);
  o.has_rows = true;
  int errors = 0;
  for (const auto& r : o.rows) {
    if (!r.error.empty()) {
      ++errors;
    } else if (!r.holds) {
      o.code = kViolation;
    }
  }
  o.document = {{"command", "ensemble"},
                {"dim", c.dim},
                {"count", c.count},
                {"seed", c.master_seed},
                {"eps", json_number(c.perturbation_eps)},
                {"mode", to_string(c.mode)},
                {"error_rows", errors}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perturbation and condition-number bounds for quantum Markov processes", "qms"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--tol", s.tol, "slack tolerance for violation checks");
    sub->add_option("--restarts", s.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", s.seed, "master seed");
    sub->add_option("--out", s.out_path, "write the report to this file");
  };
  auto inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("inputs", s.inputs, what);
  };

  std::vector<std::pair<CLI::App*, std::function<Output(const Settings&)>>> commands;

  auto* validate_cmd = app.add_subcommand("validate", "check TP, CP, Hermiticity, positivity");
  inputs(validate_cmd, "channel file");
  common(validate_cmd);
  commands.emplace_back(validate_cmd, cmd_validate);

  auto* analyze = app.add_subcommand("analyze", "spectrum, tau and condition numbers");
  inputs(analyze, "channel file");
  common(analyze);
  commands.emplace_back(analyze, cmd_analyze);

  auto* compare = app.add_subcommand("compare", "stationary-state perturbation bound");
  inputs(compare, "T1 and T2 channel files");
  common(compare);
  compare->add_option("--state", s.state, "rho2: maximally-mixed or file:PATH");
  commands.emplace_back(compare, cmd_compare);

  auto* trajectory = app.add_subcommand("trajectory", "finite-time bound along two trajectories");
  inputs(trajectory, "T and E channel (or generator) files");
  common(trajectory);
  trajectory->add_option("--steps", s.steps, "steps (discrete) or time samples (continuous)")
      ->check(CLI::NonNegativeNumber);
  trajectory->add_option("--t-max", s.t_max, "final time (continuous)")
      ->check(CLI::NonNegativeNumber);
  trajectory->add_option("--pair", s.pair, "auto-chi2, auto-db, auto-minpoly:MU or K:MU");
  trajectory->add_option("--state", s.state, "initial state: maximally-mixed or file:PATH");
  commands.emplace_back(trajectory, cmd_trajectory);

  auto* pairs = app.add_subcommand("pairs", "derive and validate convergence pairs");
  inputs(pairs, "channel file");
  common(pairs);
  pairs->add_option("--pair", s.pair, "auto-chi2, auto-db, auto-minpoly:MU or K:MU");
  pairs->add_option("--steps", s.steps, "validation horizon for K:MU pairs")
      ->check(CLI::NonNegativeNumber);
  commands.emplace_back(pairs, cmd_pairs);

  auto* ensemble = app.add_subcommand("ensemble", "random sweep of the bound checks");
  common(ensemble);
  ensemble->add_option("--dim", s.dim, "Hilbert-space dimension")->check(CLI::Range(1, 8));
  ensemble->add_option("--count", s.count, "number of instances")->check(CLI::PositiveNumber);
  ensemble->add_option("--eps", s.eps, "perturbation strength")->check(CLI::Range(0.0, 1.0));
  ensemble->add_option("--mode", s.mode, "discrete or continuous")
      ->check(CLI::IsMember({"discrete", "continuous"}));
  ensemble->add_option("--rank", s.rank, "Kraus rank or jump count (0: default)")
      ->check(CLI::NonNegativeNumber);
  ensemble->add_option("--steps", s.steps, "trajectory steps or time samples")
      ->check(CLI::NonNegativeNumber);
  ensemble->add_option("--t-max", s.t_max, "final time (continuous)")
      ->check(CLI::NonNegativeNumber);
  commands.emplace_back(ensemble, cmd_ensemble);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      const Output o = handler(s);
      if (s.out_path.empty()) {
        emit(o, s.format, out);
      } else {
        std::ofstream f(s.out_path);
        if (!f) throw ParseError(s.out_path + ": cannot open for writing");
        emit(o, s.format, f);
      }
      return o.code;
    }
  } catch (const NumericError& e) {
    err << "qms: numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "qms: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "qms: invalid number: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qms::cli
