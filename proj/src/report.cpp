// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qms/errors.hpp"

namespace qms {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json json_number(double x) {
  if (!std::isfinite(x)) return format_number(x);
  const double v = std::stod(format_number(x));
  return v == 0.0 ? 0.0 : v;
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return kNaN;
  }
  throw ParseError("expected a number or one of \"inf\", \"-inf\", \"nan\"");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::string& csv_header() {
  static const std::string header =
      "instance,n_or_t,exact,bound,slack,regime,K,rate,recipe,kappa_variant";
  return header;
}

std::string to_csv_row(const BoundReport& r) {
  std::string row = csv_field(r.instance);
  for (double v : {r.n_or_t, r.exact, r.bound, r.slack}) row += "," + format_number(v);
  row += "," + csv_field(r.error.empty() ? r.regime : "error: " + r.error);
  row += "," + format_number(r.K) + "," + format_number(r.rate);
  row += "," + csv_field(r.recipe) + "," + csv_field(r.kappa_variant);
  return row;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["n_or_t"] = json_number(r.n_or_t);
  j["exact"] = json_number(r.exact);
  j["bound"] = json_number(r.bound);
  j["slack"] = json_number(r.slack);
  j["regime"] = r.regime;
  j["K"] = json_number(r.K);
  j["rate"] = json_number(r.rate);
  j["recipe"] = r.recipe;
  j["kappa_variant"] = r.kappa_variant;
  j["holds"] = r.holds;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::json to_json(const std::vector<BoundReport>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) j.push_back(to_json(r));
  return j;
}

}  // namespace qms
