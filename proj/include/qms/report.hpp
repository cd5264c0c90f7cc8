// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Bound rows shared by the stability and finite-time checks, the ensemble
// sweep and the CLI, with their CSV and JSON encodings.

#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace qms {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct BoundReport {
  std::string instance;
  double n_or_t = kNaN;
  double exact = kNaN;
  double bound = kNaN;
  double slack = kNaN;  ///< bound - exact
  std::string regime;
  double K = kNaN;
  double rate = kNaN;
  std::string recipe;
  std::string kappa_variant;
  bool holds = false;
  std::string error;  ///< non-empty for rows recording a failed instance
};

/// "%.12g"; non-finite values print as inf, -inf, nan.
std::string format_number(double x);

/// The value a reader of format_number(x) would recover; non-finite values
/// become the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);

/// Inverse of json_number.
double number_from_json(const nlohmann::json& j);

const std::string& csv_header();
std::string to_csv_row(const BoundReport& r);
void write_csv(std::ostream& out, const std::vector<BoundReport>& rows);

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const std::vector<BoundReport>& rows);

}  // namespace qms
