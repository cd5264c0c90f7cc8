// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Channel files:
//
//   {"dim": d, "representation": "kraus" | "superoperator" | "stochastic" | "generator",
//    "data": ..., "label": "optional"}
//
// kraus: array of d x d arrays of [re, im]; superoperator and generator:
// d^2 x d^2 array of [re, im]; stochastic: d x d array of reals.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qms/channel.hpp"

namespace qms {

struct ChannelFile {
  std::string label;
  std::string representation;
  Eigen::Index dim = 0;
  std::optional<SuperOperator> map;       ///< all representations but generator
  std::optional<GeneratorMap> generator;  ///< generator only

  bool is_generator() const noexcept { return generator.has_value(); }
};

/// Errors name `source` and the offending field, e.g. "f.json: data[0][1][0]".
ChannelFile parse_channel(const nlohmann::json& j, const std::string& source = "<input>");
ChannelFile parse_channel_text(const std::string& text, const std::string& source = "<input>");
ChannelFile load_channel_file(const std::string& path);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json channel_to_json(const SuperOperator& t, const std::string& label = "");
nlohmann::json generator_to_json(const GeneratorMap& l, const std::string& label = "");

}  // namespace qms
