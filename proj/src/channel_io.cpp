// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#include "qms/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qms {

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError(source_ + ": " + field + ": " + what);
  }

  const nlohmann::json& array(const nlohmann::json& j, const std::string& field,
                              std::size_t size) const {
    if (!j.is_array()) fail(field, "expected an array");
    if (j.size() != size) {
      fail(field, "expected " + std::to_string(size) + " entries, got " +
                      std::to_string(j.size()));
    }
    return j;
  }

  double real(const nlohmann::json& j, const std::string& field) const {
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "value is not finite");
    return v;
  }

  Complex complex(const nlohmann::json& j, const std::string& field) const {
    array(j, field, 2);
    return {real(j[0], field + "[0]"), real(j[1], field + "[1]")};
  }

  ComplexMatrix complex_matrix(const nlohmann::json& j, const std::string& field,
                               Eigen::Index n) const {
    const auto size = static_cast<std::size_t>(n);
    array(j, field, size);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < size; ++r) {
      const std::string row = field + "[" + std::to_string(r) + "]";
      array(j[r], row, size);
      for (std::size_t c = 0; c < size; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            complex(j[r][c], row + "[" + std::to_string(c) + "]");
      }
    }
    return m;
  }

  RealMatrix real_matrix(const nlohmann::json& j, const std::string& field,
                         Eigen::Index n) const {
    const auto size = static_cast<std::size_t>(n);
    array(j, field, size);
    RealMatrix m(n, n);
    for (std::size_t r = 0; r < size; ++r) {
      const std::string row = field + "[" + std::to_string(r) + "]";
      array(j[r], row, size);
      for (std::size_t c = 0; c < size; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            real(j[r][c], row + "[" + std::to_string(c) + "]");
      }
    }
    return m;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

}  // namespace

ChannelFile parse_channel(const nlohmann::json& j, const std::string& source) {
  const Reader in(source);
  if (!j.is_object()) in.fail("<root>", "expected an object");
  if (!j.contains("dim")) in.fail("dim", "missing field");
  if (!j["dim"].is_number_integer()) in.fail("dim", "expected an integer");
  const auto dim = j["dim"].get<long long>();
  if (dim < 1 || dim > 64) in.fail("dim", "must lie in [1, 64], got " + std::to_string(dim));
  if (!j.contains("representation") || !j["representation"].is_string()) {
    in.fail("representation", "missing or not a string");
  }
  if (!j.contains("data")) in.fail("data", "missing field");

  ChannelFile out;
  out.dim = static_cast<Eigen::Index>(dim);
  out.representation = j["representation"].get<std::string>();
  if (j.contains("label")) {
    if (!j["label"].is_string()) in.fail("label", "expected a string");
    out.label = j["label"].get<std::string>();
  }
  const Eigen::Index d = out.dim;
  const nlohmann::json& data = j["data"];
  try {
    if (out.representation == "kraus") {
      if (!data.is_array() || data.empty()) in.fail("data", "expected a non-empty array");
      std::vector<ComplexMatrix> ops;
      for (std::size_t k = 0; k < data.size(); ++k) {
        ops.push_back(in.complex_matrix(data[k], "data[" + std::to_string(k) + "]", d));
      }
      out.map = from_kraus(ops);
    } else if (out.representation == "superoperator") {
      out.map = SuperOperator(d, in.complex_matrix(data, "data", d * d));
    } else if (out.representation == "stochastic") {
      out.map = from_stochastic(in.real_matrix(data, "data", d));
    } else if (out.representation == "generator") {
      out.generator = GeneratorMap(d, in.complex_matrix(data, "data", d * d));
    } else {
      in.fail("representation", "unknown value \"" + out.representation +
                                    "\" (expected kraus, superoperator, stochastic or generator)");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    in.fail("data", e.what());
  }
  return out;
}

ChannelFile parse_channel_text(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": invalid JSON: " + e.what());
  }
  return parse_channel(j, source);
}

ChannelFile load_channel_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_channel_text(ss.str(), path);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json channel_to_json(const SuperOperator& t, const std::string& label) {
  nlohmann::json j;
  j["dim"] = t.dim();
  j["representation"] = "superoperator";
  j["data"] = matrix_to_json(t.matrix());
  if (!label.empty()) j["label"] = label;
  return j;
}

nlohmann::json generator_to_json(const GeneratorMap& l, const std::string& label) {
  nlohmann::json j;
  j["dim"] = l.dim();
  j["representation"] = "generator";
  j["data"] = matrix_to_json(l.matrix());
  if (!label.empty()) j["label"] = label;
  return j;
}

}  // namespace qms
