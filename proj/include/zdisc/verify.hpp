#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace zdisc {

inline constexpr const char* kReportSchema = "report_v1";

struct Check {
  std::string id;
  nlohmann::json params;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json environment = nlohmann::json::object();

  bool pass() const;
  void add(std::string id, nlohmann::json params, double residual, double threshold);
  void append(const Report& other);
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  double alpha = 0.0;
  int max_m = 10;
  std::uint64_t seed = 20240917;
  int threads = 1;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "polynomials", "kernels", "quadrature", "quantization", "su11" or
/// "all". Throws ErrorCode::invalid_argument for an unknown name.
Report run_suite(std::string_view suite, const VerifyOptions& options);

/// Compares two reports ignoring residual values (each must still be below
/// its threshold) and the environment block. Empty string when they match.
std::string compare_reports(const nlohmann::json& expected, const nlohmann::json& actual);

}  // namespace zdisc
