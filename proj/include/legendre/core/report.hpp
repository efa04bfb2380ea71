#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace legendre {

enum class Status { pass, fail };

std::string to_string(Status status);

struct Branch {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

/// Outcome of one verification. Serializes to
/// {check_name, status, residuals, branches, details}.
struct Report {
  std::string check_name;
  Status status = Status::pass;
  /// Canonical polynomial strings (exact checks) or formatted numbers.
  std::vector<std::string> residuals;
  std::vector<Branch> branches;
  /// Free-form numeric payload: max residuals, locations, counts.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  [[nodiscard]] bool passed() const { return status == Status::pass; }

  /// Adds a branch and downgrades the status when it fails.
  void add_branch(std::string name, bool ok, std::string detail = {});
  void fail_with(std::string residual);
};

nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const std::vector<Report>& reports);

/// "%.17g"; the lossless text form used for CSV and console output.
std::string format_double(double value);

}  // namespace legendre
