#include "legendre/core/report.hpp"

#include <cstdio>

namespace legendre {

std::string to_string(Status status) { return status == Status::pass ? "PASS" : "FAIL"; }

void Report::add_branch(std::string name, bool ok, std::string detail) {
  branches.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  if (!ok) status = Status::fail;
}

void Report::fail_with(std::string residual) {
  residuals.push_back(std::move(residual));
  status = Status::fail;
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["check_name"] = report.check_name;
  j["status"] = to_string(report.status);
  j["residuals"] = report.residuals;
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : report.branches) {
    nlohmann::ordered_json bj;
    bj["name"] = b.name;
    bj["status"] = to_string(b.status);
    bj["detail"] = b.detail;
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);
  j["details"] = report.details;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Report>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace legendre
