#pragma once

#include "json.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace kdunkl {

/// One verification step. Status is one of member / not-member / undecided
/// for ideal membership, certified / no-certificate for cone membership, and
/// verified / failed for everything else.
struct CheckRecord {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::string status;
  std::size_t certificate_size = 0;
  double elapsed_ms = 0;
  std::string ring;
  std::string detail;

  bool passed() const;
  bool undecided() const { return status == "undecided"; }
  nlohmann::json to_json() const;
  static CheckRecord from_json(const nlohmann::json& j);
};

struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord record) { records.push_back(std::move(record)); }
  void append(const Report& other);
  bool all_passed() const;
  bool any_undecided() const;
  std::size_t count_passed() const;
  /// One JSON object per line.
  std::string json_lines() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace kdunkl
