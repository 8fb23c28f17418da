#include "kdunkl/report.hpp"

#include <algorithm>

namespace kdunkl {

bool CheckRecord::passed() const { return status == "member" || status == "verified" || status == "certified"; }

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j = {{"check", check},
                      {"params", params},
                      {"status", status},
                      {"certificate_size", certificate_size},
                      {"elapsed_ms", elapsed_ms}};
  if (!ring.empty()) j["ring"] = ring;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

CheckRecord CheckRecord::from_json(const nlohmann::json& j) {
  CheckRecord r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params");
  r.status = j.at("status").get<std::string>();
  r.certificate_size = j.at("certificate_size").get<std::size_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.ring = j.value("ring", "");
  r.detail = j.value("detail", "");
  return r;
}

void Report::append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

bool Report::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed(); });
}

bool Report::any_undecided() const {
  return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.undecided(); });
}

std::size_t Report::count_passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed(); }));
}

std::string Report::json_lines() const {
  std::string out;
  for (const auto& r : records) out += r.to_json().dump() + "\n";
  return out;
}

}  // namespace kdunkl
