#include "binvert/report.hpp"

namespace binvert {

void CheckReport::compare(std::string operation, nlohmann::ordered_json parameters,
                          const ExactInt& expected, const ExactInt& actual) {
  cases_.push_back({std::move(operation), std::move(parameters), expected.str(), actual.str(),
                    expected == actual ? CaseStatus::Pass : CaseStatus::Fail});
}

void CheckReport::record_identity(const IdentityResult& result) {
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (auto p : result.parameters) params.push_back(p);
  cases_.push_back({"identity_" + result.name, std::move(params), result.rhs.str(),
                    result.lhs.str(), result.holds ? CaseStatus::Pass : CaseStatus::Fail});
}

void CheckReport::skip(std::string operation, nlohmann::ordered_json parameters,
                       std::string reason) {
  cases_.push_back({std::move(operation), std::move(parameters), "", std::move(reason),
                    CaseStatus::Skip});
}

void CheckReport::merge(const CheckReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

Summary CheckReport::summary() const {
  Summary s;
  for (const auto& c : cases_) {
    switch (c.status) {
      case CaseStatus::Pass: ++s.pass; break;
      case CaseStatus::Fail: ++s.fail; break;
      case CaseStatus::Skip: ++s.skip; break;
    }
  }
  return s;
}

std::string status_name(CaseStatus status) {
  switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skip: return "skip";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite_;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases_) {
    j["cases"].push_back({{"operation", c.operation},
                          {"parameters", c.parameters},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"status", status_name(c.status)}});
  }
  const Summary s = summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
  j["notes"] = notes_;
  return j;
}

}  // namespace binvert
