#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "binvert/closed_forms.hpp"
#include "binvert/kernel.hpp"

namespace binvert {

inline constexpr int kReportSchemaVersion = 1;

enum class CaseStatus { Pass, Fail, Skip };

struct CheckCase {
  std::string operation;
  nlohmann::ordered_json parameters;
  std::string expected;
  std::string actual;
  CaseStatus status = CaseStatus::Pass;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

// Outcome of a verification run. The summary is always recomputed from the
// case list.
class CheckReport {
 public:
  explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckCase>& cases() const { return cases_; }
  const std::vector<std::string>& notes() const { return notes_; }

  // Records expected vs actual; the case passes iff they are equal.
  void compare(std::string operation, nlohmann::ordered_json parameters, const ExactInt& expected,
               const ExactInt& actual);
  void record_identity(const IdentityResult& result);
  void add(CheckCase c) { cases_.push_back(std::move(c)); }
  void skip(std::string operation, nlohmann::ordered_json parameters, std::string reason);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  // Appends another report's cases and notes.
  void merge(const CheckReport& other);

  Summary summary() const;
  bool passed() const { return summary().fail == 0; }
  // 0 when nothing failed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }

  nlohmann::ordered_json to_json() const;

 private:
  std::string suite_;
  std::vector<CheckCase> cases_;
  std::vector<std::string> notes_;
};

std::string status_name(CaseStatus status);

}  // namespace binvert
