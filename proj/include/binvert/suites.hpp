#pragma once

#include <optional>
#include <string>

#include "binvert/report.hpp"

namespace binvert {

enum class Suite { ClosedForms, Identities, Words, Paths, Lifts, All };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct SuiteBounds {
  std::optional<int> n_max;  // per-suite default when unset
};

int default_n_max(Suite suite);
// Largest n_max a suite accepts before enumeration or table sizes run away.
int n_max_cap(Suite suite);

// Runs the selected suite. Throws std::invalid_argument when the bound is
// below 1 or above the suite's cap.
CheckReport run_suite(Suite suite, const SuiteBounds& bounds);

}  // namespace binvert
