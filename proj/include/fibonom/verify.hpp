#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibonom/report.hpp"

namespace fibonom {

struct VerifyOptions {
  // Overrides each family's default parameter cap when set.
  std::optional<unsigned> max_n;
  unsigned jobs = 1;
};

// Suite tokens accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

// Runs one suite (or "all") and returns the normalized report. Families may
// execute in parallel when jobs > 1; the report order is independent of the
// execution order. Throws std::invalid_argument on an unknown suite name.
Report run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace fibonom
