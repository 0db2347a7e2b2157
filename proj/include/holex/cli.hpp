#pragma once

#include "holex/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace holex::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kViolations = 1,   // `check` found property violations
  kParseError = 2,   // bad flags, unreadable or malformed config
  kDomainError = 3,  // indefinite lattice, wrong rank for a criterion
  kNotCovered = 4,   // --strict and a verdict was not_covered
};

/// Executes one job and writes its report. Returns the exit status.
/// Throws DomainError / DimensionError for mathematical-domain failures.
int run(const JobConfig& config, std::ostream& out);

/// Full command-line entry point: flag parsing, config loading, dispatch and
/// mapping of failures onto exit statuses.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holex::cli
