#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tasep/rational.hpp"
#include "tasep/report.hpp"

namespace tasep::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Grid used by `verify` when --grid is not given: {1, 3/4, 1/2, 1/3, 1/10}^2.
std::vector<RateParams> default_grid();

/// Parses "a:b,a:b,..." with rationals a = alpha, b = beta.
std::vector<RateParams> parse_grid(const std::string& text);

inline const std::vector<std::string> kCheckNames = {"counts",           "branching",  "bijection", "flux",
                                                     "marked-properties", "oracle", "tableaux"};

/// One verification suite; throws std::invalid_argument for unknown names.
std::vector<CheckReport> run_check(const std::string& name, int n, const std::vector<RateParams>& grid);

}  // namespace tasep::cli
