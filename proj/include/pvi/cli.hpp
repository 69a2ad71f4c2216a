// Batch command line: coeffs, zeros, poles, verify, picard, qc, chazy, exclusion.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvi::cli {

/// Exit codes: 0 success, 1 numerical failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvi::cli
