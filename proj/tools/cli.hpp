#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sring::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kViolated = 1,
  kUsage = 2,
  kZeroInClosure = 3,
  kSizeCap = 4,
  kComputation = 5,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics and human-readable tables to `err` unless redirected
/// by --output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a file's bytes; empty if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace sring::cli
