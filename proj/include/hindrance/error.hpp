#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hindrance {

/// Domain error carrying a machine-readable code such as "NotWasteful".
///
/// Codes are stable identifiers; the CLI prints them as `error:<code>:<detail>`.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct Violation {
  std::string code;
  std::string detail;
};

/// Raised by web and linkage validation; holds every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(violations.empty() ? "Invalid" : violations.front().code,
              violations.empty() ? "invalid input" : violations.front().detail),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class SearchBudgetExceeded : public Error {
 public:
  explicit SearchBudgetExceeded(const std::string& detail)
      : Error("SearchBudgetExceeded", detail) {}
};

}  // namespace hindrance
