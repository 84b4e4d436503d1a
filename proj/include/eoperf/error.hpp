#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eoperf {

/// Input outside the mathematical domain of a model operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Contrast requested for a scene with no light from either surface.
class DegenerateSceneError : public DomainError {
public:
  using DomainError::DomainError;
};

class FitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scenario or data file rejected by the parser. Carries the 1-based line
/// (0 when the problem is file-wide, e.g. a missing key) and the key involved.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::string key, const std::string& what)
      : std::runtime_error(format(line, key, what)), line_{line}, key_{std::move(key)} {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
  static std::string format(std::size_t line, const std::string& key, const std::string& what) {
    std::string msg;
    if (line > 0) msg += "line " + std::to_string(line) + ": ";
    if (!key.empty()) msg += "'" + key + "': ";
    return msg + what;
  }

  std::size_t line_;
  std::string key_;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace eoperf
