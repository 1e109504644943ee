#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace revpla {

/// Malformed input text (PLA source, parameter or calibration files).
/// `line()` is 1-based; 0 means the error is not tied to a single line.
class FormatError : public std::runtime_error {
  public:
    explicit FormatError(const std::string& message, unsigned line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    [[nodiscard]] unsigned line() const { return line_; }

  private:
    unsigned line_;
};

}  // namespace revpla
