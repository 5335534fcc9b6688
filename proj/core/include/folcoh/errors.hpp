#pragma once

#include <stdexcept>
#include <string>

namespace folcoh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int l, int c)
      : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
        line(l), column(c) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct UnknownGenerator : Error { using Error::Error; };
struct DuplicateGenerator : Error { using Error::Error; };
struct NotComplexModel : Error { using Error::Error; };
struct UnknownModel : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct GcdViolation : Error { using Error::Error; };
struct MissingSecondDifferential : Error { using Error::Error; };
struct NoSymplecticForm : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct NotOrientable : Error { using Error::Error; };

}  // namespace folcoh
