#pragma once

#include <stdexcept>
#include <string>

namespace specreg {

// Invalid or malformed input data (bad CSV, role violations, dimension
// mismatches). CLI maps these to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure inside an estimator (rank deficiency, degenerate
// denominators, optimizer breakdown). CLI maps these to exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specreg
