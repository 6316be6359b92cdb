#pragma once

#include <stdexcept>
#include <string>

namespace copack {

// Thrown when an exact algorithm is asked to run past its dimension cap.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files; carries the offending 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Numerical failure (non-convergence, simplex stall). Message carries diagnostics.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace copack
