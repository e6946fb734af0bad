#pragma once

#include <stdexcept>
#include <string>

namespace zetafree {

// Parse failure in an input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// A zero-sum bound was requested beyond the range the loaded data covers.
class CoverageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solved parameter violated one of its admissibility inequalities; the
// message names the failed inequality.
class ConstraintError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zetafree
