#ifndef NPST_ERRORS_HPP_
#define NPST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace npst {

// Error taxonomy shared by the library, the C API and the CLI.
// The C API / CLI map these onto status codes: usage -> 2,
// data and I/O -> 3, numeric/degenerate -> 4.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad request: unknown test, malformed or out-of-range parameter,
// alternative not defined by the test.
class usage_error : public error {
 public:
  using error::error;
};

// Malformed or inadmissible input data (parse errors, dimension
// mismatches, wrong symbol counts, non-finite values).
class data_error : public error {
 public:
  using error::error;
};

// Filesystem problems (missing file, unwritable path).
class io_error : public error {
 public:
  using error::error;
};

// Degenerate or numerically unusable configurations (all values tied,
// zero variance, unattainable confidence level, cdf overflow).
class numeric_error : public error {
 public:
  using error::error;
};

}  // namespace npst

#endif  // NPST_ERRORS_HPP_
