#ifndef NCPARA_ERRORS_HPP
#define NCPARA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncpara {

// Command-line usage problems (bad flags, contradictory arguments). Exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or missing input data. Exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure (non-finite loss, overflow). Exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ncpara

#endif
