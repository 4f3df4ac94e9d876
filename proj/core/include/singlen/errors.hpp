#ifndef SINGLEN_ERRORS_HPP
#define SINGLEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlen {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIsolatedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotQuasiHomogeneousError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultipleOrNonIsolatedSingularities : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenericAgreementViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStabilizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

} // namespace singlen

#endif
