#pragma once

#include <stdexcept>
#include <string>

namespace chaincode {

// Raised when a computation would exceed a fixed enumeration cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a structural check that must hold (injectivity, integrality of a
// closed form, Frobenius closure) fails. Never swallowed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chaincode
