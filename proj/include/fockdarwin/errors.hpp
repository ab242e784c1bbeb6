#pragma once

#include <stdexcept>
#include <string>

namespace fockdarwin {

// Argument outside the mathematical domain of an operation.
using DomainError = std::domain_error;

// B = 0 and k = 0 together: no characteristic frequency.
class DegenerateSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degeneracy enumeration requested where every level is infinitely degenerate.
class InfiniteDegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state or identity does not fit in the truncated Fock space.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested analysis only exists for rational frequency ratios.
class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& what, double time)
      : std::runtime_error(what + " at t=" + std::to_string(time)), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace fockdarwin
