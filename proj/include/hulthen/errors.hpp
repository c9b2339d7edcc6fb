#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: parameter domain violations, preconditions.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gamma function evaluated at (or too close to) a nonpositive integer.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Integrator step too coarse to resolve the asymptotic plane wave.
class ResolutionError : public DomainError {
 public:
  explicit ResolutionError(const std::string& msg) : DomainError(msg) {}
};

// A numerical procedure failed even though the inputs were valid.
class ComputationError : public Error {
 public:
  explicit ComputationError(const std::string& msg) : Error(msg) {}
};

// Iteration budget exhausted before reaching tolerance.
class ConvergenceError : public ComputationError {
 public:
  explicit ConvergenceError(const std::string& msg) : ComputationError(msg) {}
};

// Matching system determinant vanished; signals a degenerate evaluation.
class SingularSystemError : public ComputationError {
 public:
  explicit SingularSystemError(const std::string& msg) : ComputationError(msg) {}
};

// Solution magnitude blew up during integration.
class UnboundedGrowthError : public ComputationError {
 public:
  explicit UnboundedGrowthError(const std::string& msg) : ComputationError(msg) {}
};

}  // namespace hulthen
