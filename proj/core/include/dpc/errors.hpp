#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpc {

/// Invalid parameter values or evaluation outside an operation's domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Instance on which a rate functional is undefined (0/0-style boundary cases).
class DegenerateInstanceError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Monte Carlo estimation failure, e.g. a singular empirical covariance.
class EstimationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A brute-force search would exceed its configured enumeration budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(std::uint64_t required_budget, std::uint64_t allowed_budget)
      : std::runtime_error("enumeration budget exceeded: search requires " +
                           std::to_string(required_budget) + " maps, budget allows " +
                           std::to_string(allowed_budget)),
        required(required_budget),
        allowed(allowed_budget) {}

  std::uint64_t required;
  std::uint64_t allowed;
};

}  // namespace dpc
