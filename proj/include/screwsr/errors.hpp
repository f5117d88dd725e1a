#pragma once

#include <stdexcept>
#include <string>

namespace screwsr {

/// Shape or field mismatch between operands.
struct DimensionError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical domain was violated (bad group id,
/// excluded pitch, non-orthogonal inputs, non-member element, ...).
struct DomainError : std::domain_error
{
  using std::domain_error::domain_error;
};

/// Iterative kernel did not converge, or a matrix was numerically singular.
struct NumericError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Input exceeds a fixed size limit of a kernel.
struct CapacityError : std::length_error
{
  using std::length_error::length_error;
};

}  // namespace screwsr
