/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_ERRORS_H
#define IRSNOMA_ERRORS_H

#include <stdexcept>
#include <string>

namespace irsnoma
{

/// Bad configuration or parameter value. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Power split does not sum to one.
class SplitConstraintError : public ValidationError
{
  public:
    using ValidationError::ValidationError;
};

/// Power split violates a2 > a1.
class SplitOrderingError : public ValidationError
{
  public:
    using ValidationError::ValidationError;
};

/// Argument outside the mathematical domain of a formula. Maps to CLI exit code 3.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Vector lengths that must agree do not.
class DimensionError : public DomainError
{
  public:
    using DomainError::DomainError;
};

/// No user placement satisfies the requested distances.
class InfeasibleGeometryError : public DomainError
{
  public:
    using DomainError::DomainError;
};

/// File could not be read or written. Maps to CLI exit code 2.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace irsnoma

#endif // IRSNOMA_ERRORS_H
