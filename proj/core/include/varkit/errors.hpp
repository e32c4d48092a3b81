#pragma once

#include <stdexcept>
#include <string>

namespace varkit {

/// Base class for all varkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input files or option values failed validation.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed text input (variety files, value files, grid specs, configs).
class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A query reached outside the region where truncated data is trusted.
class TruncationError : public Error {
public:
  using Error::Error;
};

/// Two nodes of a multiplicity variety coincide.
class DuplicateNodeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A derivative order beyond what a function oracle provides was requested.
class OrderError : public Error {
public:
  using Error::Error;
};

/// A dense linear solve produced an unusable residual.
class IllConditionedError : public Error {
public:
  using Error::Error;
};

/// A quadrature node fell on (or numerically at) a singularity.
class SingularQuadratureError : public Error {
public:
  using Error::Error;
};

/// The subharmonicity search exhausted its doubling budget.
class NoAlphaFoundError : public Error {
public:
  NoAlphaFoundError(const std::string& msg, double worst_re, double worst_im,
                    double worst_value)
      : Error(msg), worst_re(worst_re), worst_im(worst_im), worst_value(worst_value) {}
  double worst_re = 0.0;
  double worst_im = 0.0;
  double worst_value = 0.0;
};

}  // namespace varkit
