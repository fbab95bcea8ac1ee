#ifndef BMFRENET_ERRORS_HPP
#define BMFRENET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmfrenet {

/// Base for all parameter-domain failures; the CLI maps these to exit code 2.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// No phi-slant null curve exists with a = b = 0.
class DegenerateSlantError : public DomainError {
public:
  DegenerateSlantError()
      : DomainError("degenerate slant parameters: no phi-slant null curve "
                    "exists with a = b = 0") {}
};

/// Curve type outside the two supported families (a = 0 or b = 0).
class UnsupportedCurveTypeError : public DomainError {
public:
  explicit UnsupportedCurveTypeError(const std::string& what)
      : DomainError(what) {}
};

/// A bilinear form that must be invertible is numerically singular.
class NondegeneracyError : public DomainError {
public:
  explicit NondegeneracyError(const std::string& what) : DomainError(what) {}
};

/// Reparameterization with zero slope.
class InvalidReparamError : public DomainError {
public:
  InvalidReparamError()
      : DomainError("invalid reparameterization: slope c1 must be nonzero") {}
};

}  // namespace bmfrenet

#endif
