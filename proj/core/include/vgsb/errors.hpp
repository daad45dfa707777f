#ifndef VGSB_ERRORS_HPP_
#define VGSB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vgsb {

  // Base of every engine-level failure. The CLI maps subclasses onto exit
  // codes, so new error kinds should derive from one of these.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: DSL syntax, JSON schema, unknown names.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, int line = 0, int column = 0)
        : Error(line > 0 ? msg + " at line " + std::to_string(line)
                               + ", column " + std::to_string(column)
                         : msg),
          line_(line),
          column_(column) {}

    int line() const noexcept {
      return line_;
    }
    int column() const noexcept {
      return column_;
    }

   private:
    int line_;
    int column_;
  };

  class SemanticError : public Error {
   public:
    using Error::Error;
  };

  // Resource limits: rewriting fuel, enumeration window, truncation caps.
  class LimitError : public Error {
   public:
    using Error::Error;
  };

  class WindowTooSmall : public LimitError {
   public:
    using LimitError::LimitError;
  };

  class TruncationUnsound : public LimitError {
   public:
    using LimitError::LimitError;
  };

  // A mathematical property failed (axiom, orientation, grading).
  class ViolationError : public Error {
   public:
    using Error::Error;
  };

  class AxiomViolation : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

  class NovikovViolation : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

  class UnorientableRelation : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

  class UnorientableDifference : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

  class OrderViolation : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

  class NotGraded : public ViolationError {
   public:
    using ViolationError::ViolationError;
  };

}  // namespace vgsb

#endif  // VGSB_ERRORS_HPP_
