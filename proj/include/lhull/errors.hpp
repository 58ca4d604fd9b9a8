#ifndef LHULL_ERRORS_HPP_
#define LHULL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lhull {

  // Wrong argument shapes: mixing backends, malformed element text.
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // An operation was called outside its stated precondition.
  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // The operation is not defined for this backend (e.g. G(S) of a
  // semigroup that is not left reversible).
  class UnsupportedOperation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // A mathematical identity failed on concrete data.  The message carries
  // the witness.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string field, std::string const& what)
        : std::runtime_error("line " + std::to_string(line) + ", field '"
                             + field + "': " + what),
          _line(line),
          _field(std::move(field)) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::string const& field() const noexcept {
      return _field;
    }

   private:
    std::size_t _line;
    std::string _field;
  };

}  // namespace lhull

#endif  // LHULL_ERRORS_HPP_
