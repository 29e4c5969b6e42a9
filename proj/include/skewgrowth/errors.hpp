#ifndef SKEWGROWTH_ERRORS_HPP_
#define SKEWGROWTH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewgrowth {

  // Root of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Presentation input.

  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class UnknownSymbol : public Error {
   public:
    using Error::Error;
  };

  class NonHomogeneousRelation : public Error {
   public:
    NonHomogeneousRelation(std::string const& what,
                           std::string lhs_degree,
                           std::string rhs_degree)
        : Error(what),
          _lhs(std::move(lhs_degree)),
          _rhs(std::move(rhs_degree)) {}

    std::string const& lhs_degree() const noexcept {
      return _lhs;
    }
    std::string const& rhs_degree() const noexcept {
      return _rhs;
    }

   private:
    std::string _lhs;
    std::string _rhs;
  };

  class NonPositiveDegree : public Error {
   public:
    using Error::Error;
  };

  // Built-in families.

  class UnknownBuiltin : public Error {
   public:
    using Error::Error;
  };

  class InvalidParams : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class MalformedDyadic : public Error {
   public:
    using Error::Error;
  };

  // Enumeration.

  class CutoffTooLarge : public Error {
   public:
    using Error::Error;
  };

  class EmptyAlphabet : public Error {
   public:
    using Error::Error;
  };

  // Divisibility poset and towers.

  class EmptyIndexSet : public Error {
   public:
    using Error::Error;
  };

  class InvalidGround : public Error {
   public:
    using Error::Error;
  };

  // Series arithmetic.

  class KeyKindMismatch : public Error {
   public:
    using Error::Error;
  };

  class CutoffMismatch : public Error {
   public:
    using Error::Error;
  };

  class NonUnitConstantTerm : public Error {
   public:
    using Error::Error;
  };

  class DomainError : public Error {
   public:
    using Error::Error;
  };

}  // namespace skewgrowth

#endif  // SKEWGROWTH_ERRORS_HPP_
