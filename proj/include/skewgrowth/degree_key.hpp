#ifndef SKEWGROWTH_DEGREE_KEY_HPP_
#define SKEWGROWTH_DEGREE_KEY_HPP_

#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace skewgrowth {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // "p/q", or "p" when the denominator is 1.
  inline std::string to_string(Rational const& r) {
    if (boost::multiprecision::denominator(r) == 1) {
      return boost::multiprecision::numerator(r).str();
    }
    return boost::multiprecision::numerator(r).str() + "/"
           + boost::multiprecision::denominator(r).str();
  }

  inline std::string to_string(Integer const& n) {
    return n.str();
  }

  namespace detail {
    inline bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    }

    inline std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto const b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    }
  }  // namespace detail

  // Parses INT, -INT, INT/INT or -INT/INT.  Returns nullopt on anything else
  // (including a zero denominator).
  inline std::optional<Rational> parse_rational(std::string_view text) {
    text      = detail::trim(text);
    bool neg  = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
      neg  = text.front() == '-';
      text = text.substr(1);
    }
    auto const slash = text.find('/');
    auto const num   = detail::trim(text.substr(0, slash));
    if (!detail::all_digits(num)) {
      return std::nullopt;
    }
    Integer n{std::string(num)};
    Integer d(1);
    if (slash != std::string_view::npos) {
      auto const den = detail::trim(text.substr(slash + 1));
      if (!detail::all_digits(den)) {
        return std::nullopt;
      }
      d = Integer(std::string(den));
      if (d == 0) {
        return std::nullopt;
      }
    }
    Rational r(n, d);
    return neg ? Rational(-r) : r;
  }

  // The two exponent domains a series may live in.  Rational keys are exact
  // additive degrees; multint keys are positive integers n standing for the
  // exponent log n, so that "addition" of keys is integer multiplication.
  enum class KeyKind { rational, multint };

  inline std::string_view to_string(KeyKind k) {
    return k == KeyKind::rational ? "rational" : "multint";
  }

  class DegreeKey {
   public:
    DegreeKey() = default;

    static DegreeKey rational(Rational value) {
      if (value < 0) {
        throw DomainError("rational degree keys must be >= 0, got "
                          + to_string(value));
      }
      return DegreeKey(KeyKind::rational, std::move(value));
    }

    static DegreeKey multint(Integer n) {
      if (n < 1) {
        throw DomainError("multint degree keys must be >= 1, got "
                          + n.str());
      }
      return DegreeKey(KeyKind::multint, Rational(n));
    }

    static DegreeKey zero(KeyKind kind) {
      return kind == KeyKind::rational ? DegreeKey(kind, Rational(0))
                                       : DegreeKey(kind, Rational(1));
    }

    KeyKind kind() const noexcept {
      return _kind;
    }

    // The rational value, or the integer n for a multint key.
    Rational const& value() const noexcept {
      return _value;
    }

    Integer integer() const {
      return boost::multiprecision::numerator(_value);
    }

    bool is_zero() const {
      return _kind == KeyKind::rational ? _value == 0 : _value == 1;
    }

    // Kind-appropriate sum: rationals add, multint keys multiply.
    DegreeKey operator+(DegreeKey const& other) const {
      same_kind(other);
      if (_kind == KeyKind::rational) {
        return DegreeKey(_kind, _value + other._value);
      }
      return DegreeKey(_kind, _value * other._value);
    }

    // The key e with other + e == *this, when it exists.
    std::optional<DegreeKey> minus(DegreeKey const& other) const {
      same_kind(other);
      if (_kind == KeyKind::rational) {
        if (other._value > _value) {
          return std::nullopt;
        }
        return DegreeKey(_kind, _value - other._value);
      }
      Integer const a = integer();
      Integer const b = other.integer();
      if (a % b != 0) {
        return std::nullopt;
      }
      return DegreeKey(_kind, Rational(a / b));
    }

    // k-fold sum of this key with itself.
    DegreeKey times(std::size_t k) const {
      DegreeKey r = zero(_kind);
      for (std::size_t i = 0; i < k; ++i) {
        r = r + *this;
      }
      return r;
    }

    friend bool operator==(DegreeKey const& a, DegreeKey const& b) {
      a.same_kind(b);
      return a._value == b._value;
    }

    friend std::strong_ordering operator<=>(DegreeKey const& a,
                                            DegreeKey const& b) {
      a.same_kind(b);
      if (a._value < b._value) {
        return std::strong_ordering::less;
      }
      if (b._value < a._value) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    std::string str() const {
      return to_string(_value);
    }

    // Real value of the exponent: the rational itself, or log n.
    double to_double() const {
      double const v = _value.convert_to<double>();
      return _kind == KeyKind::rational ? v : std::log(v);
    }

   private:
    DegreeKey(KeyKind kind, Rational value)
        : _kind(kind), _value(std::move(value)) {}

    void same_kind(DegreeKey const& other) const {
      if (_kind != other._kind) {
        throw KeyKindMismatch("cannot combine " + std::string(to_string(_kind))
                              + " and " + std::string(to_string(other._kind))
                              + " degree keys");
      }
    }

    KeyKind  _kind = KeyKind::rational;
    Rational _value{0};
  };

}  // namespace skewgrowth

#endif  // SKEWGROWTH_DEGREE_KEY_HPP_
