#include "lhull/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "lhull/errors.hpp"

namespace lhull {

  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
      }
      return r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
      }
      return r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
      }
      return r;
    }

    std::int64_t neg(std::int64_t a) {
      return sub(0, a);
    }

    std::int64_t abs(std::int64_t a) {
      return a < 0 ? neg(a) : a;
    }
  }  // namespace checked

  std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = checked::abs(a);
    b = checked::abs(b);
    while (b != 0) {
      std::int64_t t = a % b;
      a              = b;
      b              = t;
    }
    return a;
  }

  std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
      throw PreconditionError("lcm of zero is undefined here");
    }
    a = checked::abs(a);
    b = checked::abs(b);
    return checked::mul(a / gcd(a, b), b);
  }

  std::int64_t mod(std::int64_t a, std::int64_t m) {
    if (m == 0) {
      throw PreconditionError("modulus must be nonzero");
    }
    m             = checked::abs(m);
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  Rational::Rational(std::int64_t n) : _num(n), _den(1) {}

  Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    if (d < 0) {
      n = checked::neg(n);
      d = checked::neg(d);
    }
    std::int64_t g = gcd(n, d);
    if (g == 0) {
      g = 1;
    }
    _num = n / g;
    _den = d / g;
  }

  Rational Rational::operator-() const {
    return Rational(checked::neg(_num), _den);
  }

  Rational Rational::inverse() const {
    if (_num == 0) {
      throw std::domain_error("inverse of zero");
    }
    return Rational(_den, _num);
  }

  Rational operator+(Rational const& x, Rational const& y) {
    std::int64_t g = gcd(x._den, y._den);
    std::int64_t n = checked::add(checked::mul(x._num, y._den / g),
                                  checked::mul(y._num, x._den / g));
    return Rational(n, checked::mul(x._den / g, y._den));
  }

  Rational operator-(Rational const& x, Rational const& y) {
    return x + (-y);
  }

  Rational operator*(Rational const& x, Rational const& y) {
    std::int64_t g1 = gcd(x._num, y._den);
    std::int64_t g2 = gcd(y._num, x._den);
    g1              = g1 == 0 ? 1 : g1;
    g2              = g2 == 0 ? 1 : g2;
    return Rational(checked::mul(x._num / g1, y._num / g2),
                    checked::mul(x._den / g2, y._den / g1));
  }

  Rational operator/(Rational const& x, Rational const& y) {
    return x * y.inverse();
  }

  std::strong_ordering Rational::operator<=>(Rational const& y) const {
    // Compare x.num * y.den with y.num * x.den using 128-bit products.
    __int128 lhs = static_cast<__int128>(_num) * y._den;
    __int128 rhs = static_cast<__int128>(y._num) * _den;
    if (lhs < rhs) {
      return std::strong_ordering::less;
    }
    if (lhs > rhs) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string Rational::to_string() const {
    if (_den == 1) {
      return std::to_string(_num);
    }
    return std::to_string(_num) + "/" + std::to_string(_den);
  }

  Rational Rational::parse(std::string const& text) {
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        std::int64_t n = std::stoll(text, &used);
        if (used != text.size()) {
          throw UsageError("trailing characters");
        }
        return Rational(n);
      }
      std::string nt = text.substr(0, slash), dt = text.substr(slash + 1);
      std::int64_t n = std::stoll(nt, &used);
      if (used != nt.size()) {
        throw UsageError("trailing characters");
      }
      std::int64_t d = std::stoll(dt, &used);
      if (used != dt.size()) {
        throw UsageError("trailing characters");
      }
      return Rational(n, d);
    } catch (std::logic_error const&) {
      throw UsageError("cannot parse rational '" + text + "'");
    }
  }

  std::ostream& operator<<(std::ostream& os, Rational const& x) {
    return os << x.to_string();
  }

}  // namespace lhull
