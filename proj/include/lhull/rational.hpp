#ifndef LHULL_RATIONAL_HPP_
#define LHULL_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lhull {

  // Checked 64-bit arithmetic; every operation throws std::overflow_error
  // instead of wrapping.
  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b);
    std::int64_t sub(std::int64_t a, std::int64_t b);
    std::int64_t mul(std::int64_t a, std::int64_t b);
    std::int64_t neg(std::int64_t a);
    std::int64_t abs(std::int64_t a);
  }  // namespace checked

  std::int64_t gcd(std::int64_t a, std::int64_t b);
  // Positive least common multiple of two nonzero integers.
  std::int64_t lcm(std::int64_t a, std::int64_t b);
  // Floor-style remainder in [0, |m|).
  std::int64_t mod(std::int64_t a, std::int64_t m);

  // Exact rational number in lowest terms with positive denominator.
  class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t n);  // NOLINT(runtime/explicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept {
      return _num;
    }
    std::int64_t den() const noexcept {
      return _den;
    }
    bool is_integer() const noexcept {
      return _den == 1;
    }

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(Rational const& x, Rational const& y);
    friend Rational operator-(Rational const& x, Rational const& y);
    friend Rational operator*(Rational const& x, Rational const& y);
    friend Rational operator/(Rational const& x, Rational const& y);

    Rational& operator+=(Rational const& y) {
      return *this = *this + y;
    }
    Rational& operator*=(Rational const& y) {
      return *this = *this * y;
    }

    bool operator==(Rational const&) const = default;
    std::strong_ordering operator<=>(Rational const& y) const;

    std::string to_string() const;
    static Rational parse(std::string const& text);

   private:
    std::int64_t _num = 0;
    std::int64_t _den = 1;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& x);

}  // namespace lhull

#endif  // LHULL_RATIONAL_HPP_
