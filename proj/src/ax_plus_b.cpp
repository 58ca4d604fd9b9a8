#include "lhull/ax_plus_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "lhull/errors.hpp"

namespace lhull {

  namespace {
    // Solves A k = B (mod M), M > 0.  Returns (k0, modulus) or nothing.
    std::optional<std::pair<std::int64_t, std::int64_t>>
    solve_congruence(std::int64_t A, std::int64_t B, std::int64_t M) {
      std::int64_t g = lhull::gcd(A, M);
      if (g == 0) {
        g = M;
      }
      if (mod(B, g) != 0) {
        return std::nullopt;
      }
      std::int64_t m = M / g;
      if (m == 1) {
        return std::make_pair(std::int64_t{0}, std::int64_t{1});
      }
      // Extended Euclid for the inverse of A/g modulo m.
      __int128 r0 = mod(A / g, m), r1 = m, s0 = 1, s1 = 0;
      while (r1 != 0) {
        __int128 q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
      }
      __int128 k = (static_cast<__int128>(mod(B / g, m)) * (s0 % m)) % m;
      if (k < 0) {
        k += m;
      }
      return std::make_pair(static_cast<std::int64_t>(k), m);
    }
  }  // namespace

  std::strong_ordering AxPlusB::Ideal::operator<=>(Ideal const& other) const {
    return std::tie(kind, a, b) <=> std::tie(other.kind, other.a, other.b);
  }

  AxPlusB::Element AxPlusB::multiply(Element const& x, Element const& y) const {
    return {checked::add(x.b, checked::mul(x.a, y.b)), checked::mul(x.a, y.a)};
  }

  std::optional<AxPlusB::Element> AxPlusB::left_divide(Element const& s,
                                                       Element const& t) const {
    // s r = t with r = (x, y): s.b + s.a x = t.b and s.a y = t.a.
    auto diff = checked::sub(t.b, s.b);
    if (t.a % s.a != 0 || diff % s.a != 0) {
      return std::nullopt;
    }
    return Element{diff / s.a, t.a / s.a};
  }

  std::vector<AxPlusB::Element>
  AxPlusB::enumerate_window(std::size_t bound) const {
    std::int64_t m = std::max<std::int64_t>(static_cast<std::int64_t>(bound), 1);
    std::vector<Element> out;
    for (std::int64_t b = -m; b <= m; ++b) {
      for (std::int64_t a = -m; a <= m; ++a) {
        if (a != 0) {
          out.push_back({b, a});
        }
      }
    }
    auto key = [](Element const& e) {
      return std::make_tuple(std::max(std::abs(e.b), std::abs(e.a)),
                             std::abs(e.a),
                             e.a < 0,
                             std::abs(e.b),
                             e.b < 0);
    };
    std::sort(out.begin(), out.end(), [&](Element const& x, Element const& y) {
      return key(x) < key(y);
    });
    return out;
  }

  std::vector<AxPlusB::Element> AxPlusB::default_generators() const {
    return {{1, 1}, {0, 2}, {0, 3}};
  }

  AxPlusB::Group AxPlusB::embed(Element const& s) const {
    return {Rational(s.b), Rational(s.a)};
  }

  AxPlusB::Group AxPlusB::group_multiply(Group const& g, Group const& h) const {
    return {g.shift + g.scale * h.shift, g.scale * h.scale};
  }

  AxPlusB::Group AxPlusB::group_inverse(Group const& g) const {
    Rational inv = g.scale.inverse();
    return {-(g.shift * inv), inv};
  }

  std::optional<AxPlusB::Element> AxPlusB::from_group(Group const& g) const {
    if (!g.shift.is_integer() || !g.scale.is_integer()) {
      return std::nullopt;
    }
    return Element{g.shift.num(), g.scale.num()};
  }

  AxPlusB::Ideal AxPlusB::make_ideal(std::int64_t b, std::int64_t a) const {
    a = checked::abs(a);
    b = mod(b, a);
    if (a == 1) {
      return full();
    }
    return {IdealKind::proper, b, a};
  }

  AxPlusB::Ideal AxPlusB::principal(Element const& s) const {
    return make_ideal(s.b, s.a);
  }

  AxPlusB::Ideal AxPlusB::image(Group const& g, Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return empty();
    }
    // g((c + eZ) x eZ^x) = (g.shift + g.scale c + g.scale e Z) x ...
    Rational c = g.shift + g.scale * Rational(X.b);
    Rational e = g.scale * Rational(X.a);
    if (!c.is_integer() || !e.is_integer()) {
      throw PreconditionError("image of a right ideal leaves the semigroup");
    }
    return make_ideal(c.num(), e.num());
  }

  AxPlusB::Ideal AxPlusB::restrict(Ideal const& X,
                                   Group const& g,
                                   Ideal const& Y) const {
    if (X.kind == IdealKind::empty || Y.kind == IdealKind::empty) {
      return empty();
    }
    // Points of X are (c + e k, e j), j != 0; their images under g are
    // (alpha + beta k, beta j) with alpha = shift + scale c, beta = scale e.
    Rational alpha = g.shift + g.scale * Rational(X.b);
    Rational beta  = g.scale * Rational(X.a);
    // beta j in aZ  <=>  j in T Z.
    std::int64_t T
        = checked::mul(beta.den(), Y.a / lhull::gcd(Y.a, beta.num()));
    // alpha + beta k - b in aZ, scaled by L to clear denominators.
    std::int64_t L = lcm(alpha.den(), beta.den());
    std::int64_t A = (beta * Rational(L)).num();
    std::int64_t B = ((Rational(Y.b) - alpha) * Rational(L)).num();
    auto sol       = solve_congruence(A, B, checked::mul(Y.a, L));
    if (!sol) {
      return empty();
    }
    auto [k0, period] = *sol;
    if (period != T) {
      throw InvariantViolation(
          "preimage in ax+b is not principal: x-period "
          + std::to_string(period) + " vs y-period " + std::to_string(T));
    }
    return make_ideal(checked::add(X.b, checked::mul(X.a, k0)),
                      checked::mul(X.a, T));
  }

  AxPlusB::Ideal AxPlusB::intersect(Ideal const& X, Ideal const& Y) const {
    return restrict(X, group_identity(), Y);
  }

  bool AxPlusB::contains(Ideal const& X, Element const& x) const {
    if (X.kind == IdealKind::empty) {
      return false;
    }
    return x.a % X.a == 0 && mod(checked::sub(x.b, X.b), X.a) == 0;
  }

  bool AxPlusB::covers(std::span<Ideal const> parts, Ideal const& Y) const {
    if (Y.kind == IdealKind::empty) {
      return true;
    }
    Element gen{Y.b, Y.a};
    return std::any_of(parts.begin(), parts.end(), [&](Ideal const& X) {
      return contains(X, gen);
    });
  }

  std::optional<AxPlusB::Element>
  AxPlusB::principal_generator(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return std::nullopt;
    }
    return Element{X.b, X.a};
  }

  std::string AxPlusB::format_element(Element const& s) const {
    return "(" + std::to_string(s.b) + "," + std::to_string(s.a) + ")";
  }

  std::string AxPlusB::format_group(Group const& g) const {
    return "(" + g.shift.to_string() + "," + g.scale.to_string() + ")";
  }

  std::string AxPlusB::format_ideal(Ideal const& X) const {
    switch (X.kind) {
      case IdealKind::full:
        return "S";
      case IdealKind::empty:
        return "empty";
      default:
        return "(" + std::to_string(X.b) + "," + std::to_string(X.a) + ")S";
    }
  }

  AxPlusB::Element AxPlusB::parse_element(std::string_view text) const {
    auto v = parse_int_tuple(text);
    if (v.size() != 2 || v[1] == 0) {
      throw UsageError("'" + std::string(text)
                       + "' is not an ax+b element (b,a) with a != 0");
    }
    return {v[0], v[1]};
  }

  AxPlusB::Group AxPlusB::parse_group(std::string_view text) const {
    std::string t = trim(text);
    auto comma    = t.find(',');
    if (t.size() < 5 || t.front() != '(' || t.back() != ')'
        || comma == std::string::npos) {
      throw UsageError("'" + t + "' is not a pair of rationals");
    }
    Rational shift = Rational::parse(trim(t.substr(1, comma - 1)));
    Rational scale
        = Rational::parse(trim(t.substr(comma + 1, t.size() - comma - 2)));
    if (scale == Rational(0)) {
      throw UsageError("'" + t + "' has zero scale");
    }
    return {shift, scale};
  }

}  // namespace lhull
