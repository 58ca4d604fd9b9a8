#include "lhull/positive_cone.hpp"

#include <algorithm>
#include <numeric>

#include "lhull/errors.hpp"
#include "lhull/rational.hpp"

namespace lhull {

  namespace {
    std::int64_t total(std::vector<std::int64_t> const& v) {
      std::int64_t s = 0;
      for (auto x : v) {
        s = checked::add(s, x);
      }
      return s;
    }
  }  // namespace

  std::strong_ordering PositiveCone::Ideal::operator<=>(
      Ideal const& other) const {
    if (auto c = kind <=> other.kind; c != 0) {
      return c;
    }
    if (auto c = total(corner) <=> total(other.corner); c != 0) {
      return c;
    }
    return corner <=> other.corner;
  }

  PositiveCone::PositiveCone(std::size_t dimension)
      : _n(dimension), _zero(dimension, 0) {
    if (_n < 1) {
      throw UsageError("positive cone dimension must be at least 1");
    }
  }

  std::string PositiveCone::name() const {
    return "PositiveCone(" + std::to_string(_n) + ")";
  }

  PositiveCone::Element PositiveCone::multiply(Element const& a,
                                               Element const& b) const {
    Element out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      out[i] = checked::add(a[i], b[i]);
    }
    return out;
  }

  std::optional<PositiveCone::Element>
  PositiveCone::left_divide(Element const& s, Element const& t) const {
    Element out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      if (t[i] < s[i]) {
        return std::nullopt;
      }
      out[i] = t[i] - s[i];
    }
    return out;
  }

  std::vector<PositiveCone::Element>
  PositiveCone::enumerate_window(std::size_t bound) const {
    std::vector<Element> out;
    for (std::size_t sum = 0; sum <= bound; ++sum) {
      // Lexicographically increasing compositions of `sum` into n parts.
      Element v(_n, 0);
      v.back() = static_cast<std::int64_t>(sum);
      while (true) {
        out.push_back(v);
        // Next composition in lexicographic order: move one unit from the
        // rightmost nonzero entry (excluding position 0) to its left
        // neighbour, and sweep the remainder to the end.
        std::size_t j = _n;
        for (std::size_t i = _n; i-- > 1;) {
          if (v[i] > 0) {
            j = i;
            break;
          }
        }
        if (j == _n) {
          break;
        }
        std::int64_t rest = v[j] - 1;
        for (std::size_t i = j; i < _n; ++i) {
          rest += (i == j ? 0 : v[i]);
          v[i] = 0;
        }
        v[j - 1] += 1;
        v.back() = rest;
      }
    }
    return out;
  }

  std::vector<PositiveCone::Element> PositiveCone::default_generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < _n; ++i) {
      Element e(_n, 0);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }

  PositiveCone::Group PositiveCone::group_multiply(Group const& g,
                                                   Group const& h) const {
    return multiply(g, h);
  }

  PositiveCone::Group PositiveCone::group_inverse(Group const& g) const {
    Group out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      out[i] = checked::neg(g[i]);
    }
    return out;
  }

  std::optional<PositiveCone::Element>
  PositiveCone::from_group(Group const& g) const {
    if (std::any_of(g.begin(), g.end(), [](auto x) { return x < 0; })) {
      return std::nullopt;
    }
    return g;
  }

  PositiveCone::Ideal PositiveCone::make_ideal(
      std::vector<std::int64_t> corner) const {
    if (corner == _zero) {
      return full();
    }
    return {IdealKind::proper, std::move(corner)};
  }

  std::vector<std::int64_t> const&
  PositiveCone::corner_of(Ideal const& X) const {
    return X.kind == IdealKind::full ? _zero : X.corner;
  }

  PositiveCone::Ideal PositiveCone::full() const {
    return {IdealKind::full, {}};
  }

  PositiveCone::Ideal PositiveCone::principal(Element const& s) const {
    return make_ideal(s);
  }

  PositiveCone::Ideal PositiveCone::image(Group const& g,
                                          Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return empty();
    }
    auto c = from_group(multiply(g, corner_of(X)));
    if (!c) {
      throw PreconditionError("image of a right ideal leaves the cone");
    }
    return make_ideal(*c);
  }

  PositiveCone::Ideal PositiveCone::restrict(Ideal const& X,
                                             Group const& g,
                                             Ideal const& Y) const {
    if (X.kind == IdealKind::empty || Y.kind == IdealKind::empty) {
      return empty();
    }
    // {x >= p : g + x >= q} = max(p, q - g) + cone
    auto const& p = corner_of(X);
    auto const& q = corner_of(Y);
    std::vector<std::int64_t> c(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      c[i] = std::max(p[i], checked::sub(q[i], g[i]));
    }
    return make_ideal(std::move(c));
  }

  PositiveCone::Ideal PositiveCone::intersect(Ideal const& X,
                                              Ideal const& Y) const {
    return restrict(X, group_identity(), Y);
  }

  bool PositiveCone::contains(Ideal const& X, Element const& x) const {
    if (X.kind == IdealKind::empty) {
      return false;
    }
    auto const& p = corner_of(X);
    for (std::size_t i = 0; i < _n; ++i) {
      if (x[i] < p[i]) {
        return false;
      }
    }
    return true;
  }

  bool PositiveCone::covers(std::span<Ideal const> parts,
                            Ideal const& Y) const {
    if (Y.kind == IdealKind::empty) {
      return true;
    }
    // Y = p + cone is covered iff its corner p is.
    return std::any_of(parts.begin(), parts.end(), [&](Ideal const& X) {
      return contains(X, corner_of(Y));
    });
  }

  std::optional<PositiveCone::Element>
  PositiveCone::principal_generator(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return std::nullopt;
    }
    return corner_of(X);
  }

  std::string PositiveCone::format_element(Element const& s) const {
    return format_int_tuple(s);
  }

  std::string PositiveCone::format_group(Group const& g) const {
    return format_int_tuple(g);
  }

  std::string PositiveCone::format_ideal(Ideal const& X) const {
    switch (X.kind) {
      case IdealKind::full:
        return "S";
      case IdealKind::empty:
        return "empty";
      default:
        return format_int_tuple(X.corner) + "+S";
    }
  }

  PositiveCone::Element
  PositiveCone::parse_element(std::string_view text) const {
    auto v = parse_group(text);
    if (!from_group(v)) {
      throw UsageError("'" + std::string(text) + "' has a negative entry");
    }
    return v;
  }

  PositiveCone::Group PositiveCone::parse_group(std::string_view text) const {
    auto v = parse_int_tuple(text);
    if (v.size() != _n) {
      throw UsageError("'" + std::string(text) + "' does not have "
                       + std::to_string(_n) + " coordinates");
    }
    return v;
  }

}  // namespace lhull
