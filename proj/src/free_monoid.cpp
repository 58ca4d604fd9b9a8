#include "lhull/free_monoid.hpp"

#include <algorithm>

#include "lhull/errors.hpp"

namespace lhull {

  namespace {
    bool is_prefix(std::string const& p, std::string const& w) {
      return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
    }

    template <typename T>
    std::strong_ordering shortlex(T const& x, T const& y) {
      if (auto c = x.size() <=> y.size(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          x.begin(), x.end(), y.begin(), y.end());
    }

    FreeMonoid::Ideal make_ideal(std::string prefix) {
      if (prefix.empty()) {
        return {IdealKind::full, {}};
      }
      return {IdealKind::proper, std::move(prefix)};
    }
  }  // namespace

  std::strong_ordering FreeMonoid::Group::operator<=>(
      Group const& other) const {
    return shortlex(letters, other.letters);
  }

  std::strong_ordering FreeMonoid::Ideal::operator<=>(
      Ideal const& other) const {
    if (auto c = kind <=> other.kind; c != 0) {
      return c;
    }
    return shortlex(prefix, other.prefix);
  }

  FreeMonoid::FreeMonoid(std::size_t alphabet_size) : _k(alphabet_size) {
    if (_k < 1 || _k > 26) {
      throw UsageError("free monoid alphabet size must be in [1, 26]");
    }
  }

  std::string FreeMonoid::name() const {
    return "FreeMonoid(" + std::to_string(_k) + ")";
  }

  FreeMonoid::Element FreeMonoid::multiply(Element const& a,
                                           Element const& b) const {
    return a + b;
  }

  std::optional<FreeMonoid::Element>
  FreeMonoid::left_divide(Element const& s, Element const& t) const {
    if (!is_prefix(s, t)) {
      return std::nullopt;
    }
    return t.substr(s.size());
  }

  std::vector<FreeMonoid::Element>
  FreeMonoid::enumerate_window(std::size_t bound) const {
    std::vector<Element> out{Element{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
      std::size_t level_end = out.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t c = 0; c < _k; ++c) {
          out.push_back(out[i] + static_cast<char>('a' + c));
        }
      }
      level_begin = level_end;
    }
    return out;
  }

  std::vector<FreeMonoid::Element> FreeMonoid::default_generators() const {
    std::vector<Element> out;
    for (std::size_t c = 0; c < _k; ++c) {
      out.emplace_back(1, static_cast<char>('a' + c));
    }
    return out;
  }

  FreeMonoid::Group FreeMonoid::embed(Element const& s) const {
    Group g;
    g.letters.reserve(s.size());
    for (char c : s) {
      g.letters.push_back(c - 'a' + 1);
    }
    return g;
  }

  FreeMonoid::Group FreeMonoid::group_multiply(Group const& g,
                                               Group const& h) const {
    Group out = g;
    for (int x : h.letters) {
      if (!out.letters.empty() && out.letters.back() == -x) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(x);
      }
    }
    return out;
  }

  FreeMonoid::Group FreeMonoid::group_inverse(Group const& g) const {
    Group out;
    out.letters.reserve(g.letters.size());
    for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it) {
      out.letters.push_back(-*it);
    }
    return out;
  }

  std::optional<FreeMonoid::Element>
  FreeMonoid::from_group(Group const& g) const {
    Element out;
    for (int x : g.letters) {
      if (x < 0) {
        return std::nullopt;
      }
      out.push_back(static_cast<char>('a' + x - 1));
    }
    return out;
  }

  FreeMonoid::Ideal FreeMonoid::principal(Element const& s) const {
    return make_ideal(s);
  }

  FreeMonoid::Ideal FreeMonoid::image(Group const& g, Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return empty();
    }
    auto h = from_group(group_multiply(g, embed(X.prefix)));
    if (!h) {
      throw PreconditionError("image of a right ideal leaves the monoid");
    }
    return make_ideal(*h);
  }

  FreeMonoid::Ideal FreeMonoid::restrict(Ideal const& X,
                                         Group const& g,
                                         Ideal const& Y) const {
    if (X.kind == IdealKind::empty || Y.kind == IdealKind::empty) {
      return empty();
    }
    // x = w x' and g w x' = h x' with h = p q^-1 reduced.  h x' is a
    // positive word only when x' = q x'', and then h x' = p x''.
    Group h = group_multiply(g, embed(X.prefix));
    auto neg = std::find_if(
        h.letters.begin(), h.letters.end(), [](int x) { return x < 0; });
    if (std::any_of(neg, h.letters.end(), [](int x) { return x > 0; })) {
      return empty();
    }
    std::string p, q;
    for (auto it = h.letters.begin(); it != neg; ++it) {
      p.push_back(static_cast<char>('a' + *it - 1));
    }
    for (auto it = h.letters.rbegin(); it.base() != neg; ++it) {
      q.push_back(static_cast<char>('a' - *it - 1));
    }
    std::string const& v = Y.prefix;
    std::string tail;
    if (is_prefix(v, p)) {
      tail = "";
    } else if (is_prefix(p, v)) {
      tail = v.substr(p.size());
    } else {
      return empty();
    }
    return make_ideal(X.prefix + q + tail);
  }

  FreeMonoid::Ideal FreeMonoid::intersect(Ideal const& X,
                                          Ideal const& Y) const {
    if (X.kind == IdealKind::empty || Y.kind == IdealKind::empty) {
      return empty();
    }
    if (is_prefix(X.prefix, Y.prefix)) {
      return Y;
    }
    if (is_prefix(Y.prefix, X.prefix)) {
      return X;
    }
    return empty();
  }

  bool FreeMonoid::contains(Ideal const& X, Element const& x) const {
    return X.kind != IdealKind::empty && is_prefix(X.prefix, x);
  }

  bool FreeMonoid::covers(std::span<Ideal const> parts, Ideal const& Y) const {
    if (Y.kind == IdealKind::empty) {
      return true;
    }
    // Y = wS is covered iff w itself is.
    return std::any_of(parts.begin(), parts.end(), [&](Ideal const& X) {
      return contains(X, Y.prefix);
    });
  }

  std::optional<FreeMonoid::Element>
  FreeMonoid::principal_generator(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return std::nullopt;
    }
    return X.prefix;
  }

  std::string FreeMonoid::format_element(Element const& s) const {
    return s.empty() ? "1" : s;
  }

  std::string FreeMonoid::format_group(Group const& g) const {
    if (g.letters.empty()) {
      return "1";
    }
    std::string out;
    for (int x : g.letters) {
      out.push_back(static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1));
    }
    return out;
  }

  std::string FreeMonoid::format_ideal(Ideal const& X) const {
    switch (X.kind) {
      case IdealKind::full:
        return "S";
      case IdealKind::empty:
        return "empty";
      default:
        return X.prefix + "S";
    }
  }

  FreeMonoid::Element FreeMonoid::parse_element(std::string_view text) const {
    std::string t = trim(text);
    if (t == "1") {
      return {};
    }
    for (char c : t) {
      if (c < 'a' || c >= static_cast<char>('a' + _k)) {
        throw UsageError("'" + t + "' is not a word over " + name());
      }
    }
    return t;
  }

  FreeMonoid::Group FreeMonoid::parse_group(std::string_view text) const {
    std::string t = trim(text);
    Group g;
    if (t == "1") {
      return g;
    }
    for (char c : t) {
      Group letter;
      if (c >= 'a' && c < static_cast<char>('a' + _k)) {
        letter.letters.push_back(c - 'a' + 1);
      } else if (c >= 'A' && c < static_cast<char>('A' + _k)) {
        letter.letters.push_back(-(c - 'A' + 1));
      } else {
        throw UsageError("'" + t + "' is not a free group word");
      }
      g = group_multiply(g, letter);
    }
    return g;
  }

}  // namespace lhull
