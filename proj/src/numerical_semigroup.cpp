#include "lhull/numerical_semigroup.hpp"

#include <algorithm>

#include "lhull/errors.hpp"
#include "lhull/rational.hpp"

namespace lhull {

  NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
      : _gens(std::move(generators)) {
    if (_gens.empty()) {
      throw UsageError("numerical semigroup needs at least one generator");
    }
    std::sort(_gens.begin(), _gens.end());
    _gens.erase(std::unique(_gens.begin(), _gens.end()), _gens.end());
    if (_gens.front() < 2) {
      throw UsageError("numerical semigroup generators must be >= 2");
    }
    _d = 0;
    for (auto g : _gens) {
      _d = lhull::gcd(_d, g);
    }
    std::vector<std::int64_t> reduced;
    for (auto g : _gens) {
      reduced.push_back(g / _d);
    }
    // Dynamic programming over [0, n]; stop once `smallest` consecutive
    // members are found, since adding the smallest generator then covers
    // everything beyond.
    std::int64_t smallest = reduced.front();
    std::vector<bool> member{true};
    std::int64_t run = 1, n = 0;
    while (run < smallest) {
      ++n;
      bool in = false;
      for (auto g : reduced) {
        if (g <= n && member[n - g]) {
          in = true;
          break;
        }
      }
      member.push_back(in);
      run = in ? run + 1 : 0;
    }
    _conductor = n - smallest + 1;
    member.resize(_conductor);
    _member = std::move(member);
  }

  std::string NumericalSemigroup::name() const {
    std::string out = "NumericalSemigroup<";
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(_gens[i]);
    }
    return out + ">";
  }

  bool NumericalSemigroup::reduced_member(std::int64_t n) const {
    if (n < 0) {
      return false;
    }
    return n >= _conductor || _member[n];
  }

  bool NumericalSemigroup::is_member(std::int64_t n) const {
    return n >= 0 && n % _d == 0 && reduced_member(n / _d);
  }

  std::int64_t NumericalSemigroup::reduce(std::int64_t g) const {
    if (g % _d != 0) {
      throw UsageError(std::to_string(g) + " is not in the group "
                       + std::to_string(_d) + "Z");
    }
    return g / _d;
  }

  NumericalSemigroup::Element NumericalSemigroup::multiply(Element a,
                                                           Element b) const {
    return checked::add(a, b);
  }

  std::optional<NumericalSemigroup::Element>
  NumericalSemigroup::left_divide(Element s, Element t) const {
    auto r = checked::sub(t, s);
    if (!is_member(r)) {
      return std::nullopt;
    }
    return r;
  }

  std::vector<NumericalSemigroup::Element>
  NumericalSemigroup::enumerate_window(std::size_t bound) const {
    std::vector<Element> out;
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(bound); ++n) {
      if (is_member(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  NumericalSemigroup::Group NumericalSemigroup::group_multiply(Group g,
                                                               Group h) const {
    return checked::add(g, h);
  }

  NumericalSemigroup::Group NumericalSemigroup::group_inverse(Group g) const {
    return checked::neg(g);
  }

  std::optional<NumericalSemigroup::Element>
  NumericalSemigroup::from_group(Group g) const {
    if (!is_member(g)) {
      return std::nullopt;
    }
    return g;
  }

  bool NumericalSemigroup::reduced_contains(Ideal const& X,
                                            std::int64_t n) const {
    switch (X.kind) {
      case IdealKind::empty:
        return false;
      case IdealKind::full:
        return reduced_member(n);
      default:
        return n >= X.threshold
               || std::binary_search(X.below.begin(), X.below.end(), n);
    }
  }

  std::int64_t NumericalSemigroup::reduced_threshold(Ideal const& X) const {
    return X.kind == IdealKind::full ? _conductor : X.threshold;
  }

  // Builds the canonical ideal {n : pred(n)} given that pred holds for
  // every n >= bound.
  template <typename Pred>
  NumericalSemigroup::Ideal
  NumericalSemigroup::normalize(std::int64_t bound, Pred&& pred) const {
    bound = std::max<std::int64_t>(bound, 0);
    while (bound > 0 && pred(bound - 1)) {
      --bound;
    }
    Ideal out{IdealKind::proper, bound, {}};
    for (std::int64_t n = 0; n < bound; ++n) {
      if (pred(n)) {
        out.below.push_back(n);
      }
    }
    // Compare with S itself.
    if (bound == _conductor) {
      bool same = true;
      for (std::int64_t n = 0; n < bound && same; ++n) {
        same = (pred(n) == static_cast<bool>(_member[n]));
      }
      if (same) {
        return full();
      }
    }
    return out;
  }

  NumericalSemigroup::Ideal NumericalSemigroup::principal(Element s) const {
    if (!is_member(s)) {
      throw UsageError(std::to_string(s) + " is not in " + name());
    }
    return image(s, full());
  }

  NumericalSemigroup::Ideal NumericalSemigroup::image(Group g,
                                                      Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return empty();
    }
    std::int64_t h     = reduce(g);
    std::int64_t bound = checked::add(reduced_threshold(X), h);
    auto pred = [&](std::int64_t n) { return reduced_contains(X, n - h); };
    std::int64_t top = std::max(bound, _conductor);
    for (std::int64_t n = std::min<std::int64_t>(h, 0); n < top; ++n) {
      if (pred(n) && !reduced_member(n)) {
        throw PreconditionError("image of a right ideal leaves the semigroup");
      }
    }
    return normalize(bound, pred);
  }

  NumericalSemigroup::Ideal NumericalSemigroup::restrict(Ideal const& X,
                                                         Group g,
                                                         Ideal const& Y) const {
    if (X.kind == IdealKind::empty || Y.kind == IdealKind::empty) {
      return empty();
    }
    std::int64_t h = reduce(g);
    std::int64_t bound
        = std::max(reduced_threshold(X), checked::sub(reduced_threshold(Y), h));
    return normalize(bound, [&](std::int64_t n) {
      return reduced_contains(X, n) && reduced_contains(Y, n + h);
    });
  }

  NumericalSemigroup::Ideal NumericalSemigroup::intersect(Ideal const& X,
                                                          Ideal const& Y) const {
    return restrict(X, 0, Y);
  }

  bool NumericalSemigroup::contains(Ideal const& X, Element x) const {
    return x >= 0 && x % _d == 0 && reduced_contains(X, x / _d);
  }

  bool NumericalSemigroup::covers(std::span<Ideal const> parts,
                                  Ideal const& Y) const {
    if (Y.kind == IdealKind::empty) {
      return true;
    }
    if (parts.empty()) {
      return false;
    }
    std::int64_t bound = reduced_threshold(Y);
    for (auto const& X : parts) {
      if (X.kind != IdealKind::empty) {
        bound = std::max(bound, reduced_threshold(X));
      }
    }
    // Beyond `bound` every nonempty part contains everything.
    bool any_nonempty = std::any_of(parts.begin(), parts.end(), [](auto& X) {
      return X.kind != IdealKind::empty;
    });
    if (!any_nonempty) {
      return false;
    }
    for (std::int64_t n = 0; n < bound; ++n) {
      if (reduced_contains(Y, n)
          && std::none_of(parts.begin(), parts.end(), [&](Ideal const& X) {
               return reduced_contains(X, n);
             })) {
        return false;
      }
    }
    return true;
  }

  std::optional<NumericalSemigroup::Element>
  NumericalSemigroup::principal_generator(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return std::nullopt;
    }
    if (X.kind == IdealKind::full) {
      return 0;
    }
    std::int64_t m = X.below.empty() ? X.threshold : X.below.front();
    if (image(m * _d, full()) == X) {
      return m * _d;
    }
    return std::nullopt;
  }

  std::int64_t NumericalSemigroup::deficiency(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      throw PreconditionError("the empty ideal has infinite deficiency");
    }
    std::int64_t bound = std::max(reduced_threshold(X), _conductor);
    std::int64_t count = 0;
    for (std::int64_t n = 0; n < bound; ++n) {
      count += reduced_member(n) && !reduced_contains(X, n);
    }
    return count;
  }

  std::string NumericalSemigroup::format_element(Element s) const {
    return std::to_string(s);
  }

  std::string NumericalSemigroup::format_group(Group g) const {
    return std::to_string(g);
  }

  std::string NumericalSemigroup::format_ideal(Ideal const& X) const {
    switch (X.kind) {
      case IdealKind::full:
        return "S";
      case IdealKind::empty:
        return "empty";
      default:
        break;
    }
    std::string out = "{";
    for (auto n : X.below) {
      out += std::to_string(n * _d) + ",";
    }
    // The threshold and the next two members, then dots.
    for (std::int64_t k = 0; k < 3; ++k) {
      out += std::to_string((X.threshold + k) * _d) + ",";
    }
    return out + "...}";
  }

  NumericalSemigroup::Element
  NumericalSemigroup::parse_element(std::string_view text) const {
    auto n = parse_int(text);
    if (!is_member(n)) {
      throw UsageError(std::to_string(n) + " is not in " + name());
    }
    return n;
  }

  NumericalSemigroup::Group
  NumericalSemigroup::parse_group(std::string_view text) const {
    auto n = parse_int(text);
    reduce(n);
    return n;
  }

}  // namespace lhull
