#ifndef LHULL_POSITIVE_CONE_HPP_
#define LHULL_POSITIVE_CONE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhull/common.hpp"

namespace lhull {

  // (Z+)^n under addition, graded by Z^n.  Every constructible right ideal
  // is a translated cone p + (Z+)^n.
  class PositiveCone {
   public:
    static constexpr BackendKind kind = BackendKind::positive_cone;

    using Element = std::vector<std::int64_t>;
    using Group   = std::vector<std::int64_t>;

    struct Ideal {
      IdealKind kind = IdealKind::full;
      std::vector<std::int64_t> corner;

      bool operator==(Ideal const&) const = default;
      std::strong_ordering operator<=>(Ideal const& other) const;
    };

    explicit PositiveCone(std::size_t dimension);

    std::size_t dimension() const noexcept {
      return _n;
    }
    std::string name() const;

    Element identity() const {
      return Element(_n, 0);
    }
    Element multiply(Element const& a, Element const& b) const;
    std::optional<Element> left_divide(Element const& s,
                                       Element const& t) const;
    bool units_trivial() const noexcept {
      return true;
    }
    // Graded: by coordinate sum, then lexicographic.
    std::vector<Element> enumerate_window(std::size_t bound) const;
    std::vector<Element> default_generators() const;

    Group embed(Element const& s) const {
      return s;
    }
    Group group_identity() const {
      return Group(_n, 0);
    }
    Group group_multiply(Group const& g, Group const& h) const;
    Group group_inverse(Group const& g) const;
    std::optional<Element> from_group(Group const& g) const;

    Ideal full() const;
    Ideal empty() const {
      return {IdealKind::empty, {}};
    }
    Ideal principal(Element const& s) const;
    Ideal image(Group const& g, Ideal const& X) const;
    Ideal restrict(Ideal const& X, Group const& g, Ideal const& Y) const;
    Ideal intersect(Ideal const& X, Ideal const& Y) const;
    bool contains(Ideal const& X, Element const& x) const;
    bool covers(std::span<Ideal const> parts, Ideal const& Y) const;
    std::optional<Element> principal_generator(Ideal const& X) const;

    std::string format_element(Element const& s) const;
    std::string format_group(Group const& g) const;
    std::string format_ideal(Ideal const& X) const;
    Element parse_element(std::string_view text) const;
    Group parse_group(std::string_view text) const;

   private:
    Ideal make_ideal(std::vector<std::int64_t> corner) const;
    std::vector<std::int64_t> const& corner_of(Ideal const& X) const;

    std::size_t _n;
    std::vector<std::int64_t> _zero;
  };

}  // namespace lhull

#endif  // LHULL_POSITIVE_CONE_HPP_
