#ifndef LHULL_AX_PLUS_B_HPP_
#define LHULL_AX_PLUS_B_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhull/common.hpp"
#include "lhull/rational.hpp"

namespace lhull {

  // The ax+b semigroup Z x Z^x with (b,a)(d,c) = (b+ad, ac), a != 0,
  // graded by the rational affine group Q x| Q^x.  Units (b,+-1) are
  // allowed, so the algebraic preorder is not antisymmetric.
  //
  // Z is a principal ideal domain, so every nonempty constructible right
  // ideal is principal: (b+aZ) x aZ^x, stored with a >= 1, 0 <= b < a.
  class AxPlusB {
   public:
    static constexpr BackendKind kind = BackendKind::ax_plus_b;

    struct Element {
      std::int64_t b = 0;
      std::int64_t a = 1;

      bool operator==(Element const&) const = default;
      std::strong_ordering operator<=>(Element const&) const = default;
    };

    struct Group {
      Rational shift{0};
      Rational scale{1};

      bool operator==(Group const&) const = default;
      std::strong_ordering operator<=>(Group const&) const = default;
    };

    struct Ideal {
      IdealKind kind = IdealKind::full;
      std::int64_t b = 0;
      std::int64_t a = 1;

      bool operator==(Ideal const&) const = default;
      std::strong_ordering operator<=>(Ideal const& other) const;
    };

    std::string name() const {
      return "AxPlusB(Z)";
    }

    Element identity() const {
      return {0, 1};
    }
    Element multiply(Element const& x, Element const& y) const;
    std::optional<Element> left_divide(Element const& s,
                                       Element const& t) const;
    bool units_trivial() const noexcept {
      return false;
    }
    // Pairs with max(|b|, |a|) <= max(bound, 1), ordered by that size, then
    // |a|, sign of a, |b|, sign of b.  The identity comes first.
    std::vector<Element> enumerate_window(std::size_t bound) const;
    std::vector<Element> default_generators() const;

    Group embed(Element const& s) const;
    Group group_identity() const {
      return {};
    }
    Group group_multiply(Group const& g, Group const& h) const;
    Group group_inverse(Group const& g) const;
    std::optional<Element> from_group(Group const& g) const;

    Ideal full() const {
      return {};
    }
    Ideal empty() const {
      return {IdealKind::empty, 0, 1};
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
    Ideal make_ideal(std::int64_t b, std::int64_t a) const;
  };

}  // namespace lhull

#endif  // LHULL_AX_PLUS_B_HPP_
