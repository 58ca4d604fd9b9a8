#ifndef LHULL_FREE_MONOID_HPP_
#define LHULL_FREE_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhull/common.hpp"

namespace lhull {

  // The free monoid on k <= 26 letters, written 'a', 'b', ...  Its
  // grading group is the free group F_k.
  class FreeMonoid {
   public:
    static constexpr BackendKind kind = BackendKind::free_monoid;

    using Element = std::string;

    // Reduced word in F_k: letter i is +(i+1), its inverse -(i+1).
    struct Group {
      std::vector<int> letters;

      bool operator==(Group const&) const = default;
      std::strong_ordering operator<=>(Group const& other) const;
    };

    // wS for a prefix w; S itself is the empty prefix.
    struct Ideal {
      IdealKind kind = IdealKind::full;
      std::string prefix;

      bool operator==(Ideal const&) const = default;
      std::strong_ordering operator<=>(Ideal const& other) const;
    };

    explicit FreeMonoid(std::size_t alphabet_size);

    std::size_t alphabet_size() const noexcept {
      return _k;
    }
    std::string name() const;

    Element identity() const {
      return {};
    }
    Element multiply(Element const& a, Element const& b) const;
    std::optional<Element> left_divide(Element const& s,
                                       Element const& t) const;
    bool units_trivial() const noexcept {
      return true;
    }
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
    std::size_t _k;
  };

}  // namespace lhull

#endif  // LHULL_FREE_MONOID_HPP_
