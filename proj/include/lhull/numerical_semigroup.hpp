#ifndef LHULL_NUMERICAL_SEMIGROUP_HPP_
#define LHULL_NUMERICAL_SEMIGROUP_HPP_

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

  // Additive submonoid of (Z+, +) generated by integers >= 2, graded by
  // d*Z where d is the gcd of the generators.
  //
  // Ideals are stored in units of d.  Every constructible right ideal is
  // then a cofinite subset of N: all n >= threshold, plus the listed
  // members below the threshold.  The threshold is kept minimal, so equal
  // sets have equal representations.
  class NumericalSemigroup {
   public:
    static constexpr BackendKind kind = BackendKind::numerical;

    using Element = std::int64_t;
    using Group   = std::int64_t;

    struct Ideal {
      IdealKind kind = IdealKind::full;
      std::int64_t threshold = 0;
      std::vector<std::int64_t> below;  // sorted, all < threshold

      bool operator==(Ideal const&) const = default;
      std::strong_ordering operator<=>(Ideal const&) const = default;
    };

    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    std::vector<std::int64_t> const& generators() const noexcept {
      return _gens;
    }
    std::int64_t gcd() const noexcept {
      return _d;
    }
    // Smallest c such that every multiple of d that is >= c lies in S.
    std::int64_t conductor() const noexcept {
      return _conductor * _d;
    }
    std::string name() const;

    bool is_member(std::int64_t n) const;

    Element identity() const {
      return 0;
    }
    Element multiply(Element a, Element b) const;
    std::optional<Element> left_divide(Element s, Element t) const;
    bool units_trivial() const noexcept {
      return true;
    }
    std::vector<Element> enumerate_window(std::size_t bound) const;
    std::vector<Element> default_generators() const {
      return _gens;
    }

    Group embed(Element s) const {
      return s;
    }
    Group group_identity() const {
      return 0;
    }
    Group group_multiply(Group g, Group h) const;
    Group group_inverse(Group g) const;
    std::optional<Element> from_group(Group g) const;

    Ideal full() const {
      return {IdealKind::full, 0, {}};
    }
    Ideal empty() const {
      return {IdealKind::empty, 0, {}};
    }
    Ideal principal(Element s) const;
    Ideal image(Group g, Ideal const& X) const;
    Ideal restrict(Ideal const& X, Group g, Ideal const& Y) const;
    Ideal intersect(Ideal const& X, Ideal const& Y) const;
    bool contains(Ideal const& X, Element x) const;
    bool covers(std::span<Ideal const> parts, Ideal const& Y) const;
    std::optional<Element> principal_generator(Ideal const& X) const;

    // Number of elements of S missing from X (finite for X nonempty).
    std::int64_t deficiency(Ideal const& X) const;

    std::string format_element(Element s) const;
    std::string format_group(Group g) const;
    std::string format_ideal(Ideal const& X) const;
    Element parse_element(std::string_view text) const;
    Group parse_group(std::string_view text) const;

   private:
    // All of the following work in units of d.
    bool reduced_member(std::int64_t n) const;
    bool reduced_contains(Ideal const& X, std::int64_t n) const;
    std::int64_t reduced_threshold(Ideal const& X) const;
    template <typename Pred>
    Ideal normalize(std::int64_t bound, Pred&& pred) const;
    std::int64_t reduce(std::int64_t g) const;

    std::vector<std::int64_t> _gens;
    std::int64_t _d;
    std::int64_t _conductor;
    std::vector<bool> _member;  // reduced membership below the conductor
  };

}  // namespace lhull

#endif  // LHULL_NUMERICAL_SEMIGROUP_HPP_
