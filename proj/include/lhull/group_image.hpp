#ifndef LHULL_GROUP_IMAGE_HPP_
#define LHULL_GROUP_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/ideals.hpp"
#include "lhull/rational.hpp"
#include "lhull/window.hpp"

namespace lhull {

  struct GroupDescriptor {
    enum class Kind { free_group, integers, integer_lattice, rational_affine, finite_group };
    Kind kind            = Kind::integers;
    std::size_t rank     = 1;  // k for FreeGroup, n for Z^n
    std::int64_t step    = 1;  // d for dZ
    std::size_t order    = 0;  // FiniteGroup

    std::string to_string() const;
    bool operator==(GroupDescriptor const&) const = default;
  };

  template <Backend B>
  struct ReversibilityVerdict {
    Outcome outcome = Outcome::holds;
    std::string tag;
    std::optional<typename B::Element> s, t;
  };

  // Any two principal right ideals meet.  Proof tags where the argument is
  // structural; otherwise a search over the window of the given bound.
  template <Backend B>
  ReversibilityVerdict<B> is_left_reversible(B const& b, std::size_t bound = 3) {
    if constexpr (B::kind == BackendKind::positive_cone) {
      return {Outcome::holds, "coordinatewise max is a common multiple", {}, {}};
    } else if constexpr (B::kind == BackendKind::numerical) {
      return {Outcome::holds, "commutative: st lies in sS and tS", {}, {}};
    } else if constexpr (B::kind == BackendKind::finite_table) {
      return {Outcome::holds, "group: every principal right ideal is S", {}, {}};
    } else {
      if constexpr (B::kind == BackendKind::free_monoid) {
        if (b.alphabet_size() == 1) {
          return {Outcome::holds, "one letter: principal ideals form a chain", {}, {}};
        }
      }
      auto W = b.enumerate_window(bound);
      for (std::size_t i = 0; i < W.size(); ++i) {
        for (std::size_t j = i + 1; j < W.size(); ++j) {
          if (is_empty<B>(b.intersect(b.principal(W[i]), b.principal(W[j])))) {
            return {Outcome::fails, "disjoint principal right ideals", W[i], W[j]};
          }
        }
      }
      return {Outcome::inconclusive,
              "no disjoint pair in window " + std::to_string(bound),
              {},
              {}};
    }
  }

  template <Backend B>
  struct ThicknessVerdict {
    Outcome outcome = Outcome::holds;
    typename B::Ideal meet{};  // S meet g_1 S meet ... meet g_n S
  };

  // S meet g_1 S meet ... meet g_n S is nonempty.  Each gS meet S is computed
  // exactly as g (g^{-1}S meet S) = image(g, restrict(S, g, S)).
  template <Backend B>
  ThicknessVerdict<B> left_thick_check(B const& b,
                                       std::span<typename B::Group const> gs) {
    auto X = b.full();
    for (auto const& g : gs) {
      auto gS = b.image(g, b.restrict(b.full(), g, b.full()));
      X       = b.intersect(X, gS);
    }
    return {is_empty<B>(X) ? Outcome::fails : Outcome::holds, X};
  }

  template <Backend B>
  std::string reversibility_witness(B const& b, ReversibilityVerdict<B> const& v) {
    if (v.s && v.t) {
      return "(" + b.format_element(*v.s) + ", " + b.format_element(*v.t) + ")";
    }
    return v.tag;
  }

  template <Backend B>
  GroupDescriptor group_of_S(B const& b) {
    auto v = is_left_reversible(b);
    if (v.outcome != Outcome::holds) {
      throw UnsupportedOperation(b.name() + " is not left reversible, witness "
                                 + reversibility_witness(b, v));
    }
    GroupDescriptor d;
    if constexpr (B::kind == BackendKind::positive_cone) {
      d.kind = GroupDescriptor::Kind::integers;
      d.rank = b.dimension();
    } else if constexpr (B::kind == BackendKind::numerical) {
      d.kind = GroupDescriptor::Kind::integer_lattice;
      d.step = b.gcd();
    } else if constexpr (B::kind == BackendKind::finite_table) {
      d.kind  = GroupDescriptor::Kind::finite_group;
      d.order = b.order();
    } else if constexpr (B::kind == BackendKind::free_monoid) {
      d.kind = GroupDescriptor::Kind::free_group;
      d.rank = b.alphabet_size();
    } else {
      d.kind = GroupDescriptor::Kind::rational_affine;
    }
    return d;
  }

  template <Backend B>
  typename B::Group gamma(B const& b, typename B::Element const& s) {
    if (is_left_reversible(b).outcome != Outcome::holds) {
      throw UnsupportedOperation(b.name() + " is not left reversible");
    }
    return b.embed(s);
  }

  // Some element of a nonempty ideal.
  template <Backend B>
  typename B::Element some_member(B const& b, typename B::Ideal const& X) {
    if (is_empty<B>(X)) {
      throw PreconditionError("the empty ideal has no members");
    }
    if constexpr (B::kind == BackendKind::numerical) {
      if (X.kind == IdealKind::full) {
        return 0;
      }
      return (X.below.empty() ? X.threshold : X.below.front()) * b.gcd();
    } else {
      return *b.principal_generator(X);
    }
  }

  using IntVector = std::vector<std::int64_t>;

  // phi: S -> Z^m given on generators.
  struct Homomorphism {
    std::size_t target_rank = 1;
    std::vector<IntVector> images;  // one per generator
  };

  IntVector add_vectors(IntVector const& x, IntVector const& y);
  IntVector sub_vectors(IntVector const& x, IntVector const& y);

  // phi on S, and its extension phi' to G(S) = S^{-1}S for the commutative
  // left reversible backends.
  template <Backend B>
  class ExtendedHomomorphism {
   public:
    ExtendedHomomorphism(B const& b,
                         std::vector<typename B::Element> gens,
                         Homomorphism phi)
        : _b(b), _gens(std::move(gens)), _phi(std::move(phi)) {
      static_assert(B::kind == BackendKind::positive_cone
                        || B::kind == BackendKind::numerical,
                    "extension is implemented for commutative backends");
      if (_gens.size() != _phi.images.size()) {
        throw UsageError("one image per generator is required");
      }
      for (auto const& v : _phi.images) {
        if (v.size() != _phi.target_rank) {
          throw UsageError("image has the wrong rank");
        }
      }
    }

    // phi(s), by peeling off the first generator that divides s.
    IntVector on_semigroup(typename B::Element const& s) const {
      if (auto it = _memo.find(s); it != _memo.end()) {
        return it->second;
      }
      IntVector out;
      if (s == _b.identity()) {
        out.assign(_phi.target_rank, 0);
      } else {
        bool found = false;
        for (std::size_t i = 0; i < _gens.size() && !found; ++i) {
          if (auto r = _b.left_divide(_gens[i], s)) {
            out   = add_vectors(_phi.images[i], on_semigroup(*r));
            found = true;
          }
        }
        if (!found) {
          throw PreconditionError(_b.format_element(s)
                                  + " is not generated by the given generators");
        }
      }
      _memo.emplace(s, out);
      return out;
    }

    // Every decomposition s = g r inside W gives the same value.
    void validate(Window<typename B::Element> const& W) const {
      for (auto const& s : W) {
        auto v = on_semigroup(s);
        for (std::size_t i = 0; i < _gens.size(); ++i) {
          if (auto r = _b.left_divide(_gens[i], s)) {
            if (add_vectors(_phi.images[i], on_semigroup(*r)) != v) {
              throw InvariantViolation("phi is not a homomorphism at "
                                       + _b.format_element(s));
            }
          }
        }
      }
    }

    // g = s t^{-1} with t the least common right multiplier, t in
    // {x : g x in S}.
    std::pair<typename B::Element, typename B::Element>
    fraction(typename B::Group const& g) const {
      auto X = _b.restrict(_b.full(), g, _b.full());
      auto t = some_member(_b, X);
      auto s = _b.from_group(_b.group_multiply(g, _b.embed(t)));
      if (!s) {
        throw InvariantViolation("common multiplier leaves S");
      }
      return {*s, t};
    }

    IntVector on_group(typename B::Group const& g) const {
      auto [s, t] = fraction(g);
      return sub_vectors(on_semigroup(s), on_semigroup(t));
    }

    // Images of the standard generators of G(S): e_i for Z^n, d for dZ.
    std::vector<IntVector> basis_images() const {
      std::vector<IntVector> out;
      if constexpr (B::kind == BackendKind::positive_cone) {
        for (std::size_t i = 0; i < _b.dimension(); ++i) {
          typename B::Group e(_b.dimension(), 0);
          e[i] = 1;
          out.push_back(on_group(e));
        }
      } else {
        out.push_back(on_group(_b.gcd()));
      }
      return out;
    }

    // Random g = s t^{-1} with two representatives (s, t) and (sr, tr); both
    // must give the same value.  Returns the number of pairs checked.
    std::size_t check_well_defined(Window<typename B::Element> const& W,
                                   std::size_t pairs,
                                   std::uint64_t seed) const {
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < pairs; ++i) {
        auto const& u = W[rng() % W.size()];
        auto const& v = W[rng() % W.size()];
        auto const& r = W[rng() % W.size()];
        auto g  = _b.group_multiply(_b.embed(u), _b.group_inverse(_b.embed(v)));
        auto x  = sub_vectors(on_semigroup(u), on_semigroup(v));
        auto y  = sub_vectors(on_semigroup(_b.multiply(u, r)),
                             on_semigroup(_b.multiply(v, r)));
        auto z  = on_group(g);
        if (x != y || x != z) {
          throw InvariantViolation("extension is not well defined at "
                                   + _b.format_group(g));
        }
      }
      return pairs;
    }

   private:
    B const& _b;
    std::vector<typename B::Element> _gens;
    Homomorphism _phi;
    mutable std::map<typename B::Element, IntVector> _memo;
  };

  struct FolnerValue {
    Rational mean;
    std::int64_t constant = 0;  // mean >= 1 - constant / N
  };

  // |F_N meet X| / |F_N| with F_N the box {0..N-1}^n, or S meet [0, N).
  template <Backend B>
  FolnerValue folner_mean(B const& b, typename B::Ideal const& X, std::int64_t N) {
    if (N <= 0) {
      throw PreconditionError("N must be positive");
    }
    if constexpr (B::kind == BackendKind::positive_cone) {
      if (is_empty<B>(X)) {
        return {Rational(0), 0};
      }
      auto c = *b.principal_generator(X);
      std::int64_t num = 1, den = 1, total = 0;
      for (auto ci : c) {
        num = checked::mul(num, std::max<std::int64_t>(0, N - ci));
        den = checked::mul(den, N);
        total += ci;
      }
      return {Rational(num, den), total};
    } else if constexpr (B::kind == BackendKind::numerical) {
      std::int64_t in_s = 0, in_x = 0;
      for (std::int64_t n = 0; n < N; ++n) {
        if (b.is_member(n)) {
          ++in_s;
          in_x += b.contains(X, n) ? 1 : 0;
        }
      }
      std::int64_t c = is_empty<B>(X) ? N : b.deficiency(X) * b.generators().front();
      return {Rational(in_x, in_s), c};
    } else {
      throw UnsupportedOperation("Folner means are computed for positive cones and "
                                 "numerical semigroups only");
    }
  }

}  // namespace lhull

#endif  // LHULL_GROUP_IMAGE_HPP_
