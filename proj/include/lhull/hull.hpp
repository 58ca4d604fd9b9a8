#ifndef LHULL_HULL_HPP_
#define LHULL_HULL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/ideals.hpp"
#include "lhull/rational.hpp"
#include "lhull/window.hpp"

namespace lhull {

  // Element of the left inverse hull: Zero, or the partial bijection
  // x -> g x on the domain X.  Zero sorts last.
  template <Backend B>
  struct HullElement {
    bool zero = false;
    typename B::Group grade{};
    typename B::Ideal domain{};

    bool operator==(HullElement const&) const = default;
    auto operator<=>(HullElement const& o) const {
      return std::tie(zero, grade, domain) <=> std::tie(o.zero, o.grade, o.domain);
    }
  };

  // One letter pair t^* s of a word t_1^* s_1 ... t_n^* s_n.
  template <Backend B>
  struct HullLetter {
    typename B::Element t;
    typename B::Element s;

    bool operator==(HullLetter const&) const = default;
  };

  template <Backend B>
  using HullWord = std::vector<HullLetter<B>>;

  template <Backend B>
  HullElement<B> hull_identity(B const& b) {
    return {false, b.group_identity(), b.full()};
  }

  template <Backend B>
  HullElement<B> hull_zero(B const& b) {
    return {true, b.group_identity(), b.empty()};
  }

  template <Backend B>
  HullElement<B> lambda(B const& b, typename B::Element const& s) {
    return {false, b.embed(s), b.full()};
  }

  template <Backend B>
  HullElement<B> star(B const& b, HullElement<B> const& f) {
    if (f.zero) {
      return f;
    }
    return {false, b.group_inverse(f.grade), b.image(f.grade, f.domain)};
  }

  // f after h: dom = {x in dom h : h(x) in dom f}.
  template <Backend B>
  HullElement<B> compose(B const& b, HullElement<B> const& f, HullElement<B> const& h) {
    if (f.zero || h.zero) {
      return hull_zero(b);
    }
    auto X = b.restrict(h.domain, h.grade, f.domain);
    if (is_empty<B>(X)) {
      return hull_zero(b);
    }
    return {false, b.group_multiply(f.grade, h.grade), std::move(X)};
  }

  template <Backend B>
  HullElement<B> letter_element(B const& b, HullLetter<B> const& l) {
    return compose(b, star(b, lambda(b, l.t)), lambda(b, l.s));
  }

  template <Backend B>
  HullElement<B> evaluate_word(B const& b, HullWord<B> const& w) {
    auto acc = hull_identity(b);
    for (auto const& l : w) {
      acc = compose(b, acc, star(b, lambda(b, l.t)));
      acc = compose(b, acc, lambda(b, l.s));
    }
    return acc;
  }

  // t_1^{-1} s_1 ... t_n^{-1} s_n in G, defined even when the word is Zero.
  template <Backend B>
  typename B::Group word_grade(B const& b, HullWord<B> const& w) {
    auto g = b.group_identity();
    for (auto const& l : w) {
      g = b.group_multiply(g, b.group_inverse(b.embed(l.t)));
      g = b.group_multiply(g, b.embed(l.s));
    }
    return g;
  }

  template <Backend B>
  bool is_idempotent(B const& b, HullElement<B> const& f) {
    return f.zero || f.grade == b.group_identity();
  }

  template <Backend B>
  typename B::Group grading(HullElement<B> const& f) {
    if (f.zero) {
      throw std::domain_error("the zero of the hull has no grade");
    }
    return f.grade;
  }

  // f(x), or nothing when x is outside the domain.
  template <Backend B>
  std::optional<typename B::Element> apply(B const& b,
                                           HullElement<B> const& f,
                                           typename B::Element const& x) {
    if (f.zero || !b.contains(f.domain, x)) {
      return std::nullopt;
    }
    auto y = b.from_group(b.group_multiply(f.grade, b.embed(x)));
    if (!y) {
      throw InvariantViolation("f(" + b.format_element(x)
                               + ") leaves S although x is in the domain");
    }
    return y;
  }

  template <Backend B>
  std::string format_hull(B const& b, HullElement<B> const& f) {
    if (f.zero) {
      return "0 | empty";
    }
    return b.format_group(f.grade) + " | " + b.format_ideal(f.domain);
  }

  template <Backend B>
  std::string format_word(B const& b, HullWord<B> const& w) {
    std::string out;
    for (auto const& l : w) {
      out += (out.empty() ? "" : " ") + b.format_element(l.t) + "* "
             + b.format_element(l.s);
    }
    return out.empty() ? "1" : out;
  }

  // Pointwise action on a window.  Boundary entries had an intermediate
  // image outside the window and are skipped by comparisons.
  enum class MapState : std::uint8_t { undefined, defined, boundary };

  template <Backend B>
  struct PartialMap {
    std::vector<MapState> state;
    std::vector<std::size_t> image;  // window index, when defined
  };

  template <Backend B>
  PartialMap<B> materialize(B const& b,
                            HullElement<B> const& f,
                            Window<typename B::Element> const& W) {
    PartialMap<B> m{std::vector<MapState>(W.size(), MapState::undefined),
                    std::vector<std::size_t>(W.size(), 0)};
    for (std::size_t i = 0; i < W.size(); ++i) {
      auto y = apply(b, f, W[i]);
      if (!y) {
        continue;
      }
      if (auto j = W.find(*y)) {
        m.state[i] = MapState::defined;
        m.image[i] = *j;
      } else {
        m.state[i] = MapState::boundary;
      }
    }
    return m;
  }

  // Oracle: applies the word right to left with multiply and left_divide
  // only.
  template <Backend B>
  PartialMap<B> materialize(B const& b,
                            HullWord<B> const& w,
                            Window<typename B::Element> const& W) {
    PartialMap<B> m{std::vector<MapState>(W.size(), MapState::undefined),
                    std::vector<std::size_t>(W.size(), 0)};
    for (std::size_t i = 0; i < W.size(); ++i) {
      std::optional<typename B::Element> x = W[i];
      bool inside                           = true;
      for (std::size_t k = w.size(); k-- > 0 && x;) {
        x      = b.multiply(w[k].s, *x);
        inside = inside && W.contains(*x);
        x      = b.left_divide(w[k].t, *x);
        inside = inside && (!x || W.contains(*x));
      }
      if (!inside) {
        m.state[i] = MapState::boundary;
      } else if (x) {
        m.state[i] = MapState::defined;
        m.image[i] = *W.find(*x);
      }
    }
    return m;
  }

  struct MapComparison {
    std::size_t compared   = 0;
    std::size_t defined    = 0;
    std::size_t mismatches = 0;
    std::optional<std::size_t> first_mismatch;
  };

  template <Backend B>
  MapComparison compare_maps(PartialMap<B> const& x, PartialMap<B> const& y) {
    MapComparison out;
    for (std::size_t i = 0; i < x.state.size(); ++i) {
      if (x.state[i] == MapState::boundary || y.state[i] == MapState::boundary) {
        continue;
      }
      ++out.compared;
      bool same = x.state[i] == y.state[i]
                  && (x.state[i] != MapState::defined || x.image[i] == y.image[i]);
      if (x.state[i] == MapState::defined) {
        ++out.defined;
      }
      if (!same) {
        if (!out.first_mismatch) {
          out.first_mismatch = i;
        }
        ++out.mismatches;
      }
    }
    return out;
  }

  // Identity, the generators, and products of two generators: the slot
  // pool for random words.
  template <Backend B>
  std::vector<typename B::Element> sample_slots(B const& b,
                                                std::span<typename B::Element const> gens) {
    auto out = slots_with_identity(b, gens);
    for (auto const& x : gens) {
      for (auto const& y : gens) {
        auto p = b.multiply(x, y);
        if (std::find(out.begin(), out.end(), p) == out.end()) {
          out.push_back(p);
        }
      }
    }
    return out;
  }

  template <Backend B>
  HullWord<B> random_word(std::span<typename B::Element const> slots,
                          std::size_t max_length,
                          std::mt19937_64& rng) {
    std::size_t n = 1 + rng() % max_length;
    HullWord<B> w;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& t = slots[rng() % slots.size()];
      auto const& s = slots[rng() % slots.size()];
      w.push_back({t, s});
    }
    return w;
  }

  template <Backend B>
  struct HullEnumeration {
    std::vector<HullElement<B>> elements;  // canonical order
    std::map<HullElement<B>, HullWord<B>> words;
  };

  // Every evaluate_word over at most `length` letter pairs with slots in
  // gens or 1, each with a shortest representative word.
  template <Backend B>
  HullEnumeration<B> enumerate_hull_words(B const& b,
                                          std::span<typename B::Element const> gens,
                                          std::size_t length) {
    auto slots = slots_with_identity(b, gens);
    std::vector<std::pair<HullLetter<B>, HullElement<B>>> letters;
    for (auto const& t : slots) {
      for (auto const& s : slots) {
        HullLetter<B> l{t, s};
        letters.emplace_back(l, letter_element(b, l));
      }
    }
    HullEnumeration<B> out;
    out.words.emplace(hull_identity(b), HullWord<B>{});
    std::vector<HullElement<B>> frontier{hull_identity(b)};
    for (std::size_t k = 0; k < length; ++k) {
      std::vector<HullElement<B>> next;
      for (auto const& f : frontier) {
        for (auto const& [l, e] : letters) {
          auto h = compose(b, f, e);
          if (out.words.count(h)) {
            continue;
          }
          auto w = out.words.at(f);
          w.push_back(l);
          out.words.emplace(h, std::move(w));
          next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    for (auto const& [f, w] : out.words) {
      out.elements.push_back(f);
    }
    return out;
  }

  template <Backend B>
  std::vector<HullElement<B>> enumerate_hull(B const& b,
                                             std::span<typename B::Element const> gens,
                                             std::size_t length) {
    return enumerate_hull_words(b, gens, length).elements;
  }

  template <Backend B>
  struct NormalForm {
    typename B::Element p, q;  // f = lambda_p lambda_q^*
  };

  template <Backend B>
  HullElement<B> from_normal_form(B const& b, NormalForm<B> const& nf) {
    return compose(b, lambda(b, nf.p), star(b, lambda(b, nf.q)));
  }

  // f = (g, qS) = lambda_p lambda_q^* with p = g q.  Verified on W by
  // materialization before returning.
  template <Backend B>
  NormalForm<B> clifford_normal_form(B const& b,
                                     HullElement<B> const& f,
                                     Window<typename B::Element> const& W) {
    if (clifford_check(b).outcome != Outcome::holds) {
      throw UnsupportedOperation(b.name() + " does not satisfy Clifford's condition");
    }
    if (f.zero) {
      throw PreconditionError("the zero of the hull has no normal form");
    }
    auto q = b.principal_generator(f.domain);
    if (!q) {
      throw InvariantViolation("domain " + b.format_ideal(f.domain)
                               + " is not principal");
    }
    auto p = b.from_group(b.group_multiply(f.grade, b.embed(*q)));
    if (!p) {
      throw InvariantViolation("g q leaves S for " + format_hull(b, f));
    }
    NormalForm<B> nf{*p, *q};
    auto h = from_normal_form(b, nf);
    auto c = compare_maps<B>(materialize(b, h, W), materialize(b, f, W));
    if (h != f || c.mismatches != 0) {
      throw InvariantViolation("normal form (" + b.format_element(nf.p) + ", "
                               + b.format_element(nf.q) + ") does not reproduce "
                               + format_hull(b, f));
    }
    return nf;
  }

  // The inductive route: lambda_t^* lambda_s = lambda_p lambda_q^* where
  // tS meet sS = rS, r = tp = sq.  Nothing when the word is Zero.
  template <Backend B>
  std::optional<NormalForm<B>> reduce_word(B const& b, HullWord<B> const& w) {
    NormalForm<B> acc{b.identity(), b.identity()};
    for (auto const& l : w) {
      // lambda_P lambda_Q^* lambda_t^* lambda_s = lambda_P lambda_{tQ}^* lambda_s
      auto tq = b.multiply(l.t, acc.q);
      auto X  = b.intersect(b.principal(tq), b.principal(l.s));
      if (is_empty<B>(X)) {
        return std::nullopt;
      }
      auto r = b.principal_generator(X);
      if (!r) {
        throw UnsupportedOperation(b.format_ideal(X) + " is not principal");
      }
      auto p = b.left_divide(tq, *r);
      auto q = b.left_divide(l.s, *r);
      if (!p || !q) {
        throw InvariantViolation("generator of an intersection is not a common multiple");
      }
      acc = {b.multiply(acc.p, *p), *q};
    }
    return acc;
  }

  template <Backend B>
  struct EStarReport {
    std::string mode;
    bool zero_present = false;
    std::size_t sampled        = 0;
    std::size_t premise_hits   = 0;
    std::size_t counterexamples = 0;
  };

  // Every graded backend is strongly E*-unitary.  The sample checks that
  // f e = e with e a nonzero idempotent forces f idempotent, in the algebra
  // and through the word oracle.
  template <Backend B>
  EStarReport<B> estar_unitary_report(B const& b,
                                      std::span<typename B::Element const> gens,
                                      std::size_t length,
                                      std::size_t sample,
                                      std::uint64_t seed,
                                      Window<typename B::Element> const& W) {
    EStarReport<B> rep;
    auto hull = enumerate_hull(b, gens, length);
    rep.zero_present
        = std::any_of(hull.begin(), hull.end(), [](auto const& f) { return f.zero; });
    rep.mode = rep.zero_present ? "strongly E*-unitary by grading"
                                : "E-unitary (no zero), strongly E*-unitary by grading";
    auto slots = sample_slots(b, gens);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sample; ++i) {
      auto wf = random_word<B>(slots, 3, rng);
      auto we = random_word<B>(slots, 3, rng);
      auto f  = evaluate_word(b, wf);
      auto h = evaluate_word(b, we);
      auto e = compose(b, star(b, h), h);
      if (e.zero) {
        continue;
      }
      // Odd samples replace f by an idempotent below e.
      if (i % 2 == 1) {
        f  = compose(b, f, e);
        f  = compose(b, star(b, f), f);
      }
      ++rep.sampled;
      if (compose(b, f, e) != e) {
        continue;
      }
      ++rep.premise_hits;
      auto m = compare_maps<B>(materialize(b, compose(b, f, e), W), materialize(b, e, W));
      if (!is_idempotent(b, f) || m.mismatches != 0) {
        ++rep.counterexamples;
        throw InvariantViolation("E*-unitarity fails: f = " + format_hull(b, f)
                                 + ", e = " + format_hull(b, e));
      }
    }
    return rep;
  }

  template <Backend B>
  using GradedTerms = std::map<typename B::Group,
                               std::vector<std::pair<Rational, HullElement<B>>>>;

  template <Backend B>
  GradedTerms<B> fell_grade_decompose(
      std::span<std::pair<Rational, HullElement<B>> const> terms) {
    GradedTerms<B> out;
    for (auto const& [c, f] : terms) {
      out[grading(f)].emplace_back(c, f);
    }
    return out;
  }

  // f lambda_s = lambda_{f(s)}, in the algebra and on W.
  template <Backend B>
  bool check_lift_relation(B const& b,
                           HullElement<B> const& f,
                           typename B::Element const& s,
                           Window<typename B::Element> const& W) {
    auto fs = apply(b, f, s);
    if (!fs) {
      throw PreconditionError(b.format_element(s) + " is not in the domain");
    }
    auto lhs = compose(b, f, lambda(b, s));
    auto rhs = lambda(b, *fs);
    auto c   = compare_maps<B>(materialize(b, lhs, W), materialize(b, rhs, W));
    return lhs == rhs && c.mismatches == 0;
  }

}  // namespace lhull

#endif  // LHULL_HULL_HPP_
