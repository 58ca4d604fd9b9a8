#ifndef LHULL_OPERATORS_HPP_
#define LHULL_OPERATORS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/hull.hpp"
#include "lhull/ideals.hpp"
#include "lhull/sparse_matrix.hpp"
#include "lhull/window.hpp"

namespace lhull {

  // Compression of a pointwise partial map x -> fn(x).  A column is safe when
  // fn(x) is undefined or lands in the row window.
  template <typename R, typename C, typename Fn>
  TruncatedOperator pointwise_operator(Window<R> const& rows, Window<C> const& cols, Fn&& fn) {
    TruncatedOperator op{SparseMatrix(rows.size(), cols.size()),
                         std::vector<bool>(cols.size(), true)};
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::optional<R> y = fn(cols[j]);
      if (!y) {
        continue;
      }
      if (auto i = rows.find(*y)) {
        op.matrix.set(*i, j, Rational(1));
      } else {
        op.safe[j] = false;
      }
    }
    return op;
  }

  template <Backend B>
  using ElementWindow = Window<typename B::Element>;

  template <Backend B>
  using HullWindow = Window<HullElement<B>>;

  // V_s e_t = e_{st}
  template <Backend B>
  TruncatedOperator isometry_matrix(B const& b,
                                    typename B::Element const& s,
                                    ElementWindow<B> const& W) {
    return pointwise_operator(W, W, [&](auto const& t) {
      return std::optional<typename B::Element>(b.multiply(s, t));
    });
  }

  // V_s^* e_x = e_r when x = sr, else 0.
  template <Backend B>
  TruncatedOperator isometry_adjoint(B const& b,
                                     typename B::Element const& s,
                                     ElementWindow<B> const& W) {
    return pointwise_operator(W, W, [&](auto const& x) { return b.left_divide(s, x); });
  }

  template <Backend B>
  TruncatedOperator char_projection(B const& b,
                                    typename B::Ideal const& X,
                                    ElementWindow<B> const& W) {
    return pointwise_operator(W, W, [&](auto const& x) {
      return b.contains(X, x) ? std::optional<typename B::Element>(x) : std::nullopt;
    });
  }

  // omega(f)
  template <Backend B>
  TruncatedOperator hull_matrix(B const& b, HullElement<B> const& f, ElementWindow<B> const& W) {
    return pointwise_operator(W, W, [&](auto const& x) { return apply(b, f, x); });
  }

  // Lambda(f) delta_q = delta_{fq} if f^* f q = q, else 0.
  template <Backend B>
  TruncatedOperator regular_rep_matrix(B const& b, HullElement<B> const& f, HullWindow<B> const& HW) {
    auto fs = star(b, f);
    return pointwise_operator(HW, HW, [&](HullElement<B> const& q) {
      auto fq = compose(b, f, q);
      return compose(b, fs, fq) == q ? std::optional<HullElement<B>>(fq) : std::nullopt;
    });
  }

  // T e_s = delta_{lambda_s}
  template <Backend B>
  TruncatedOperator intertwiner_matrix(B const& b, ElementWindow<B> const& W, HullWindow<B> const& HW) {
    for (auto const& s : W) {
      if (!HW.contains(lambda(b, s))) {
        throw PreconditionError("hull window lacks lambda(" + b.format_element(s) + ")");
      }
    }
    return pointwise_operator(HW, W, [&](auto const& s) {
      return std::optional<HullElement<B>>(lambda(b, s));
    });
  }

  // T^* delta_p = e_x when p = lambda_x, else 0.
  template <Backend B>
  TruncatedOperator intertwiner_adjoint(B const& b, ElementWindow<B> const& W, HullWindow<B> const& HW) {
    return pointwise_operator(W, HW, [&](HullElement<B> const& p) -> std::optional<typename B::Element> {
      if (p.zero || p.domain != b.full()) {
        return std::nullopt;
      }
      return b.from_group(p.grade);
    });
  }

  template <Backend B>
  TruncatedOperator identity_operator(ElementWindow<B> const& W) {
    return {SparseMatrix::identity(W.size()), std::vector<bool>(W.size(), true)};
  }

  template <Backend B>
  TruncatedOperator word_operator(B const& b, HullWord<B> const& w, ElementWindow<B> const& W) {
    auto op = identity_operator<B>(W);
    for (auto const& l : w) {
      op = op * isometry_adjoint(b, l.t, W);
      op = op * isometry_matrix(b, l.s, W);
    }
    return op;
  }

  // Everything the relation checks need, built once.
  template <Backend B>
  struct OperatorContext {
    std::vector<typename B::Element> slots;
    IdealFamily<B> family;
    ElementWindow<B> W;
    HullEnumeration<B> hull;
    HullWindow<B> HW;
  };

  // HW is the enumerated hull plus lambda_s for s in W, in canonical order.
  template <Backend B>
  OperatorContext<B> make_operator_context(B const& b,
                                           std::span<typename B::Element const> gens,
                                           std::size_t depth,
                                           std::size_t length,
                                           ElementWindow<B> W) {
    OperatorContext<B> ctx;
    ctx.slots  = slots_with_identity(b, gens);
    ctx.family = constructible_closure(b, gens, depth);
    ctx.W      = std::move(W);
    ctx.hull   = enumerate_hull_words(b, gens, length);
    std::set<HullElement<B>> hw(ctx.hull.elements.begin(), ctx.hull.elements.end());
    for (auto const& s : ctx.W) {
      hw.insert(lambda(b, s));
    }
    ctx.HW = HullWindow<B>(std::vector<HullElement<B>>(hw.begin(), hw.end()));
    return ctx;
  }

  struct RelationInstance {
    std::string label;
    std::size_t checked = 0;  // safe columns compared
  };

  struct RelationReport {
    std::string kind;
    std::vector<RelationInstance> instances;
    std::size_t columns_checked = 0;
    std::size_t mismatches = 0;  // always 0 on return; failures throw
  };

  namespace detail {
    inline void record(RelationReport& rep,
                       std::string label,
                       TruncatedOperator const& lhs,
                       TruncatedOperator const& rhs) {
      auto c = compare_on_core(lhs, rhs);
      if (c.mismatches != 0) {
        throw InvariantViolation(rep.kind + " relation fails for " + label
                                 + " at column " + std::to_string(*c.first_mismatch));
      }
      rep.columns_checked += c.checked;
      rep.instances.push_back({std::move(label), c.checked});
    }

    template <Backend B>
    std::vector<HullWord<B>> short_words(std::span<typename B::Element const> slots,
                                         std::size_t length) {
      std::vector<HullWord<B>> out{HullWord<B>{}};
      std::vector<HullWord<B>> frontier{HullWord<B>{}};
      for (std::size_t k = 0; k < length; ++k) {
        std::vector<HullWord<B>> next;
        for (auto const& w : frontier) {
          for (auto const& t : slots) {
            for (auto const& s : slots) {
              auto v = w;
              v.push_back({t, s});
              next.push_back(v);
            }
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      return out;
    }
  }  // namespace detail

  inline std::vector<std::string> relation_kinds() {
    return {"covariance", "semilattice", "isometry", "cs-grade-one", "intertwiner"};
  }

  // Both sides as matrices, compared on the shared safe core.  Throws
  // InvariantViolation naming the first failing instance.
  template <Backend B>
  RelationReport verify_relation(B const& b, std::string const& kind, OperatorContext<B> const& ctx) {
    RelationReport rep;
    rep.kind = kind;
    auto const& W = ctx.W;
    if (kind == "covariance") {
      // V_s chi_X V_s^* = chi_{sX}
      for (auto const& s : ctx.slots) {
        auto V  = isometry_matrix(b, s, W);
        auto Vs = isometry_adjoint(b, s, W);
        for (auto const& X : ctx.family) {
          detail::record(rep, "s=" + b.format_element(s) + " X=" + b.format_ideal(X),
                         V * char_projection(b, X, W) * Vs,
                         char_projection(b, translate(b, s, X), W));
        }
      }
    } else if (kind == "semilattice") {
      // chi_X chi_Y = chi_{X meet Y}
      for (auto const& X : ctx.family) {
        for (auto const& Y : ctx.family) {
          detail::record(rep, "X=" + b.format_ideal(X) + " Y=" + b.format_ideal(Y),
                         char_projection(b, X, W) * char_projection(b, Y, W),
                         char_projection(b, b.intersect(X, Y), W));
        }
      }
    } else if (kind == "isometry") {
      // V_s^* V_s = 1
      for (auto const& s : ctx.slots) {
        detail::record(rep, "s=" + b.format_element(s),
                       isometry_adjoint(b, s, W) * isometry_matrix(b, s, W),
                       identity_operator<B>(W));
      }
    } else if (kind == "cs-grade-one") {
      // Words of grade 1 act as the projection onto their domain.
      for (auto const& w : detail::short_words<B>(ctx.slots, 2)) {
        if (word_grade(b, w) != b.group_identity()) {
          continue;
        }
        auto f = evaluate_word(b, w);
        detail::record(rep, "w=" + format_word(b, w), word_operator(b, w, W),
                       char_projection(b, f.zero ? b.empty() : f.domain, W));
      }
    } else if (kind == "intertwiner") {
      // T^* Lambda(f) T = omega(f)
      auto T  = intertwiner_matrix(b, W, ctx.HW);
      auto Ts = intertwiner_adjoint(b, W, ctx.HW);
      for (auto const& f : ctx.hull.elements) {
        detail::record(rep, "f=" + format_hull(b, f),
                       Ts * regular_rep_matrix(b, f, ctx.HW) * T,
                       hull_matrix(b, f, W));
      }
    } else {
      throw UsageError("unknown relation kind '" + kind + "'");
    }
    return rep;
  }

  struct ExpectationReport {
    std::size_t checked = 0;
    std::size_t vacuous = 0;  // nonzero f with no safe nonzero column
  };

  // E(omega(f)) = omega(f) on the safe core iff f is idempotent.
  template <Backend B>
  ExpectationReport expectation_loop(B const& b, OperatorContext<B> const& ctx) {
    ExpectationReport rep;
    for (auto const& f : ctx.hull.elements) {
      auto w         = hull_matrix(b, f, ctx.W);
      bool witnessed = false;
      for (auto const& [k, v] : w.matrix.entries()) {
        witnessed = witnessed || w.safe[k.second];
      }
      if (!f.zero && !witnessed) {
        ++rep.vacuous;
        continue;
      }
      auto c = compare_on_core(conditional_expectation(w), w);
      if ((c.mismatches == 0) != is_idempotent(b, f)) {
        throw InvariantViolation("E(omega(f)) = omega(f) disagrees with idempotency for "
                                 + format_hull(b, f));
      }
      ++rep.checked;
    }
    return rep;
  }

}  // namespace lhull

#endif  // LHULL_OPERATORS_HPP_
