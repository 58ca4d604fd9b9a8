#ifndef LHULL_CHECKS_HPP_
#define LHULL_CHECKS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/filters.hpp"
#include "lhull/group_image.hpp"
#include "lhull/hull.hpp"
#include "lhull/ideals.hpp"
#include "lhull/operators.hpp"
#include "lhull/window.hpp"

namespace lhull {

  struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
  };

  struct CheckSettings {
    std::size_t depth   = 2;
    std::size_t length  = 2;
    std::size_t window  = 30;
    std::size_t samples = 200;
    std::uint64_t seed  = 1;
  };

  namespace detail {
    inline void fail_if(bool bad, std::string const& what) {
      if (bad) {
        throw InvariantViolation(what);
      }
    }

    // x in t_1^{-1} s_1 ... t_n^{-1} s_n S, decided with multiply and
    // left_divide only: t_1 x must lie in s_1 (t_2^{-1} s_2 ...).
    template <Backend B>
    bool in_word_ideal(B const& b, HullWord<B> const& w, std::size_t k,
                       typename B::Element const& x) {
      if (k == w.size()) {
        return true;
      }
      auto r = b.left_divide(w[k].s, b.multiply(w[k].t, x));
      return r && in_word_ideal(b, w, k + 1, *r);
    }

    template <Backend B>
    typename B::Ideal word_ideal(B const& b, HullWord<B> const& w) {
      auto X = b.full();
      for (std::size_t k = w.size(); k-- > 0;) {
        X = preimage(b, w[k].t, translate(b, w[k].s, X));
      }
      return X;
    }
  }  // namespace detail

  // The full property suite for one backend.  Each entry records either the
  // amount of evidence or the first failure.
  template <Backend B>
  std::vector<CheckResult> run_checks(B const& b,
                                      std::vector<typename B::Element> const& gens,
                                      CheckSettings const& cfg) {
    using E = typename B::Element;
    using I = typename B::Ideal;
    std::vector<CheckResult> out;
    auto run = [&](std::string name, std::function<std::string()> body) {
      CheckResult r{std::move(name), true, {}};
      try {
        r.detail = body();
      } catch (InvariantViolation const& e) {
        r.ok     = false;
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    };

    std::span<E const> g(gens);
    auto W      = first_elements(b, cfg.window);
    auto slots  = sample_slots(b, g);
    auto family = constructible_closure(b, g, cfg.depth);
    auto hull   = enumerate_hull_words(b, g, cfg.length);
    auto small  = first_elements(b, std::min<std::size_t>(cfg.window, 12));
    std::mt19937_64 rng(cfg.seed);
    auto pick   = [&](auto const& v) -> auto const& { return v[rng() % v.size()]; };

    run("core.associativity", [&] {
      std::size_t n = 0;
      for (auto const& x : small) {
        for (auto const& y : small) {
          for (auto const& z : small) {
            detail::fail_if(b.multiply(b.multiply(x, y), z) != b.multiply(x, b.multiply(y, z)),
                            "associativity fails at " + b.format_element(x) + ", "
                                + b.format_element(y) + ", " + b.format_element(z));
            ++n;
          }
        }
      }
      return std::to_string(n) + " triples";
    });
    run("core.left-cancellation", [&] {
      std::size_t n = 0;
      for (auto const& s : small) {
        std::set<E> seen;
        for (auto const& r : W) {
          detail::fail_if(!seen.insert(b.multiply(s, r)).second,
                          "left translation by " + b.format_element(s) + " is not injective");
          ++n;
        }
      }
      return std::to_string(n) + " products";
    });
    run("core.left-divide", [&] {
      std::size_t n = 0;
      for (auto const& s : small) {
        for (auto const& x : W) {
          auto t = b.multiply(s, x);
          auto r = b.left_divide(s, t);
          detail::fail_if(!r || *r != x, "left_divide incomplete at " + b.format_element(t));
          for (auto const& u : small) {
            if (auto q = b.left_divide(s, u)) {
              detail::fail_if(b.multiply(s, *q) != u, "left_divide unsound");
            }
          }
          ++n;
        }
      }
      return std::to_string(n) + " pairs";
    });
    run("core.embed", [&] {
      std::set<typename B::Group> images;
      for (auto const& x : W) {
        detail::fail_if(!images.insert(b.embed(x)).second,
                        "embed not injective at " + b.format_element(x));
        for (auto const& y : small) {
          detail::fail_if(b.embed(b.multiply(x, y))
                              != b.group_multiply(b.embed(x), b.embed(y)),
                          "embed is not a homomorphism");
        }
        detail::fail_if(b.from_group(b.embed(x)) != std::optional<E>(x), "from_group(embed)");
      }
      return std::to_string(W.size()) + " elements";
    });
    run("core.preorder", [&] {
      bool antisymmetric = true;
      for (auto const& x : small) {
        detail::fail_if(!preceq(b, x, x), "preceq not reflexive");
        detail::fail_if(!preceq(b, x, b.identity()), "1 is not maximal");
        for (auto const& y : small) {
          if (x != y && preceq(b, x, y) && preceq(b, y, x)) {
            antisymmetric = false;
          }
          for (auto const& z : small) {
            if (preceq(b, x, y) && preceq(b, y, z)) {
              detail::fail_if(!preceq(b, x, z), "preceq not transitive");
            }
          }
        }
      }
      detail::fail_if(antisymmetric != b.units_trivial() && small.size() > 1,
                      "antisymmetry disagrees with the unit group");
      return std::string(antisymmetric ? "antisymmetric" : "not antisymmetric (units)");
    });

    run("ideals.semilattice-laws", [&] {
      for (auto const& X : family) {
        detail::fail_if(b.intersect(X, X) != X, "intersect not idempotent");
        detail::fail_if(b.intersect(b.full(), X) != X, "S is not the unit");
        for (auto const& Y : family) {
          detail::fail_if(b.intersect(X, Y) != b.intersect(Y, X), "intersect not commutative");
          auto Z = pick(family);
          detail::fail_if(b.intersect(b.intersect(X, Y), Z) != b.intersect(X, b.intersect(Y, Z)),
                          "intersect not associative");
        }
      }
      return std::to_string(family.size()) + " ideals";
    });
    run("ideals.right-ideal", [&] {
      for (auto const& X : family) {
        for (auto const& x : small) {
          if (!b.contains(X, x)) {
            continue;
          }
          for (auto const& s : small) {
            detail::fail_if(!b.contains(X, b.multiply(x, s)),
                            b.format_ideal(X) + " is not a right ideal");
          }
        }
      }
      return std::to_string(family.size()) + " ideals";
    });
    run("ideals.adjunction", [&] {
      std::size_t n = 0;
      for (auto const& s : slots) {
        for (auto const& X : family) {
          auto P = preimage(b, s, X);
          for (auto const& x : W) {
            detail::fail_if(b.contains(P, x) != b.contains(X, b.multiply(s, x)),
                            "preimage membership fails");
          }
          detail::fail_if(preimage(b, s, translate(b, s, X)) != X, "s^-1 s X != X");
          detail::fail_if(translate(b, s, P) != b.intersect(b.principal(s), X),
                          "s s^-1 X != sS meet X");
          ++n;
        }
      }
      return std::to_string(n) + " pairs";
    });
    run("ideals.brute-force", [&] {
      auto big = first_elements(b, std::max<std::size_t>(cfg.window, 50));
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto w = random_word<B>(slots, 3, rng);
        auto X = detail::word_ideal(b, w);
        for (auto const& x : big) {
          detail::fail_if(b.contains(X, x) != detail::in_word_ideal(b, w, 0, x),
                          "ideal of " + format_word(b, w) + " disagrees at "
                              + b.format_element(x));
        }
      }
      return std::to_string(cfg.samples) + " words on " + std::to_string(big.size())
             + " elements";
    });
    run("ideals.clifford-implies-independence", [&] {
      auto c = clifford_check(b);
      auto v = independence_check(b, family);
      detail::fail_if(c.outcome == Outcome::holds && !v.independent,
                      "Clifford holds but the family is dependent");
      return "clifford " + std::string(to_string(c.outcome)) + ", "
             + (v.independent ? "independent" : "dependent");
    });

    run("hull.oracle", [&] {
      auto big = first_elements(b, std::max<std::size_t>(cfg.window, 50));
      std::size_t compared = 0;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto w = random_word<B>(slots, 4, rng);
        auto c = compare_maps<B>(materialize(b, evaluate_word(b, w), big), materialize(b, w, big));
        detail::fail_if(c.mismatches != 0, "oracle mismatch for " + format_word(b, w));
        compared += c.compared;
      }
      return std::to_string(cfg.samples) + " words, " + std::to_string(compared) + " points";
    });
    run("hull.inverse-axioms", [&] {
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto f = evaluate_word(b, random_word<B>(slots, 3, rng));
        auto h = evaluate_word(b, random_word<B>(slots, 3, rng));
        auto fs = star(b, f);
        detail::fail_if(compose(b, f, compose(b, fs, f)) != f, "f f* f != f");
        detail::fail_if(star(b, fs) != f, "f** != f");
        detail::fail_if(!is_idempotent(b, compose(b, f, fs)), "f f* not idempotent");
        detail::fail_if(star(b, compose(b, f, h)) != compose(b, star(b, h), fs), "(fh)* != h* f*");
        auto e1 = compose(b, fs, f), e2 = compose(b, star(b, h), h);
        detail::fail_if(compose(b, e1, e2) != compose(b, e2, e1), "idempotents do not commute");
      }
      return std::to_string(cfg.samples) + " pairs";
    });
    run("hull.sequalst", [&] {
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto const& s = pick(W.items());
        auto const& t = pick(W.items());
        bool id = compose(b, star(b, lambda(b, t)), lambda(b, s)) == hull_identity(b);
        detail::fail_if(id != (s == t), "lambda_t* lambda_s = 1 disagrees with s = t");
      }
      return std::to_string(cfg.samples) + " pairs";
    });
    run("hull.idempotent-pure", [&] {
      std::set<I> domains(family.begin(), family.end());
      for (auto const& f : hull.elements) {
        if (f.zero) {
          continue;
        }
        detail::fail_if((f.grade == b.group_identity()) != is_idempotent(b, f), "grading");
        detail::fail_if(!domains.count(f.domain) && cfg.length <= cfg.depth,
                        "domain " + b.format_ideal(f.domain) + " missing from the family");
      }
      return std::to_string(hull.elements.size()) + " elements";
    });
    run("hull.zero-vs-reversible", [&] {
      auto r = is_left_reversible(b);
      auto longer = enumerate_hull(b, g, std::max<std::size_t>(cfg.length, 2));
      bool zero = std::any_of(longer.begin(), longer.end(), [](auto const& f) { return f.zero; });
      if (r.outcome != Outcome::inconclusive) {
        detail::fail_if(zero == (r.outcome == Outcome::holds),
                        "zero in the hull disagrees with left reversibility");
      }
      return std::string(zero ? "zero present" : "zero absent");
    });
    run("hull.lift-relation", [&] {
      std::size_t n = 0;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto f = evaluate_word(b, random_word<B>(slots, 3, rng));
        for (auto const& s : small) {
          if (apply(b, f, s)) {
            detail::fail_if(!check_lift_relation(b, f, s, W), "f lambda_s != lambda_f(s)");
            ++n;
            break;
          }
        }
      }
      return std::to_string(n) + " pairs";
    });
    run("hull.estar", [&] {
      auto rep = estar_unitary_report(b, g, cfg.length, cfg.samples, cfg.seed, W);
      return rep.mode + ", " + std::to_string(rep.premise_hits) + " premises, "
             + std::to_string(rep.counterexamples) + " counterexamples";
    });
    if (clifford_check(b).outcome == Outcome::holds) {
      run("hull.normal-form", [&] {
        std::size_t n = 0;
        for (std::size_t i = 0; i < cfg.samples; ++i) {
          auto w = random_word<B>(slots, 3, rng);
          auto f = evaluate_word(b, w);
          auto r = reduce_word(b, w);
          detail::fail_if(f.zero != !r.has_value(), "reduction disagrees on zero");
          if (f.zero) {
            continue;
          }
          clifford_normal_form(b, f, W);
          detail::fail_if(from_normal_form(b, *r) != f, "inductive reduction disagrees");
          ++n;
        }
        return std::to_string(n) + " elements";
      });
    }

    run("filters", [&] {
      auto L = truncate_semilattice(b, family);
      auto filters = enumerate_filters(L);
      for (auto const& f : filters) {
        detail::fail_if(!is_filter<B>(f, L), "enumerated set is not a filter");
        // Indicator is a 0-homomorphism to {0,1}.
        std::vector<bool> in(L.size(), false);
        for (auto i : f) {
          in[i] = true;
        }
        for (std::size_t x = 0; x < L.size(); ++x) {
          for (std::size_t y = 0; y < L.size(); ++y) {
            detail::fail_if(in[L.meet[x][y]] != (in[x] && in[y]), "indicator not multiplicative");
          }
        }
      }
      auto m = maximal_representation_check(b, L);
      auto v = independence_check(b, family);
      detail::fail_if(m.independent != v.independent, "maximality disagrees with independence");
      return std::to_string(filters.size()) + " filters, "
             + (m.independent ? "maximal" : "not maximal");
    });

    run("group.left-thick", [&] {
      auto r = is_left_reversible(b);
      std::size_t n = 0;
      bool all_thick = true;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        std::vector<typename B::Group> gl;
        for (std::size_t k = 0; k < 3; ++k) {
          auto h = b.group_multiply(b.group_inverse(b.embed(pick(slots))), b.embed(pick(slots)));
          gl.push_back(h);
        }
        auto v = left_thick_check(b, std::span<typename B::Group const>(gl));
        all_thick = all_thick && v.outcome == Outcome::holds;
        if (r.outcome == Outcome::holds) {
          detail::fail_if(v.outcome != Outcome::holds, "left reversible but not left thick");
        }
        ++n;
      }
      if (r.outcome == Outcome::fails) {
        std::vector<typename B::Group> gl{b.embed(*r.s), b.embed(*r.t)};
        detail::fail_if(left_thick_check(b, std::span<typename B::Group const>(gl)).outcome
                            != Outcome::fails,
                        "witness pair is left thick");
      }
      return std::to_string(n) + " lists";
    });
    if constexpr (B::kind == BackendKind::positive_cone || B::kind == BackendKind::numerical) {
      run("group.extension", [&] {
        auto gensS = b.default_generators();
        Homomorphism phi;
        phi.target_rank = 1;
        for (auto const& x : gensS) {
          if constexpr (B::kind == BackendKind::positive_cone) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
              v += static_cast<std::int64_t>(i + 1) * x[i];
            }
            phi.images.push_back({v});
          } else {
            phi.images.push_back({x});
          }
        }
        ExtendedHomomorphism<B> ext(b, gensS, phi);
        ext.validate(W);
        for (auto const& x : W) {
          detail::fail_if(ext.on_group(gamma(b, x)) != ext.on_semigroup(x), "phi' gamma != phi");
        }
        auto n = ext.check_well_defined(W, 100, cfg.seed);
        return std::to_string(n) + " representative pairs";
      });
      run("group.folner", [&] {
        for (auto const& X : family) {
          auto v = folner_mean(b, X, 1000);
          detail::fail_if(v.mean < Rational(1) - Rational(v.constant, 1000),
                          "Folner bound fails for " + b.format_ideal(X));
        }
        return std::to_string(family.size()) + " ideals at N=1000";
      });
    }

    auto ctx = make_operator_context(b, g, cfg.depth, cfg.length, W);
    for (auto const& kind : relation_kinds()) {
      run("operators." + kind, [&] {
        auto rep = verify_relation(b, kind, ctx);
        return std::to_string(rep.instances.size()) + " instances, "
               + std::to_string(rep.columns_checked) + " columns";
      });
    }
    run("operators.expectation", [&] {
      auto rep = expectation_loop(b, ctx);
      return std::to_string(rep.checked) + " elements, " + std::to_string(rep.vacuous)
             + " vacuous";
    });
    run("operators.omega-homomorphism", [&] {
      std::size_t n = 0;
      auto const& els = ctx.hull.elements;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto const& f = pick(els);
        auto const& h = pick(els);
        auto c = compare_on_core(hull_matrix(b, f, W) * hull_matrix(b, h, W),
                                 hull_matrix(b, compose(b, f, h), W));
        detail::fail_if(c.mismatches != 0, "omega(fh) != omega(f) omega(h)");
        n += c.checked;
      }
      return std::to_string(n) + " columns";
    });
    return out;
  }

}  // namespace lhull

#endif  // LHULL_CHECKS_HPP_
