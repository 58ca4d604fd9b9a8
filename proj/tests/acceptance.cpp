#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "lhull/analysis.hpp"
#include "lhull/filters.hpp"
#include "lhull/group_image.hpp"
#include "lhull/hull.hpp"
#include "lhull/ideals.hpp"
#include "lhull/operators.hpp"

using namespace lhull;

namespace {

  constexpr std::uint64_t seed = 20240611;

  struct Result {
    bool pass = true;
    std::string detail;
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  template <typename Fn>
  void for_each_backend(Fn&& fn) {
    fn(PositiveCone(1), PositiveCone(1).default_generators());
    fn(PositiveCone(2), PositiveCone(2).default_generators());
    fn(FreeMonoid(2), FreeMonoid(2).default_generators());
    fn(NumericalSemigroup({2, 3}), NumericalSemigroup({2, 3}).default_generators());
    fn(AxPlusB{}, AxPlusB{}.default_generators());
    FiniteTable z3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
    fn(z3, z3.default_generators());
  }

  Result oracle_equivalence() {
    Result o;
    auto t0 = Clock::now();
    std::size_t points = 0, mismatches = 0, words = 0;
    for_each_backend([&](auto const& b, auto const& gens) {
      using B    = std::decay_t<decltype(b)>;
      auto W     = first_elements(b, 50);
      auto slots = sample_slots(b, std::span<typename B::Element const>(gens));
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 1000; ++i) {
        auto w = random_word<B>(slots, 6, rng);
        auto c = compare_maps<B>(materialize(b, evaluate_word(b, w), W), materialize(b, w, W));
        points += c.compared;
        mismatches += c.mismatches;
        ++words;
      }
    });
    double s = seconds_since(t0);
    o.pass   = mismatches == 0 && s < 30;
    std::ostringstream os;
    os << words << " words, " << points << " points, " << mismatches << " mismatches, "
       << (s < 30 ? "under" : "over") << " 30 s";
    o.detail = os.str();
    return o;
  }

  Result verdict_table() {
    Result o;
    std::vector<std::string> bad;
    auto want = [&](bool ok, std::string const& what) {
      if (!ok) {
        bad.push_back(what);
      }
    };
    FreeMonoid f(2);
    want(clifford_check(f).outcome == lhull::Outcome::holds, "free clifford");
    auto fr = is_left_reversible(f);
    want(fr.outcome == lhull::Outcome::fails && reversibility_witness(f, fr) == "(a, b)", "free reversibility");

    PositiveCone c(2);
    auto cg = c.default_generators();
    want(clifford_check(c).outcome == lhull::Outcome::holds, "cone clifford");
    want(independence_check(c, constructible_closure(c, std::span<PositiveCone::Element const>(cg), 3)).independent,
         "cone independence");
    want(is_left_reversible(c).outcome == lhull::Outcome::holds, "cone reversibility");

    AxPlusB ab;
    want(clifford_check(ab).outcome == lhull::Outcome::holds, "ax+b clifford");
    auto ar = is_left_reversible(ab);
    want(ar.outcome == lhull::Outcome::fails && reversibility_witness(ab, ar) == "((0,2), (1,2))",
         "ax+b reversibility");

    NumericalSemigroup n({2, 3});
    std::vector<std::int64_t> ng{2, 3};
    auto nc = clifford_check(n);
    want(nc.outcome == lhull::Outcome::fails && nc.s == 2 && nc.t == 3, "numerical clifford");
    auto ni = independence_check(n, constructible_closure(n, std::span<std::int64_t const>(ng), 3));
    bool witness = !ni.independent && ni.parts.size() == 2 && ni.parts[0] == n.principal(2)
                   && ni.parts[1] == n.principal(3) && n.format_ideal(*ni.target) == "{2,3,4,...}";
    want(witness, "numerical independence");
    o.pass   = bad.empty();
    o.detail = o.pass ? "4 backends, 10 verdicts" : "mismatch: " + bad.front();
    return o;
  }

  Result sequalst() {
    Result o;
    std::size_t pairs = 0, exceptions = 0;
    for_each_backend([&](auto const& b, auto const&) {
      using B = std::decay_t<decltype(b)>;
      auto W  = first_elements(b, 50);
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 500; ++i) {
        auto const& s = W[rng() % W.size()];
        auto const& t = i % 4 == 0 ? s : W[rng() % W.size()];
        bool id       = letter_element(b, HullLetter<B>{t, s}) == hull_identity(b);
        exceptions += id != (s == t);
        ++pairs;
      }
    });
    o.pass   = exceptions == 0;
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(exceptions) + " exceptions";
    return o;
  }

  Result normal_form() {
    Result o;
    std::size_t checked = 0, failures = 0;
    auto run = [&](auto const& b, auto const& gens) {
      using B    = std::decay_t<decltype(b)>;
      auto W     = first_elements(b, 50);
      auto slots = sample_slots(b, std::span<typename B::Element const>(gens));
      std::mt19937_64 rng(seed);
      std::size_t done = 0;
      while (done < 500) {
        auto f = evaluate_word(b, random_word<B>(slots, 6, rng));
        if (f.zero) {
          continue;
        }
        auto nf = clifford_normal_form(b, f, W);
        auto h  = from_normal_form(b, nf);
        auto c  = compare_maps<B>(materialize(b, h, W), materialize(b, f, W));
        failures += h != f || c.mismatches != 0;
        ++done;
      }
      checked += done;
    };
    run(FreeMonoid(2), FreeMonoid(2).default_generators());
    run(PositiveCone(2), PositiveCone(2).default_generators());
    run(AxPlusB{}, AxPlusB{}.default_generators());
    FiniteTable z3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
    run(z3, z3.default_generators());
    o.pass   = failures == 0;
    o.detail = std::to_string(checked) + " elements on 4 Clifford backends, "
               + std::to_string(failures) + " failures";
    return o;
  }

  template <typename Fn>
  void for_each_operator_case(std::size_t length, Fn&& fn) {
    PositiveCone z(1);
    fn(z, z.default_generators(), Window<PositiveCone::Element>(z.enumerate_window(29)), length);
    PositiveCone c(2);
    fn(c, c.default_generators(), Window<PositiveCone::Element>(c.enumerate_window(7)), length);
    FreeMonoid f(2);
    fn(f, f.default_generators(), Window<std::string>(f.enumerate_window(4)), length);
    NumericalSemigroup n({2, 3});
    fn(n, n.default_generators(), Window<std::int64_t>(n.enumerate_window(30)), length);
  }

  Result operator_relations() {
    Result o;
    std::size_t columns = 0, elements = 0, vacuous = 0, smallest = SIZE_MAX;
    for_each_operator_case(3, [&](auto const& b, auto const& gens, auto W, std::size_t length) {
      using B = std::decay_t<decltype(b)>;
      smallest = std::min(smallest, W.size());
      auto ctx = make_operator_context(b, std::span<typename B::Element const>(gens), 2, length, std::move(W));
      for (auto kind : {"covariance", "semilattice", "isometry", "cs-grade-one"}) {
        columns += verify_relation(b, kind, ctx).columns_checked;
      }
      auto e = expectation_loop(b, ctx);
      elements += e.checked;
      vacuous += e.vacuous;
    });
    o.pass = vacuous == 0 && smallest >= 30;
    std::ostringstream os;
    os << "4 windows of size >= " << smallest << ", " << columns << " safe columns, 0 mismatches; "
       << elements << " hull elements in the expectation loop, " << vacuous << " vacuous";
    o.detail = os.str();
    return o;
  }

  Result intertwiner() {
    Result o;
    std::size_t columns = 0, instances = 0;
    for_each_operator_case(3, [&](auto const& b, auto const& gens, auto W, std::size_t length) {
      using B  = std::decay_t<decltype(b)>;
      auto ctx = make_operator_context(b, std::span<typename B::Element const>(gens), 2, length, std::move(W));
      auto r   = verify_relation(b, "intertwiner", ctx);
      columns += r.columns_checked;
      instances += r.instances.size();
    });
    o.detail = std::to_string(instances) + " hull elements, " + std::to_string(columns)
               + " safe columns, 0 mismatches";
    return o;
  }

  Result group_image() {
    Result o;
    std::vector<std::string> bad;
    auto injective = [&](auto const& b) {
      auto W = first_elements(b, 200);
      std::set<typename std::decay_t<decltype(b)>::Group> seen;
      for (auto const& s : W) {
        seen.insert(gamma(b, s));
      }
      return W.size() == 200 && seen.size() == 200;
    };
    if (!injective(PositiveCone(1)) || !injective(PositiveCone(2)) || !injective(PositiveCone(3))
        || !injective(NumericalSemigroup({2, 3}))) {
      bad.push_back("gamma not injective");
    }
    if (group_of_S(PositiveCone(1)).to_string() != "Integers(Z)") {
      bad.push_back("G(Z+)");
    }
    PositiveCone c(2);
    ExtendedHomomorphism<PositiveCone> phi(c, c.default_generators(), Homomorphism{1, {{1}, {2}}});
    auto W = first_elements(c, 200);
    phi.validate(W);
    if (phi.basis_images() != std::vector<IntVector>{{1}, {2}}) {
      bad.push_back("generator images");
    }
    for (auto const& s : W) {
      if (phi.on_group(gamma(c, s)) != phi.on_semigroup(s)) {
        bad.push_back("phi' gamma != phi");
        break;
      }
    }
    std::size_t pairs = phi.check_well_defined(W, 100, seed);
    o.pass            = bad.empty();
    o.detail = o.pass ? "gamma injective on 4 windows of 200, G(Z+) = Z, images (1, 2), "
                            + std::to_string(pairs) + " representative pairs"
                      : bad.front();
    return o;
  }

  Result folner() {
    Result o;
    PositiveCone z(1);
    bool exact = folner_mean(z, z.principal({2}), 100).mean == Rational(98, 100);
    PositiveCone c(2);
    auto gens   = c.default_generators();
    auto family = constructible_closure(c, std::span<PositiveCone::Element const>(gens), 2);
    std::size_t ok = 0;
    for (auto const& X : family) {
      auto v = folner_mean(c, X, 1000);
      ok += v.mean >= Rational(999, 1000) - Rational(v.constant, 1000);
    }
    o.pass   = exact && ok == family.size();
    o.detail = std::string(exact ? "98/100 exact" : "98/100 missed") + ", "
               + std::to_string(ok) + "/" + std::to_string(family.size())
               + " depth-2 ideals within the bound at N=1000";
    return o;
  }

  Result filters() {
    Result o;
    std::vector<std::string> bad;
    std::size_t filters_checked = 0, families = 0;
    auto verify = [&](auto const& b, auto const& fam) {
      auto L = truncate_semilattice(b, fam);
      auto fs = enumerate_filters(L);
      using B = std::decay_t<decltype(b)>;
      for (auto const& f : fs) {
        if (!is_filter<B>(f, L)) {
          bad.push_back("is_filter");
        }
      }
      if (maximal_representation_check(b, L).independent != independence_check(b, fam).independent) {
        bad.push_back("maximal representation verdict");
      }
      filters_checked += fs.size();
      ++families;
      return fs.size();
    };
    PositiveCone z(1);
    auto zg = z.default_generators();
    for (std::size_t L = 1; L <= 4; ++L) {
      if (verify(z, constructible_closure(z, std::span<PositiveCone::Element const>(zg), L)) != L + 1) {
        bad.push_back("chain of depth " + std::to_string(L));
      }
    }
    FreeMonoid f(2);
    auto fg = f.default_generators();
    if (verify(f, constructible_closure(f, std::span<std::string const>(fg), 1)) != 3) {
      bad.push_back("free monoid depth 1");
    }
    verify(f, constructible_closure(f, std::span<std::string const>(fg), 2));
    NumericalSemigroup n({2, 3});
    auto ng = n.default_generators();
    for (std::size_t d = 1; d <= 3; ++d) {
      verify(n, constructible_closure(n, std::span<std::int64_t const>(ng), d));
    }
    PositiveCone c(2);
    auto cg = c.default_generators();
    verify(c, constructible_closure(c, std::span<PositiveCone::Element const>(cg), 2));
    o.pass   = bad.empty();
    o.detail = o.pass ? std::to_string(families) + " families, " + std::to_string(filters_checked)
                            + " filters, chain counts L+1, free monoid 3"
                      : bad.front();
    return o;
  }

  Result determinism() {
    Result o;
    auto t0 = Clock::now();
    std::size_t configs = 0;
    std::vector<std::string> bad;
    for (auto name : {"zplus", "zplus2", "free2", "num23", "axb", "z3"}) {
      auto cfg = load_config(std::string(LHULL_CONFIG_DIR) + "/" + name + ".cfg");
      RunOptions opt;
      opt.bounds = cfg.bounds;
      auto a     = run_command("check", cfg, opt);
      auto b     = run_command("check", cfg, opt);
      if (a.out != b.out || a.status != b.status) {
        bad.push_back(std::string(name) + " differs between runs");
      } else if (a.status != 0) {
        bad.push_back(std::string(name) + " check failed");
      }
      ++configs;
    }
    double s = seconds_since(t0);
    o.pass   = bad.empty() && s < 300;
    o.detail = bad.empty() ? std::to_string(configs) + " configs, byte-identical, "
                                 + (s < 300 ? "under" : "over") + " 5 minutes"
                           : bad.front();
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"verdict table", verdict_table},
      {"lambda_t^* lambda_s = 1 iff s = t", sequalst},
      {"Clifford normal form", normal_form},
      {"operator relations", operator_relations},
      {"intertwiner", intertwiner},
      {"group image", group_image},
      {"Folner means", folner},
      {"filters", filters},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << o.detail << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
