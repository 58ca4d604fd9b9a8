#include "lhull/analysis.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lhull/checks.hpp"
#include "lhull/errors.hpp"
#include "lhull/filters.hpp"
#include "lhull/group_image.hpp"
#include "lhull/hull.hpp"
#include "lhull/ideals.hpp"
#include "lhull/operators.hpp"

namespace lhull {

  namespace {

    // Text: "[section]" headers and "key: value" lines.  Machine:
    // "section.key=value" lines.
    class Report {
     public:
      explicit Report(bool machine) : _machine(machine) {}

      void section(std::string name) {
        _section = std::move(name);
        if (!_machine) {
          _os << "[" << _section << "]\n";
        }
      }
      void field(std::string const& key, std::string const& value) {
        if (_machine) {
          _os << machine_key(key) << "=" << value << "\n";
        } else {
          _os << key << ": " << value << "\n";
        }
      }
      // Bare line in text mode, `section=value` in machine mode.
      void item(std::string const& value) {
        if (_machine) {
          _os << (_section.empty() ? "item" : _section) << "=" << value << "\n";
        } else {
          _os << value << "\n";
        }
      }
      std::string str() const {
        return _os.str();
      }

     private:
      std::string machine_key(std::string const& key) const {
        std::string k;
        for (char c : key) {
          k += (c == ' ') ? '_' : c;
        }
        return _section.empty() ? k : _section + "." + k;
      }

      bool _machine;
      std::string _section;
      std::ostringstream _os;
    };

    template <Backend B>
    std::string join_elements(B const& b, std::vector<typename B::Element> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : " ") + b.format_element(x);
      }
      return out;
    }

    template <Backend B>
    std::string union_witness(B const& b, IndependenceVerdict<B> const& v) {
      std::string out;
      for (auto const& X : v.parts) {
        out += (out.empty() ? "" : " u ") + b.format_ideal(X);
      }
      return out + " = " + b.format_ideal(*v.target);
    }

    template <Backend B>
    std::string clifford_text(B const& b, CliffordVerdict<B> const& v) {
      if (v.outcome == Outcome::fails) {
        return "fails, witness (" + b.format_element(*v.s) + ", " + b.format_element(*v.t)
               + "), intersection " + b.format_ideal(*v.intersection) + " is not principal";
      }
      return std::string(to_string(v.outcome)) + " (" + v.tag + ")";
    }

    template <Backend B>
    std::string reversible_text(B const& b, ReversibilityVerdict<B> const& v) {
      switch (v.outcome) {
        case Outcome::holds:
          return "yes (" + v.tag + ")";
        case Outcome::fails:
          return "no, witness " + reversibility_witness(b, v) + " with disjoint principal ideals";
        default:
          return "inconclusive (" + v.tag + ")";
      }
    }

    template <Backend B>
    std::string ordered_text(B const& b) {
      if (b.units_trivial()) {
        return "yes (1 is the only unit)";
      }
      for (auto const& x : b.enumerate_window(2)) {
        if (x != b.identity() && b.left_divide(x, b.identity())) {
          return "no, unit " + b.format_element(x);
        }
      }
      return "no";
    }

    template <Backend B>
    std::string do_analyze(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      std::span<typename B::Element const> g(gens);
      auto const& bd = opt.bounds;
      Report r(opt.machine);

      r.section("backend");
      r.field("name", b.name());
      r.field("kind", std::string(to_string(B::kind)));
      r.field("generators", join_elements(b, gens));
      r.field("algebraically ordered", ordered_text(b));

      auto family = constructible_closure(b, g, bd.depth);
      auto W      = first_elements(b, bd.window);
      r.section("verdicts");
      r.field("left reversible", reversible_text(b, is_left_reversible(b)));
      r.field("clifford", clifford_text(b, clifford_check(b)));
      auto ind = independence_check(b, family);
      r.field("independence", ind.independent
                                  ? "independent (depth " + std::to_string(bd.depth) + ")"
                                  : "fails, witness " + union_witness(b, ind));
      auto es = estar_unitary_report(b, g, bd.length, bd.samples, bd.seed, W);
      r.field("E*-unitary", es.mode + ", " + std::to_string(es.counterexamples)
                                + " counterexamples in " + std::to_string(es.premise_hits)
                                + " instances");

      auto hull = enumerate_hull(b, g, bd.length);
      auto L    = truncate_semilattice(b, family);
      r.section("sizes");
      r.field("depth", std::to_string(bd.depth));
      r.field("ideal family", std::to_string(family.size()));
      r.field("length", std::to_string(bd.length));
      r.field("hull", std::to_string(hull.size()));
      r.field("zero in hull", std::any_of(hull.begin(), hull.end(),
                                          [](auto const& f) { return f.zero; })
                                  ? "yes"
                                  : "no");
      r.field("filters", std::to_string(enumerate_filters(L).size()));

      r.section("group");
      try {
        r.field("G(S)", group_of_S(b).to_string());
      } catch (UnsupportedOperation const& e) {
        r.field("G(S)", std::string("not defined: ") + e.what());
      }

      r.section("relations");
      r.field("window", std::to_string(W.size()));
      auto ctx = make_operator_context(b, g, bd.depth, bd.length, W);
      for (auto const& kind : relation_kinds()) {
        auto rep = verify_relation(b, kind, ctx);
        r.field(kind, std::to_string(rep.instances.size()) + " instances, "
                          + std::to_string(rep.columns_checked) + " columns, 0 mismatches");
      }
      auto ex = expectation_loop(b, ctx);
      r.field("expectation", std::to_string(ex.checked) + " elements, "
                                 + std::to_string(ex.vacuous) + " vacuous");
      return r.str();
    }

    template <Backend B>
    std::string do_ideals(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      auto family
          = constructible_closure(b, std::span<typename B::Element const>(gens), opt.bounds.depth);
      Report r(opt.machine);
      if (opt.machine) {
        r.section("ideal");
      }
      for (auto const& line : render_family(b, family)) {
        r.item(line);
      }
      return r.str();
    }

    template <Backend B>
    std::string do_hull(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      auto hull = enumerate_hull_words(b, std::span<typename B::Element const>(gens),
                                       opt.bounds.length);
      Report r(opt.machine);
      if (opt.machine) {
        r.section("hull");
      }
      for (auto const& f : hull.elements) {
        r.item(format_hull(b, f));
      }
      if (opt.oracle) {
        auto W = first_elements(b, opt.bounds.window);
        std::size_t compared = 0;
        for (auto const& f : hull.elements) {
          auto const& w = hull.words.at(f);
          auto c = compare_maps<B>(materialize(b, f, W), materialize(b, w, W));
          if (c.mismatches != 0) {
            throw InvariantViolation("oracle mismatch for " + format_hull(b, f) + " from word "
                                     + format_word(b, w) + " at "
                                     + b.format_element(W[*c.first_mismatch]));
          }
          compared += c.compared;
        }
        r.section("oracle");
        r.field("elements", std::to_string(hull.elements.size()));
        r.field("window", std::to_string(W.size()) + " elements, " + b.format_element(W[0])
                              + " .. " + b.format_element(W[W.size() - 1]));
        r.field("points compared", std::to_string(compared));
        r.field("mismatches", "0");
      }
      return r.str();
    }

    template <Backend B>
    std::string do_filters(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      auto family
          = constructible_closure(b, std::span<typename B::Element const>(gens), opt.bounds.depth);
      auto L = truncate_semilattice(b, family);
      Report r(opt.machine);
      if (opt.machine) {
        r.section("filter");
      }
      for (auto const& f : enumerate_filters(L)) {
        std::string line;
        for (auto i : minimal_elements<B>(f, L)) {
          line += (line.empty() ? "" : ", ") + b.format_ideal(L.elements[i]);
        }
        r.item(line);
      }
      return r.str();
    }

    template <Backend B>
    std::string do_group(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      Report r(opt.machine);
      r.section("group");
      r.field("G(S)", group_of_S(b).to_string());
      for (auto const& s : gens) {
        r.field("gamma(" + b.format_element(s) + ")", b.format_group(gamma(b, s)));
      }
      r.section("folner");
      if constexpr (B::kind == BackendKind::positive_cone
                    || B::kind == BackendKind::numerical) {
        auto family
            = constructible_closure(b, std::span<typename B::Element const>(gens), 2);
        for (auto const& X : family) {
          std::string row;
          std::int64_t c = 0;
          for (std::int64_t N : {10, 100, 1000}) {
            auto v = folner_mean(b, X, N);
            row += "N=" + std::to_string(N) + " " + v.mean.to_string() + ", ";
            c = v.constant;
          }
          r.field(b.format_ideal(X), row + "c=" + std::to_string(c));
        }
      } else {
        r.field("means", "1 on every ideal (S is a finite group)");
      }
      return r.str();
    }

    template <Backend B>
    std::string do_matrix(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      std::span<typename B::Element const> g(gens);
      auto W   = first_elements(b, opt.bounds.window);
      auto ctx = make_operator_context(b, g, opt.bounds.depth, opt.bounds.length, W);
      std::vector<std::pair<std::string, SparseMatrix>> mats;
      for (auto const& s : gens) {
        mats.emplace_back("V " + b.format_element(s), isometry_matrix(b, s, W).matrix);
        mats.emplace_back("Lambda lambda " + b.format_element(s),
                          regular_rep_matrix(b, lambda(b, s), ctx.HW).matrix);
      }
      for (auto const& X : ctx.family) {
        mats.emplace_back("chi " + b.format_ideal(X), char_projection(b, X, W).matrix);
      }
      mats.emplace_back("T", intertwiner_matrix(b, W, ctx.HW).matrix);

      Report r(opt.machine);
      r.section("windows");
      r.field("semigroup window", std::to_string(W.size()));
      r.field("hull window", std::to_string(ctx.HW.size()));
      r.section("matrices");
      if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
      }
      for (std::size_t i = 0; i < mats.size(); ++i) {
        auto const& [name, m] = mats[i];
        if (opt.out_dir.empty()) {
          r.field("matrix " + std::to_string(i), name);
          std::istringstream lines(m.to_coordinates());
          for (std::string line; std::getline(lines, line);) {
            r.item(line);
          }
        } else {
          std::string file = "m" + std::to_string(i) + ".txt";
          std::ofstream os(std::filesystem::path(opt.out_dir) / file);
          m.write_coordinates(os);
          r.field(file, name);
        }
      }
      r.section("relations");
      for (auto const& kind : relation_kinds()) {
        auto rep = verify_relation(b, kind, ctx);
        r.field(kind, std::to_string(rep.instances.size()) + " instances, "
                          + std::to_string(rep.columns_checked) + " columns, 0 mismatches");
      }
      return r.str();
    }

    template <Backend B>
    std::pair<bool, std::string> do_check(B const& b, Config const& cfg, RunOptions const& opt) {
      auto gens = generators_of(b, cfg);
      CheckSettings s;
      s.depth   = opt.bounds.depth;
      s.length  = opt.bounds.length;
      s.window  = opt.bounds.window;
      s.samples = opt.bounds.samples;
      s.seed    = opt.bounds.seed;
      auto results = run_checks(b, gens, s);
      Report r(opt.machine);
      r.section("check");
      r.field("backend", b.name());
      r.field("seed", std::to_string(s.seed));
      std::size_t failed = 0;
      for (auto const& c : results) {
        r.field(c.name, std::string(c.ok ? "ok" : "FAIL") + " (" + c.detail + ")");
        failed += c.ok ? 0 : 1;
      }
      r.section("summary");
      r.field("passed", std::to_string(results.size() - failed));
      r.field("failed", std::to_string(failed));
      return {failed == 0, r.str()};
    }

  }  // namespace

  std::vector<std::string> subcommands() {
    return {"analyze", "ideals", "hull", "filters", "group", "matrix", "check"};
  }

  RunResult run_command(std::string const& sub, Config const& cfg, RunOptions const& opt) {
    RunResult res;
    try {
      res.out = std::visit(
          [&](auto const& b) -> std::string {
            if (sub == "analyze") {
              return do_analyze(b, cfg, opt);
            }
            if (sub == "ideals") {
              return do_ideals(b, cfg, opt);
            }
            if (sub == "hull") {
              return do_hull(b, cfg, opt);
            }
            if (sub == "filters") {
              return do_filters(b, cfg, opt);
            }
            if (sub == "group") {
              return do_group(b, cfg, opt);
            }
            if (sub == "matrix") {
              return do_matrix(b, cfg, opt);
            }
            if (sub == "check") {
              auto [ok, text] = do_check(b, cfg, opt);
              if (!ok) {
                res.status = 1;
                res.err    = "invariant failure, see report\n";
              }
              return text;
            }
            throw UsageError("unknown subcommand '" + sub + "'");
          },
          cfg.semigroup);
    } catch (...) {
      res = error_result(std::current_exception());
    }
    return res;
  }

  RunResult error_result(std::exception_ptr error) {
    try {
      std::rethrow_exception(error);
    } catch (ParseError const& e) {
      return {2, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (UsageError const& e) {
      return {2, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (PreconditionError const& e) {
      return {2, "", std::string("precondition: ") + e.what() + "\n"};
    } catch (UnsupportedOperation const& e) {
      return {3, "", std::string("unsupported: ") + e.what() + "\n"};
    } catch (InvariantViolation const& e) {
      return {1, "", std::string("invariant failure: ") + e.what() + "\n"};
    } catch (std::overflow_error const& e) {
      return {3, "", std::string("unsupported: 64-bit overflow: ") + e.what() + "\n"};
    }
  }

}  // namespace lhull
