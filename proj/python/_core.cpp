#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lhull/analysis.hpp"
#include "lhull/config.hpp"
#include "lhull/errors.hpp"
#include "lhull/filters.hpp"
#include "lhull/group_image.hpp"
#include "lhull/hull.hpp"
#include "lhull/ideals.hpp"

namespace py = pybind11;
using namespace lhull;

namespace {

  // A parsed configuration; elements cross the boundary as canonical text.
  class Semigroup {
   public:
    explicit Semigroup(std::string const& text) : _cfg(parse_config_text(text)) {}

    template <typename Fn>
    auto visit(Fn&& fn) const {
      return std::visit(std::forward<Fn>(fn), _cfg.semigroup);
    }

    std::string name() const {
      return visit([](auto const& b) { return b.name(); });
    }

    std::string kind() const {
      return visit([](auto const& b) { return std::string(to_string(b.kind)); });
    }

    std::vector<std::string> generators() const {
      return visit([&](auto const& b) {
        std::vector<std::string> out;
        for (auto const& g : generators_of(b, _cfg)) {
          out.push_back(b.format_element(g));
        }
        return out;
      });
    }

    std::string multiply(std::string const& x, std::string const& y) const {
      return visit([&](auto const& b) {
        return b.format_element(b.multiply(b.parse_element(x), b.parse_element(y)));
      });
    }

    std::optional<std::string> left_divide(std::string const& s, std::string const& x) const {
      return visit([&](auto const& b) -> std::optional<std::string> {
        auto r = b.left_divide(b.parse_element(s), b.parse_element(x));
        if (!r) {
          return std::nullopt;
        }
        return b.format_element(*r);
      });
    }

    std::vector<std::string> window(std::size_t bound) const {
      return visit([&](auto const& b) {
        std::vector<std::string> out;
        for (auto const& x : b.enumerate_window(bound)) {
          out.push_back(b.format_element(x));
        }
        return out;
      });
    }

    std::vector<std::string> ideals(std::size_t depth) const {
      return visit([&](auto const& b) {
        using B   = std::decay_t<decltype(b)>;
        auto gens = generators_of(b, _cfg);
        return render_family(b, constructible_closure(b, std::span<typename B::Element const>(gens), depth));
      });
    }

    std::vector<std::string> hull(std::size_t length) const {
      return visit([&](auto const& b) {
        using B   = std::decay_t<decltype(b)>;
        auto gens = generators_of(b, _cfg);
        std::vector<std::string> out;
        for (auto const& f : enumerate_hull(b, std::span<typename B::Element const>(gens), length)) {
          out.push_back(format_hull(b, f));
        }
        return out;
      });
    }

    std::vector<std::vector<std::string>> filters(std::size_t depth) const {
      return visit([&](auto const& b) {
        using B   = std::decay_t<decltype(b)>;
        auto gens = generators_of(b, _cfg);
        auto L    = truncate_semilattice(
            b, constructible_closure(b, std::span<typename B::Element const>(gens), depth));
        std::vector<std::vector<std::string>> out;
        for (auto const& f : enumerate_filters(L)) {
          std::vector<std::string> row;
          for (auto i : minimal_elements<B>(f, L)) {
            row.push_back(b.format_ideal(L.elements[i]));
          }
          out.push_back(row);
        }
        return out;
      });
    }

    std::string clifford() const {
      return visit([](auto const& b) { return std::string(to_string(clifford_check(b).outcome)); });
    }

    bool independent(std::size_t depth) const {
      return visit([&](auto const& b) {
        using B   = std::decay_t<decltype(b)>;
        auto gens = generators_of(b, _cfg);
        return independence_check(
                   b, constructible_closure(b, std::span<typename B::Element const>(gens), depth))
            .independent;
      });
    }

    bool left_reversible() const {
      return visit([](auto const& b) { return is_left_reversible(b).outcome == Outcome::holds; });
    }

    std::string group() const {
      return visit([](auto const& b) { return group_of_S(b).to_string(); });
    }

    py::tuple run(std::string const& subcommand, bool machine) const {
      RunOptions opt;
      opt.bounds  = _cfg.bounds;
      opt.machine = machine;
      auto r      = run_command(subcommand, _cfg, opt);
      return py::make_tuple(r.status, r.out, r.err);
    }

   private:
    Config _cfg;
  };

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Left inverse hulls of left cancellative semigroups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation", PyExc_NotImplementedError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init<std::string const&>(), "Parse a configuration text", py::arg("config"))
      .def_property_readonly("name", &Semigroup::name)
      .def_property_readonly("kind", &Semigroup::kind)
      .def_property_readonly("generators", &Semigroup::generators)
      .def("multiply", &Semigroup::multiply, py::arg("x"), py::arg("y"))
      .def("left_divide", &Semigroup::left_divide, "r with s r = x, or None", py::arg("s"), py::arg("x"))
      .def("window", &Semigroup::window, py::arg("bound"))
      .def("ideals", &Semigroup::ideals, py::arg("depth") = 2)
      .def("hull", &Semigroup::hull, "Lines 'grade | domain'", py::arg("length") = 2)
      .def("filters", &Semigroup::filters, "Minimal elements of each filter", py::arg("depth") = 2)
      .def("clifford", &Semigroup::clifford)
      .def("independent", &Semigroup::independent, py::arg("depth") = 2)
      .def("left_reversible", &Semigroup::left_reversible)
      .def("group", &Semigroup::group)
      .def("run", &Semigroup::run, "(status, stdout, stderr) of a CLI subcommand",
           py::arg("subcommand"), py::arg("machine") = false)
      .def("__repr__", [](Semigroup const& s) { return "<Semigroup " + s.name() + ">"; });

  m.def("subcommands", &subcommands);
}
