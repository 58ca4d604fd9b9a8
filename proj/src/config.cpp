#include "lhull/config.hpp"

#include <fstream>
#include <sstream>

#include "lhull/errors.hpp"

namespace lhull {

  namespace {
    std::size_t parse_size(std::string const& text,
                           std::size_t line,
                           std::string const& field) {
      try {
        auto v = parse_int(text);
        if (v < 0) {
          throw ParseError(line, field, "expected a nonnegative integer");
        }
        return static_cast<std::size_t>(v);
      } catch (ParseError const&) {
        throw;
      } catch (std::exception const&) {
        throw ParseError(line, field, "'" + text + "' is not an integer");
      }
    }

    std::vector<std::string> split_list(std::string_view text) {
      std::vector<std::string> out;
      std::string cur;
      for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
          if (!cur.empty()) {
            out.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) {
        out.push_back(cur);
      }
      return out;
    }

    AnySemigroup build(std::string const& kind,
                       std::string const& params,
                       std::size_t kind_line,
                       std::size_t params_line) {
      auto fail = [&](std::string const& msg) -> ParseError {
        return ParseError(params_line, "params", msg);
      };
      auto single = [&]() -> std::size_t {
        auto items = split_list(params);
        if (items.size() != 1) {
          throw fail("expected a single positive integer");
        }
        auto v = parse_size(items[0], params_line, "params");
        if (v == 0) {
          throw fail("expected a positive integer");
        }
        return v;
      };
      try {
        if (kind == "free_monoid") {
          auto k = single();
          if (k > 26) {
            throw fail("alphabet size must be at most 26");
          }
          return FreeMonoid(k);
        }
        if (kind == "positive_cone") {
          return PositiveCone(single());
        }
        if (kind == "numerical") {
          std::vector<std::int64_t> gens;
          for (auto const& item : split_list(params)) {
            gens.push_back(
                static_cast<std::int64_t>(parse_size(item, params_line, "params")));
          }
          return NumericalSemigroup(std::move(gens));
        }
        if (kind == "ax_plus_b") {
          if (!params.empty() && params != "Z") {
            throw fail("ax_plus_b takes no parameters (or 'Z')");
          }
          return AxPlusB{};
        }
        if (kind == "finite_table") {
          std::vector<std::vector<std::size_t>> rows;
          std::optional<std::size_t> identity;
          std::stringstream ss(params);
          std::string chunk;
          while (std::getline(ss, chunk, ';')) {
            chunk = trim(chunk);
            if (chunk.empty()) {
              continue;
            }
            if (chunk.rfind("identity=", 0) == 0) {
              identity = parse_size(trim(chunk.substr(9)), params_line, "params");
              continue;
            }
            std::vector<std::size_t> row;
            for (auto const& item : split_list(chunk)) {
              row.push_back(parse_size(item, params_line, "params"));
            }
            rows.push_back(std::move(row));
          }
          if (rows.empty()) {
            throw fail("finite_table needs table rows separated by ';'");
          }
          if (!identity) {
            // The row that fixes every index.
            for (std::size_t i = 0; i < rows.size() && !identity; ++i) {
              bool ok = rows[i].size() == rows.size();
              for (std::size_t j = 0; ok && j < rows[i].size(); ++j) {
                ok = rows[i][j] == j;
              }
              if (ok) {
                identity = i;
              }
            }
            if (!identity) {
              throw fail("table has no identity row");
            }
          }
          return FiniteTable(std::move(rows), *identity);
        }
      } catch (ParseError const&) {
        throw;
      } catch (std::exception const& e) {
        throw fail(e.what());
      }
      throw ParseError(kind_line, "kind", "unknown kind '" + kind + "'");
    }
  }  // namespace

  std::vector<std::string> split_elements(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      }
      if ((c == ' ' || c == '\t') && depth == 0) {
        if (!cur.empty()) {
          out.push_back(cur);
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) {
      out.push_back(cur);
    }
    return out;
  }

  Config parse_config(std::istream& in) {
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      std::string text = trim(raw.substr(0, hash));
      if (text.empty()) {
        continue;
      }
      auto eq = text.find('=');
      if (eq == std::string::npos) {
        throw ParseError(line, text, "expected 'key = value'");
      }
      std::string key = trim(text.substr(0, eq));
      std::string value = trim(text.substr(eq + 1));
      if (key != "kind" && key != "params" && key != "generators"
          && key != "bounds") {
        throw ParseError(line, key, "unknown field");
      }
      if (fields.count(key)) {
        throw ParseError(line, key, "duplicate field");
      }
      fields[key] = {value, line};
    }
    if (!fields.count("kind")) {
      throw ParseError(line, "kind", "missing required field");
    }
    auto [kind, kind_line] = fields["kind"];
    if (kind != "free_monoid" && kind != "positive_cone" && kind != "numerical"
        && kind != "ax_plus_b" && kind != "finite_table") {
      throw ParseError(kind_line, "kind", "unknown kind '" + kind + "'");
    }
    std::string params;
    std::size_t params_line = kind_line;
    if (fields.count("params")) {
      std::tie(params, params_line) = fields["params"];
    } else if (kind != "ax_plus_b") {
      throw ParseError(line, "params", "missing required field");
    }

    Config cfg;
    cfg.semigroup = build(kind, params, kind_line, params_line);

    if (fields.count("generators")) {
      auto [value, gline] = fields["generators"];
      cfg.generators = split_elements(value);
      if (cfg.generators.empty()) {
        throw ParseError(gline, "generators", "empty generator list");
      }
      std::visit(
          [&](auto const& b) {
            for (auto const& g : cfg.generators) {
              try {
                b.parse_element(g);
              } catch (std::exception const& e) {
                throw ParseError(gline, "generators", e.what());
              }
            }
          },
          cfg.semigroup);
    }
    if (fields.count("bounds")) {
      auto [value, bline] = fields["bounds"];
      for (auto const& item : split_list(value)) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw ParseError(bline, "bounds", "expected name=value, got '" + item + "'");
        }
        auto name = item.substr(0, eq);
        auto v    = parse_size(item.substr(eq + 1), bline, "bounds." + name);
        if (name == "depth") {
          cfg.bounds.depth = v;
        } else if (name == "length") {
          cfg.bounds.length = v;
        } else if (name == "window") {
          cfg.bounds.window = v;
        } else if (name == "seed") {
          cfg.bounds.seed = v;
        } else if (name == "samples") {
          cfg.bounds.samples = v;
        } else {
          throw ParseError(bline, "bounds." + name, "unknown bound");
        }
      }
    }
    return cfg;
  }

  Config parse_config_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_config(in);
  }

  Config load_config(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, "file", "cannot open '" + path + "'");
    }
    return parse_config(in);
  }

}  // namespace lhull
