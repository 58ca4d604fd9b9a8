#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lhull/analysis.hpp"
#include "lhull/config.hpp"
#include "lhull/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"left inverse hulls of left cancellative semigroups"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::size_t> depth, length, window, samples;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string out_dir;
  bool oracle = false;

  std::map<std::string, std::string> about{
      {"analyze", "verdicts, sizes, group and relation summary"},
      {"ideals", "constructible right ideals, one per line"},
      {"hull", "left inverse hull as 'grade | domain' lines"},
      {"filters", "filters of the truncated semilattice by minimal element"},
      {"group", "G(S), gamma of the generators and Folner means"},
      {"matrix", "window matrices in coordinate format and relation checks"},
      {"check", "full property suite; exit 1 on any failure"}};
  for (auto const& name : lhull::subcommands()) {
    auto* sub = app.add_subcommand(name, about[name]);
    sub->add_option("config", config_path, "semigroup configuration file")->required();
    sub->add_option("--depth", depth, "ideal closure depth");
    sub->add_option("--length", length, "hull word length");
    sub->add_option("--window", window, "window size");
    sub->add_option("--seed", seed, "sampling seed");
    sub->add_option("--samples", samples, "random samples per property");
    sub->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    if (name == "hull") {
      sub->add_flag("--oracle", oracle, "re-verify every element by materialization");
    }
    if (name == "matrix") {
      sub->add_option("--out", out_dir, "directory for coordinate files");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lhull::Config cfg;
  try {
    cfg = lhull::load_config(config_path);
  } catch (lhull::ParseError const& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return 2;
  }

  lhull::RunOptions opt;
  opt.bounds = cfg.bounds;
  if (depth) opt.bounds.depth = *depth;
  if (length) opt.bounds.length = *length;
  if (window) opt.bounds.window = *window;
  if (seed) opt.bounds.seed = *seed;
  if (samples) opt.bounds.samples = *samples;
  opt.machine = format == "machine";
  opt.oracle  = oracle;
  opt.out_dir = out_dir;

  auto* chosen = app.get_subcommands().front();
  auto res     = lhull::run_command(chosen->get_name(), cfg, opt);
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}
