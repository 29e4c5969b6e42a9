// Command-line front end: skewgrowth <command> [options].

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <skewgrowth/cli.hpp>

int main(int argc, char** argv) {
  using namespace skewgrowth;

  CLI::App app{"Growth and skew-growth series of cancellative monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig   config;
  std::string preset, file, max_degree, ground, format = "table", out_path;
  std::size_t nmax = 0;

  app.add_option("--preset", preset,
                 "builtin: example3, braid3, free:N, free:deg=D1,D2,..., "
                 "zpos:NMAX, mp:p=P1,P2,...:K=K, mp:p=pow2:K=K");
  app.add_option("--file", file, "presentation file");
  app.add_option("--max-degree", max_degree, "degree cutoff (rational)");
  app.add_option("--nmax", nmax, "cutoff for zpos");
  app.add_option("--ground", ground, "ground set, e.g. \"a,b\"");
  app.add_option("--format", format, "table, json or dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  app.add_option("--word-cap", config.word_cap,
                 "maximum candidate words per degree");
  app.add_option("--out", out_path, "write results here instead of stdout");
  app.add_option("--threads", config.threads, "threads for the poset pass");

  std::map<std::string, Command> const commands{
      {"growth", Command::growth},
      {"skew", Command::skew},
      {"towers", Command::towers},
      {"atoms", Command::atoms},
      {"verify", Command::verify},
      {"cancel-check", Command::cancel_check}};
  std::map<std::string, std::string> const help{
      {"growth", "growth series P"},
      {"skew", "skew-growth series N from towers"},
      {"towers", "tower forest over the ground set"},
      {"atoms", "minimal non-unit elements"},
      {"verify", "cancellativity, inversion, recursion and lcm checks"},
      {"cancel-check", "search for cancellativity violations"}};
  for (auto const& [name, cmd] : commands) {
    app.add_subcommand(name, help.at(name));
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  config.command = commands.at(app.get_subcommands().front()->get_name());
  config.format  = format == "json"  ? Format::json
                   : format == "dot" ? Format::dot
                                     : Format::table;
  if (!preset.empty()) {
    config.preset = preset;
  }
  if (!file.empty()) {
    config.file = file;
  }
  if (!ground.empty()) {
    config.ground = ground;
  }
  if (!max_degree.empty() && nmax != 0) {
    std::cerr << "error: give at most one of --max-degree and --nmax\n";
    return exit_usage;
  }
  if (!max_degree.empty()) {
    auto r = parse_rational(max_degree);
    if (!r) {
      std::cerr << "error: --max-degree must be INT or INT/INT\n";
      return exit_usage;
    }
    config.cutoff = *r;
  }
  if (nmax != 0) {
    if (preset.rfind("zpos", 0) != 0) {
      std::cerr << "error: --nmax applies to zpos only\n";
      return exit_usage;
    }
    config.cutoff = Rational(nmax);
  }

  if (out_path.empty()) {
    return run(config, std::cout, std::cerr);
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return exit_usage;
  }
  return run(config, out, std::cerr);
}
