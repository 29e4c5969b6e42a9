#ifndef SKEWGROWTH_CLI_HPP_
#define SKEWGROWTH_CLI_HPP_

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "builtins.hpp"
#include "checks.hpp"
#include "degree_key.hpp"
#include "dirichlet.hpp"
#include "divposet.hpp"
#include "errors.hpp"
#include "families_mp.hpp"
#include "monoid_model.hpp"
#include "presentation.hpp"
#include "towers.hpp"

namespace skewgrowth {

  enum class Command { growth, skew, towers, atoms, verify, cancel_check };
  enum class Format { table, json, dot };

  struct RunConfig {
    Command                    command = Command::growth;
    std::optional<std::string> preset;
    std::optional<std::string> file;
    std::optional<Rational>    cutoff;  // --max-degree, or --nmax for zpos
    std::optional<std::string> ground;
    Format                     format   = Format::table;
    std::size_t                word_cap = EnumerationOptions{}.word_cap;
    unsigned                   threads  = 1;
  };

  // Exit codes of run().
  inline constexpr int exit_ok         = 0;
  inline constexpr int exit_check_fail = 1;
  inline constexpr int exit_usage      = 2;

  namespace detail {
    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot read '" + path + "'");
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    // The exception's class name, for diagnostics.
    inline std::string error_kind(Error const& e) {
#define SKEWGROWTH_KIND(T)              \
  if (dynamic_cast<T const*>(&e)) {     \
    return #T;                          \
  }
      SKEWGROWTH_KIND(SyntaxError)
      SKEWGROWTH_KIND(UnknownSymbol)
      SKEWGROWTH_KIND(NonHomogeneousRelation)
      SKEWGROWTH_KIND(NonPositiveDegree)
      SKEWGROWTH_KIND(UnknownBuiltin)
      SKEWGROWTH_KIND(InvalidParams)
      SKEWGROWTH_KIND(IndexOutOfRange)
      SKEWGROWTH_KIND(MalformedDyadic)
      SKEWGROWTH_KIND(CutoffTooLarge)
      SKEWGROWTH_KIND(EmptyAlphabet)
      SKEWGROWTH_KIND(EmptyIndexSet)
      SKEWGROWTH_KIND(InvalidGround)
      SKEWGROWTH_KIND(KeyKindMismatch)
      SKEWGROWTH_KIND(CutoffMismatch)
      SKEWGROWTH_KIND(NonUnitConstantTerm)
      SKEWGROWTH_KIND(DomainError)
#undef SKEWGROWTH_KIND
      return "Error";
    }

    inline void series_table(std::ostream& out, Series const& f) {
      out << std::left << std::setw(12) << "degree" << "coefficient\n";
      for (auto const& [k, c] : f.terms()) {
        out << std::left << std::setw(12) << k.str() << c.str() << '\n';
      }
    }

    inline void report_line(std::ostream& out, CheckReport const& r) {
      out << r.name << ": " << to_string(r.status);
      if (r.counterexample) {
        out << ' ' << r.counterexample->dump();
      }
      out << '\n';
      for (auto const& n : r.notes) {
        out << "  " << n << '\n';
      }
    }
  }  // namespace detail

  // Executes one command.  Results go to `out`, diagnostics to `err`.
  inline int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      if (config.preset.has_value() == config.file.has_value()) {
        err << "error: give exactly one of --preset and --file\n";
        return exit_usage;
      }
      if (config.format == Format::dot && config.command != Command::towers) {
        err << "error: dot output is only available for towers\n";
        return exit_usage;
      }
      if (config.cutoff && *config.cutoff <= 0) {
        err << "error: the cutoff must be positive\n";
        return exit_usage;
      }
      EnumerationOptions options;
      options.word_cap = config.word_cap;

      std::unique_ptr<MonoidModel> model;
      if (config.preset) {
        model = make_model(builtin(*config.preset), config.cutoff, options);
      } else {
        model = std::make_unique<RewriteModel>(
            parse_presentation(detail::read_file(*config.file)),
            config.cutoff.value_or(Rational(8)),
            options);
      }
      if (auto const* mp = dynamic_cast<MpModel const*>(model.get())) {
        for (auto const& w : mp->warnings()) {
          err << "warning: " << w << '\n';
        }
      }

      std::optional<DivPoset>   poset;
      std::optional<ElementSet> ground;
      auto need_poset = [&]() -> DivPoset const& {
        if (!poset) {
          poset.emplace(*model, config.threads);
        }
        return *poset;
      };
      auto need_ground = [&]() -> ElementSet const& {
        if (!ground) {
          ground = config.ground ? model->parse_element_set(*config.ground)
                                 : model->atoms();
        }
        return *ground;
      };

      switch (config.command) {
        case Command::growth: {
          auto const P = growth_series(*model);
          if (config.format == Format::json) {
            out << to_json(P).dump() << '\n';
          } else {
            detail::series_table(out, P);
          }
          return exit_ok;
        }
        case Command::skew: {
          auto const N = skew_growth(need_poset(), need_ground());
          if (config.format == Format::json) {
            out << to_json(N).dump() << '\n';
          } else {
            detail::series_table(out, N);
          }
          return exit_ok;
        }
        case Command::towers: {
          auto const forest = enumerate_towers(need_poset(), need_ground());
          if (config.format == Format::json) {
            out << forest_to_json(*model, forest).dump(2) << '\n';
          } else if (config.format == Format::dot) {
            out << forest_to_dot(*model, forest);
          } else {
            out << std::left << std::setw(6) << "id" << std::setw(8)
                << "parent" << std::setw(8) << "height" << std::setw(6)
                << "sign" << "top / stages\n";
            for (std::size_t i = 0; i < forest.towers.size(); ++i) {
              auto const& T = forest.towers[i];
              out << std::left << std::setw(6) << i << std::setw(8)
                  << (i == 0 ? std::string("-")
                             : std::to_string(forest.parent[i]))
                  << std::setw(8) << T.height() << std::setw(6)
                  << (tower_sign(T) > 0 ? "+1" : "-1")
                  << detail::brace(*model, tower_top(T));
              for (auto const& J : T.stages) {
                out << ' ' << detail::brace(*model, J);
              }
              out << '\n';
            }
          }
          return exit_ok;
        }
        case Command::atoms: {
          auto const atoms = model->atoms();
          if (config.format == Format::json) {
            nlohmann::json a = nlohmann::json::array();
            for (auto u : atoms) {
              a.push_back({{"element", model->label(u)},
                           {"degree", key_to_json(model->degree(u))}});
            }
            out << nlohmann::json{{"atoms", a}}.dump() << '\n';
          } else {
            out << std::left << std::setw(16) << "element" << "degree\n";
            for (auto u : atoms) {
              out << std::left << std::setw(16) << model->label(u)
                  << model->degree(u).str() << '\n';
            }
          }
          return exit_ok;
        }
        case Command::verify: {
          auto const& P = need_poset();
          std::vector<CheckReport> reports{check_cancellative(*model),
                                           check_inversion(P, need_ground()),
                                           check_recursion(P, need_ground()),
                                           check_lcm_reduction(P)};
          if (auto const* mp = dynamic_cast<MpModel const*>(model.get())) {
            reports.push_back(
                check_mp_delta_shape(*mp, enumerate_towers(P, need_ground())));
          }
          bool ok = true;
          for (auto const& r : reports) {
            ok = ok && r.status != CheckReport::Status::fail;
          }
          if (config.format == Format::json) {
            nlohmann::json a = nlohmann::json::array();
            for (auto const& r : reports) {
              a.push_back(to_json(r));
            }
            out << nlohmann::json{{"reports", a}}.dump(2) << '\n';
          } else {
            for (auto const& r : reports) {
              detail::report_line(out, r);
            }
          }
          return ok ? exit_ok : exit_check_fail;
        }
        case Command::cancel_check: {
          auto const r = check_cancellative(*model);
          if (config.format == Format::json) {
            out << to_json(r).dump(2) << '\n';
          } else {
            detail::report_line(out, r);
          }
          return r.passed() ? exit_ok : exit_check_fail;
        }
      }
      return exit_ok;
    } catch (Error const& e) {
      err << "error: " << detail::error_kind(e) << ": " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_CLI_HPP_
