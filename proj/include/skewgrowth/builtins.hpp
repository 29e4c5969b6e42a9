#ifndef SKEWGROWTH_BUILTINS_HPP_
#define SKEWGROWTH_BUILTINS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "degree_key.hpp"
#include "errors.hpp"
#include "families_mp.hpp"
#include "monoid_model.hpp"
#include "presentation.hpp"

namespace skewgrowth {

  struct ZposParams {
    std::uint32_t nmax = 100;
  };

  // What a builtin name resolves to, before a cutoff is chosen.
  struct Builtin {
    std::string                                    name;
    std::variant<Presentation, ZposParams, MpSpec> source;
    Rational default_cutoff{0};  // unused for zpos
  };

  using BuiltinParams = std::map<std::string, std::string>;

  namespace detail {
    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   pos = 0;
      while (true) {
        auto const next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string_view::npos) {
          return out;
        }
        pos = next + 1;
      }
    }

    inline Integer parse_integer(std::string_view s, std::string_view what) {
      s = trim(s);
      if (!all_digits(s)) {
        throw InvalidParams(std::string(what) + " must be a non-negative "
                            "integer, got '" + std::string(s) + "'");
      }
      return Integer(std::string(s));
    }

    inline std::string generator_name(std::size_t i, std::size_t n) {
      if (n <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "g" + std::to_string(i);
    }

    inline std::string const& require(BuiltinParams const& params,
                                      std::string const&   key,
                                      std::string_view     name) {
      auto it = params.find(key);
      if (it == params.end()) {
        throw InvalidParams(std::string(name) + " needs parameter '" + key
                            + "'");
      }
      return it->second;
    }

    inline void only(BuiltinParams const&                params,
                     std::vector<std::string> const&     allowed,
                     std::string_view                    name) {
      for (auto const& [k, v] : params) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
          throw InvalidParams(std::string(name) + " has no parameter '" + k
                              + "'");
        }
      }
    }
  }  // namespace detail

  // free (n or deg=d1,d2,...), example3, braid3, zpos (nmax), mp (p, K).
  inline Builtin builtin(std::string_view name, BuiltinParams const& params) {
    if (name == "free") {
      detail::only(params, {"n", "deg"}, name);
      std::vector<Rational> degrees;
      if (auto it = params.find("deg"); it != params.end()) {
        for (auto part : detail::split(it->second, ',')) {
          auto r = parse_rational(part);
          if (!r || *r <= 0) {
            throw InvalidParams("free: bad degree '" + std::string(part)
                                + "'");
          }
          degrees.push_back(*r);
        }
        if (params.count("n")
            && detail::parse_integer(params.at("n"), "n") != degrees.size()) {
          throw InvalidParams("free: n disagrees with the degree list");
        }
      } else {
        auto const n = detail::parse_integer(
            detail::require(params, "n", name), "n");
        if (n < 1 || n > 1000) {
          throw InvalidParams("free needs 1 <= n <= 1000");
        }
        degrees.assign(static_cast<std::size_t>(n), Rational(1));
      }
      std::vector<Generator> gens;
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        gens.push_back({detail::generator_name(i, degrees.size()), degrees[i]});
      }
      return {"free", Presentation::build(std::move(gens), {}), Rational(8)};
    }
    if (name == "example3") {
      detail::only(params, {}, name);
      return {"example3",
              parse_presentation("gen a : 1\ngen b : 1\n"
                                 "rel a a = b b\nrel a b = b a\n"),
              Rational(12)};
    }
    if (name == "braid3") {
      detail::only(params, {}, name);
      return {"braid3",
              parse_presentation("gen a : 1\ngen b : 1\nrel a b a = b a b\n"),
              Rational(10)};
    }
    if (name == "zpos") {
      detail::only(params, {"nmax"}, name);
      ZposParams z;
      if (auto it = params.find("nmax"); it != params.end()) {
        auto const n = detail::parse_integer(it->second, "nmax");
        if (n < 2 || n > 100'000'000) {
          throw InvalidParams("zpos needs 2 <= nmax <= 100000000");
        }
        z.nmax = n.convert_to<std::uint32_t>();
      }
      return {"zpos", z, Rational(0)};
    }
    if (name == "mp") {
      detail::only(params, {"p", "K"}, name);
      auto const&          p = detail::require(params, "p", name);
      std::optional<std::size_t> K;
      if (auto it = params.find("K"); it != params.end()) {
        auto const k = detail::parse_integer(it->second, "K");
        if (k < 1 || k > 24) {
          throw InvalidParams("mp needs 1 <= K <= 24");
        }
        K = k.convert_to<std::size_t>();
      }
      if (p == "pow2") {
        if (!K) {
          throw InvalidParams("mp with p=pow2 needs K");
        }
        return {"mp", MpSpec::pow2(*K), Rational(8)};
      }
      std::vector<Integer> ps;
      for (auto part : detail::split(p, ',')) {
        ps.push_back(detail::parse_integer(part, "p_k"));
      }
      auto const k = K.value_or(ps.size());
      return {"mp", MpSpec(std::move(ps), k), Rational(8)};
    }
    throw UnknownBuiltin("unknown builtin '" + std::string(name)
                         + "' (expected free, example3, braid3, zpos or mp)");
  }

  // "example3", "free:2", "free:deg=1,1/2", "zpos:50", "zpos:nmax=50",
  // "mp:p=4,8,16:K=3", "mp:p=pow2:K=3".  A bare value is the first
  // parameter of the builtin.
  inline Builtin builtin(std::string_view preset) {
    auto const parts = detail::split(preset, ':');
    std::string_view const name = detail::trim(parts.front());
    BuiltinParams          params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      auto const item = detail::trim(parts[i]);
      auto const eq   = item.find('=');
      std::string key, value;
      if (eq == std::string_view::npos) {
        key = name == "zpos" ? "nmax" : name == "free" ? "n" : "";
        if (key.empty() || i != 1) {
          throw InvalidParams("bad preset parameter '" + std::string(item)
                              + "'");
        }
        value = item;
      } else {
        key   = detail::trim(item.substr(0, eq));
        value = detail::trim(item.substr(eq + 1));
      }
      if (!params.emplace(key, value).second) {
        throw InvalidParams("repeated preset parameter '" + key + "'");
      }
    }
    return builtin(name, params);
  }

  // The model of a builtin, cut off at `cutoff` (its default when absent).
  // For zpos the cutoff is nmax.
  inline std::unique_ptr<MonoidModel>
  make_model(Builtin const&                 b,
             std::optional<Rational> const& cutoff  = std::nullopt,
             EnumerationOptions             options = {}) {
    if (auto const* z = std::get_if<ZposParams>(&b.source)) {
      std::uint32_t nmax = z->nmax;
      if (cutoff) {
        if (boost::multiprecision::denominator(*cutoff) != 1 || *cutoff < 2) {
          throw InvalidParams("zpos needs an integer nmax >= 2");
        }
        nmax = boost::multiprecision::numerator(*cutoff)
                   .convert_to<std::uint32_t>();
      }
      return std::make_unique<MultIntModel>(nmax);
    }
    Rational const c = cutoff.value_or(b.default_cutoff);
    if (auto const* p = std::get_if<Presentation>(&b.source)) {
      return std::make_unique<RewriteModel>(*p, c, options);
    }
    return std::make_unique<MpModel>(std::get<MpSpec>(b.source), c);
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_BUILTINS_HPP_
