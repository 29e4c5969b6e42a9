#ifndef SKEWGROWTH_DIRICHLET_HPP_
#define SKEWGROWTH_DIRICHLET_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

#include "degree_key.hpp"
#include "errors.hpp"

namespace skewgrowth {

  // A formal Dirichlet series sum_d a_d t^d with integer coefficients,
  // truncated at a cutoff.  Only keys <= cutoff are ever stored and zero
  // coefficients are never stored, so equality is plain member equality.
  class Series {
   public:
    using Terms = std::map<DegreeKey, Integer>;

    Series(KeyKind kind, DegreeKey cutoff)
        : _kind(kind), _cutoff(std::move(cutoff)) {
      if (_cutoff.kind() != kind) {
        throw KeyKindMismatch("series cutoff has the wrong key kind");
      }
    }

    static Series one(KeyKind kind, DegreeKey cutoff) {
      Series s(kind, std::move(cutoff));
      s.add_term(DegreeKey::zero(kind), 1);
      return s;
    }

    KeyKind kind() const noexcept {
      return _kind;
    }

    DegreeKey const& cutoff() const noexcept {
      return _cutoff;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    // Adds c t^key; keys above the cutoff are truncated away.
    void add_term(DegreeKey const& key, Integer const& c) {
      if (key.kind() != _kind) {
        throw KeyKindMismatch("term key has the wrong key kind");
      }
      if (key > _cutoff || c == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    Integer coefficient(DegreeKey const& key) const {
      auto it = _terms.find(key);
      return it == _terms.end() ? Integer(0) : it->second;
    }

    friend bool operator==(Series const& a, Series const& b) {
      return a._kind == b._kind && a._cutoff == b._cutoff
             && a._terms == b._terms;
    }

   private:
    KeyKind   _kind;
    DegreeKey _cutoff;
    Terms     _terms;
  };

  namespace detail {
    inline void check_compatible(Series const& f, Series const& g) {
      if (f.kind() != g.kind()) {
        throw KeyKindMismatch("series have different key kinds");
      }
      if (f.cutoff() != g.cutoff()) {
        throw CutoffMismatch("series have different cutoffs ("
                             + f.cutoff().str() + " vs " + g.cutoff().str()
                             + ")");
      }
    }
  }  // namespace detail

  // f restricted to keys <= cutoff (which must not exceed f's own cutoff).
  inline Series truncate(Series const& f, DegreeKey const& cutoff) {
    if (cutoff > f.cutoff()) {
      throw CutoffMismatch("cannot extend a series beyond its cutoff "
                           + f.cutoff().str());
    }
    Series out(f.kind(), cutoff);
    for (auto const& [k, c] : f.terms()) {
      out.add_term(k, c);
    }
    return out;
  }

  inline Series series_add(Series const& f, Series const& g) {
    detail::check_compatible(f, g);
    Series out = f;
    for (auto const& [k, c] : g.terms()) {
      out.add_term(k, c);
    }
    return out;
  }

  inline Series series_negate(Series const& f) {
    Series out(f.kind(), f.cutoff());
    for (auto const& [k, c] : f.terms()) {
      out.add_term(k, -c);
    }
    return out;
  }

  // Truncated convolution: the coefficient at d sums a_e b_e' over e + e' = d.
  inline Series series_mul(Series const& f, Series const& g) {
    detail::check_compatible(f, g);
    Series out(f.kind(), f.cutoff());
    for (auto const& [a, fa] : f.terms()) {
      for (auto const& [b, gb] : g.terms()) {
        DegreeKey c = a + b;
        // Keys are visited in increasing order and + is monotone.
        if (c > out.cutoff()) {
          break;
        }
        out.add_term(c, fa * gb);
      }
    }
    return out;
  }

  // The unique g with f * g = 1 up to the cutoff, solved key by key in
  // increasing order.  The support of g lies in the additive closure of the
  // positive support of f, which is what the worklist walks.
  inline Series series_invert(Series const& f) {
    auto const zero = DegreeKey::zero(f.kind());
    Integer const c0 = f.coefficient(zero);
    if (c0 != 1 && c0 != -1) {
      throw NonUnitConstantTerm("constant term is " + c0.str()
                                + ", expected +1 or -1");
    }
    std::vector<std::pair<DegreeKey, Integer>> positive;
    for (auto const& [k, c] : f.terms()) {
      if (!k.is_zero()) {
        positive.emplace_back(k, c);
      }
    }

    Series              g(f.kind(), f.cutoff());
    std::set<DegreeKey> pending{zero};
    while (!pending.empty()) {
      DegreeKey d = *pending.begin();
      pending.erase(pending.begin());
      Integer gd;
      if (d.is_zero()) {
        gd = c0;  // 1 / c0 for c0 = +-1
      } else {
        Integer acc = 0;
        for (auto const& [e, fe] : positive) {
          if (e > d) {
            break;
          }
          if (auto rest = d.minus(e)) {
            acc += fe * g.coefficient(*rest);
          }
        }
        gd = -c0 * acc;
      }
      g.add_term(d, gd);
      for (auto const& [e, fe] : positive) {
        DegreeKey next = d + e;
        if (next > f.cutoff()) {
          break;
        }
        pending.insert(std::move(next));
      }
    }
    return g;
  }

  // The smallest key at which f and g differ, or nullopt if they agree.
  inline std::optional<DegreeKey> first_difference(Series const& f,
                                                   Series const& g) {
    std::optional<DegreeKey> best;
    auto consider = [&](DegreeKey const& k) {
      if (f.coefficient(k) != g.coefficient(k) && (!best || k < *best)) {
        best = k;
      }
    };
    for (auto const& [k, c] : f.terms()) {
      consider(k);
    }
    for (auto const& [k, c] : g.terms()) {
      consider(k);
    }
    return best;
  }

  // Numeric partial sum sum_d a_d t0^d over the stored support.  For multint
  // keys the exponent is log n, so t0 = exp(-s) gives sum_n a_n n^{-s}.
  // No convergence claim is made.
  inline double evaluate_partial(Series const& f, double t0) {
    if (!(t0 > 0.0 && t0 < 1.0)) {
      throw DomainError("evaluation point must lie in (0, 1)");
    }
    double const log_t = std::log(t0);
    double       sum   = 0.0;
    for (auto const& [k, c] : f.terms()) {
      sum += c.convert_to<double>() * std::exp(k.to_double() * log_t);
    }
    return sum;
  }

  // sum_n a_n n^{-s0} for a multint series.
  inline double evaluate_dirichlet(Series const& f, double s0) {
    if (f.kind() != KeyKind::multint) {
      throw KeyKindMismatch("evaluate_dirichlet needs a multint series");
    }
    if (!(s0 > 0.0)) {
      throw DomainError("s0 must be positive");
    }
    double sum = 0.0;
    for (auto const& [k, c] : f.terms()) {
      sum += c.convert_to<double>()
             * std::pow(k.value().convert_to<double>(), -s0);
    }
    return sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  // Rational keys render as "p/q" strings, multint keys as JSON integers.
  inline nlohmann::json key_to_json(DegreeKey const& k) {
    if (k.kind() == KeyKind::rational) {
      return k.str();
    }
    Integer const n = k.integer();
    if (n <= std::numeric_limits<std::int64_t>::max()) {
      return n.convert_to<std::int64_t>();
    }
    return n.str();
  }

  inline nlohmann::json to_json(Series const& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& [k, c] : f.terms()) {
      terms.push_back(nlohmann::json::array({key_to_json(k), c.str()}));
    }
    return {{"key_kind", std::string(to_string(f.kind()))},
            {"cutoff", key_to_json(f.cutoff())},
            {"terms", terms}};
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_DIRICHLET_HPP_
