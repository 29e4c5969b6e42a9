#ifndef SKEWGROWTH_FAMILIES_MP_HPP_
#define SKEWGROWTH_FAMILIES_MP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "degree_key.hpp"
#include "errors.hpp"
#include "monoid_model.hpp"
#include "presentation.hpp"

namespace skewgrowth {

  // Structure constants of the commutative monoid
  //
  //   < a_0, a_1, ... | a_k^2 = a_0^{p_k} a_{k-1} (k >= 1), a_k a_l = a_l a_k >
  //
  // truncated at generator depth K.  p may carry entries beyond K; they are
  // only used to check that the truncation is invisible below a cutoff.
  class MpSpec {
   public:
    MpSpec(std::vector<Integer> p, std::size_t K) : _p(std::move(p)), _K(K) {
      if (_K == 0) {
        throw InvalidParams("mp needs K >= 1");
      }
      if (_p.size() < _K) {
        throw InvalidParams("mp needs at least K = " + std::to_string(_K)
                            + " structure constants, got "
                            + std::to_string(_p.size()));
      }
      for (auto const& x : _p) {
        if (x < 0) {
          throw InvalidParams("mp structure constants must be >= 0");
        }
      }
      if (_p[0] <= 0 || _p[0] % 2 != 0) {
        throw InvalidParams("mp needs p_1 to be a positive even integer, got "
                            + _p[0].str());
      }
      _degrees.push_back(Rational(1));
      for (std::size_t k = 1; k <= _p.size(); ++k) {
        // d_k = 1/2^k + sum_{i<=k} p_i / 2^{k-i+1} = (d_{k-1} + p_k) / 2
        _degrees.push_back((_degrees.back() + Rational(_p[k - 1])) / 2);
      }
    }

    // p_k = 2^{k+1}, with one constant past K so the truncation is checked.
    static MpSpec pow2(std::size_t K) {
      std::vector<Integer> p;
      for (std::size_t k = 1; k <= K + 1; ++k) {
        p.push_back(Integer(1) << (k + 1));
      }
      return MpSpec(std::move(p), K);
    }

    std::size_t K() const noexcept {
      return _K;
    }

    // p_k for 1 <= k <= p().size().
    Integer const& p(std::size_t k) const {
      if (k == 0 || k > _p.size()) {
        throw IndexOutOfRange("p_" + std::to_string(k) + " is not defined");
      }
      return _p[k - 1];
    }

    std::vector<Integer> const& constants() const noexcept {
      return _p;
    }

    // d_k for 0 <= k <= number of known constants.
    Rational const& degree(std::size_t k) const {
      if (k >= _degrees.size()) {
        throw IndexOutOfRange("d_" + std::to_string(k) + " is not known");
      }
      return _degrees[k];
    }

    std::size_t known_depth() const noexcept {
      return _p.size();
    }

   private:
    std::vector<Integer>  _p;
    std::size_t           _K;
    std::vector<Rational> _degrees;
  };

  // d_k as an exact degree key, for 0 <= k <= K.
  inline DegreeKey mp_degree(MpSpec const& spec, std::size_t k) {
    if (k > spec.K()) {
      throw IndexOutOfRange("generator a_" + std::to_string(k)
                            + " is beyond K = " + std::to_string(spec.K()));
    }
    return DegreeKey::rational(spec.degree(k));
  }

  // Normal form a_0^n prod_k a_k^{eps_k} with eps_k in {0, 1}.
  struct MpElement {
    Integer                   n = 0;
    std::vector<std::uint8_t> eps;  // eps[k-1] for k = 1..K

    std::size_t depth() const {
      for (std::size_t k = eps.size(); k > 0; --k) {
        if (eps[k - 1] != 0) {
          return k;
        }
      }
      return 0;
    }

    friend bool operator==(MpElement const&, MpElement const&) = default;
  };

  inline MpElement mp_unit(MpSpec const& spec) {
    return {0, std::vector<std::uint8_t>(spec.K(), 0)};
  }

  inline MpElement mp_generator(MpSpec const& spec, std::size_t k) {
    if (k > spec.K()) {
      throw IndexOutOfRange("generator a_" + std::to_string(k)
                            + " is beyond K = " + std::to_string(spec.K()));
    }
    MpElement u = mp_unit(spec);
    if (k == 0) {
      u.n = 1;
    } else {
      u.eps[k - 1] = 1;
    }
    return u;
  }

  inline Rational mp_element_degree(MpSpec const& spec, MpElement const& u) {
    Rational d(u.n);
    for (std::size_t k = 1; k <= u.eps.size(); ++k) {
      if (u.eps[k - 1] != 0) {
        d += spec.degree(k);
      }
    }
    return d;
  }

  // Add integral parts and 2-decimal parts, then carry every a_k^2 into
  // a_0^{p_k} a_{k-1}, from the deepest generator down.
  inline MpElement mp_product(MpSpec const&    spec,
                              MpElement const& u,
                              MpElement const& v) {
    std::vector<unsigned> c(spec.K(), 0);
    for (std::size_t i = 0; i < spec.K(); ++i) {
      c[i] = u.eps.at(i) + v.eps.at(i);
    }
    MpElement out{u.n + v.n, std::vector<std::uint8_t>(spec.K(), 0)};
    for (std::size_t k = spec.K(); k >= 1; --k) {
      while (c[k - 1] >= 2) {
        c[k - 1] -= 2;
        out.n += spec.p(k);
        if (k == 1) {
          out.n += 1;
        } else {
          c[k - 2] += 1;
        }
      }
      out.eps[k - 1] = static_cast<std::uint8_t>(c[k - 1]);
    }
    return out;
  }

  // Normal form of a word over a_0..a_K (indices 0..K).
  inline MpElement mp_normal_form(MpSpec const& spec, Word const& word) {
    MpElement u = mp_unit(spec);
    for (auto k : word) {
      u = mp_product(spec, u, mp_generator(spec, k));
    }
    return u;
  }

  // The element of degree r, if r lies in deg(M_p).  The deepest binary digit
  // 1/2^k of r can only come from a_k, which fixes eps from the bottom up;
  // what remains must be a non-negative integer.
  inline std::optional<MpElement> mp_element_of_degree(MpSpec const&   spec,
                                                       Rational const& r) {
    if (r < 0) {
      return std::nullopt;
    }
    Integer const den   = boost::multiprecision::denominator(r);
    std::size_t   depth = 0;
    Integer       pow   = 1;
    while (pow < den) {
      pow <<= 1;
      ++depth;
    }
    if (pow != den) {
      throw MalformedDyadic(to_string(r) + " is not a dyadic rational");
    }
    if (depth > spec.K()) {
      throw IndexOutOfRange(to_string(r) + " needs generator depth "
                            + std::to_string(depth) + " > K = "
                            + std::to_string(spec.K()));
    }
    MpElement u   = mp_unit(spec);
    Rational  rem = r;
    for (std::size_t k = depth; k >= 1; --k) {
      if (boost::multiprecision::denominator(rem) == (Integer(1) << k)) {
        u.eps[k - 1] = 1;
        rem -= spec.degree(k);
      }
    }
    if (rem < 0) {
      return std::nullopt;
    }
    u.n = boost::multiprecision::numerator(rem);
    return u;
  }

  // floor(sum eps_k d_k) for the eps forced by the 2-decimal part of r.
  inline Integer mp_min_integral_part(MpSpec const& spec, Rational const& r) {
    Rational const frac = r - Rational(boost::multiprecision::numerator(r)
                                       / boost::multiprecision::denominator(r));
    // eps depends only on the fractional part; rebuild it from a large
    // enough integral part so the lookup always succeeds.
    Rational probe = frac;
    for (std::size_t k = 1; k <= spec.K(); ++k) {
      probe += spec.degree(k);
    }
    probe = Rational(boost::multiprecision::numerator(probe)
                     / boost::multiprecision::denominator(probe))
            + 1 + frac;
    auto const u  = mp_element_of_degree(spec, probe);
    Rational   s  = mp_element_degree(spec, *u) - Rational(u->n);
    return boost::multiprecision::numerator(s)
           / boost::multiprecision::denominator(s);
  }

  // r = m + sum delta_k / 2^k lies in deg(M_p) iff m >= m(p, delta), where
  // m(p, delta) = floor(sum eps_k d_k) for the eps determined by delta.
  inline bool mp_degree_membership(MpSpec const& spec, Rational const& r) {
    if (r < 0) {
      // Still validates the dyadic shape.
      mp_element_of_degree(spec, -r);
      return false;
    }
    mp_element_of_degree(spec, r);  // throws on malformed input
    Integer const m = boost::multiprecision::numerator(r)
                      / boost::multiprecision::denominator(r);
    return m >= mp_min_integral_part(spec, r);
  }

  // deg is injective on M_p, so u | v iff deg(v) - deg(u) is a degree.
  inline bool mp_left_divides(MpSpec const&    spec,
                              MpElement const& u,
                              MpElement const& v) {
    Rational const diff
        = mp_element_degree(spec, v) - mp_element_degree(spec, u);
    if (diff < 0) {
      return false;
    }
    return mp_element_of_degree(spec, diff).has_value();
  }

  // mcm(J) by scanning, for each eps of depth <= depth(J), the least n with
  // (n, eps) a common multiple, then keeping the minimal candidates.  Members
  // above `cutoff` (when given) are dropped after minimisation.  Sorted by
  // degree.
  inline std::vector<MpElement>
  mp_mcm(MpSpec const&                  spec,
         std::vector<MpElement> const&  J,
         std::optional<Rational> const& cutoff = std::nullopt) {
    if (J.empty()) {
      throw EmptyIndexSet("mcm of the empty set");
    }
    std::size_t depth = 0;
    Integer     max_n = 0;
    for (auto const& u : J) {
      depth = std::max(depth, u.depth());
      max_n = std::max(max_n, u.n);
    }
    Integer sum_p = 0;
    for (std::size_t k = 1; k <= spec.K(); ++k) {
      sum_p += spec.p(k);
    }
    // (n, eps) / u has integral part n - n_u - (at most 2 sum_k d_k), and
    // d_k <= 1 + sum p, so this many steps always reach a common multiple.
    Integer const cap = max_n + 2 * Integer(spec.K()) * (1 + sum_p) + 1;

    std::vector<MpElement> candidates;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << depth); ++mask) {
      MpElement c = mp_unit(spec);
      for (std::size_t k = 1; k <= depth; ++k) {
        c.eps[k - 1] = (mask >> (k - 1)) & 1;
      }
      for (c.n = 0;; ++c.n) {
        if (c.n > cap) {
          throw Error("mp_mcm: scan cap exceeded");
        }
        bool all = true;
        for (auto const& u : J) {
          if (!mp_left_divides(spec, u, c)) {
            all = false;
            break;
          }
        }
        if (all) {
          break;
        }
      }
      candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(),
              candidates.end(),
              [&](MpElement const& a, MpElement const& b) {
                return mp_element_degree(spec, a) < mp_element_degree(spec, b);
              });
    std::vector<MpElement> out;
    for (auto const& c : candidates) {
      bool minimal = true;
      for (auto const& m : out) {
        if (mp_left_divides(spec, m, c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(c);
      }
    }
    if (cutoff) {
      std::erase_if(out, [&](MpElement const& u) {
        return mp_element_degree(spec, u) > *cutoff;
      });
    }
    return out;
  }

  // The truncated presentation <a_0..a_K | a_k^2 = a_0^{p_k} a_{k-1},
  // a_k a_l = a_l a_k> with generator names a_0, a_1, ...
  inline Presentation mp_presentation(MpSpec const& spec) {
    std::vector<Generator> gens;
    for (std::size_t k = 0; k <= spec.K(); ++k) {
      gens.push_back({"a_" + std::to_string(k), spec.degree(k)});
    }
    std::vector<Relation> rels;
    for (std::size_t k = 1; k <= spec.K(); ++k) {
      Word rhs(static_cast<std::size_t>(spec.p(k)), 0);
      rhs.push_back(k - 1);
      rels.push_back({{k, k}, std::move(rhs)});
    }
    for (std::size_t k = 0; k <= spec.K(); ++k) {
      for (std::size_t l = k + 1; l <= spec.K(); ++l) {
        rels.push_back({{k, l}, {l, k}});
      }
    }
    return Presentation::build(std::move(gens), std::move(rels));
  }

  // Whether u = Delta_n for some product Delta_n of a_1..a_K.  Degrees embed
  // M_p, so this is whether deg(u) is a non-negative combination of d_1..d_K.
  inline bool mp_is_delta_form(MpSpec const& spec, MpElement const& u) {
    Rational const     target = mp_element_degree(spec, u);
    std::set<Rational> seen{Rational(0)};
    std::vector<Rational> frontier{Rational(0)};
    while (!frontier.empty()) {
      std::vector<Rational> next;
      for (auto const& x : frontier) {
        if (x == target) {
          return true;
        }
        for (std::size_t k = 1; k <= spec.K(); ++k) {
          Rational y = x + spec.degree(k);
          if (y <= target && seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    return false;
  }

  // Normal-form model of M_p up to a degree cutoff.
  class MpModel final : public MonoidModel {
   public:
    MpModel(MpSpec spec, Rational const& cutoff)
        : MonoidModel(ModelKind::mp_normal_form, DegreeKey::rational(cutoff)),
          _spec(std::move(spec)) {
      if (cutoff <= 0) {
        throw DomainError("cutoff must be positive");
      }
      // Generators past K must not be reachable below the cutoff.
      for (std::size_t k = _spec.K() + 1; k <= _spec.known_depth(); ++k) {
        if (_spec.degree(k) <= cutoff) {
          throw InvalidParams("cutoff " + to_string(cutoff)
                              + " reaches d_" + std::to_string(k) + " = "
                              + to_string(_spec.degree(k))
                              + "; increase K");
        }
      }
      if (_spec.known_depth() == _spec.K()) {
        _warnings.push_back(
            "p_" + std::to_string(_spec.K() + 1)
            + " is not given; the model assumes no generator past a_"
            + std::to_string(_spec.K()) + " has degree <= "
            + to_string(cutoff));
      }

      std::vector<std::pair<Rational, MpElement>> all;
      std::size_t const K = _spec.K();
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << K); ++mask) {
        MpElement u = mp_unit(_spec);
        Rational  base(0);
        for (std::size_t k = 1; k <= K; ++k) {
          if ((mask >> (k - 1)) & 1) {
            u.eps[k - 1] = 1;
            base += _spec.degree(k);
          }
        }
        if (base > cutoff) {
          continue;
        }
        for (u.n = 0; base + Rational(u.n) <= cutoff; ++u.n) {
          all.emplace_back(base + Rational(u.n), u);
        }
      }
      std::sort(all.begin(), all.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].first == all[i - 1].first) {
          throw Error("two normal forms share degree "
                      + to_string(all[i].first));
        }
      }
      for (auto& [d, u] : all) {
        push_level(DegreeKey::rational(d), {render(u)});
        _elements.push_back(std::move(u));
      }
    }

    MpSpec const& spec() const noexcept {
      return _spec;
    }

    MpElement const& element(ElementId u) const {
      return _elements.at(u.value);
    }

    std::optional<ElementId> id_of(MpElement const& u) const {
      auto const* l
          = level_of(DegreeKey::rational(mp_element_degree(_spec, u)));
      if (l == nullptr) {
        return std::nullopt;
      }
      return ElementId{l->first};
    }

    std::vector<std::string> const& warnings() const noexcept {
      return _warnings;
    }

    std::optional<ElementId> product(ElementId u, ElementId v) const override {
      if (degree(u) + degree(v) > cutoff()) {
        return std::nullopt;
      }
      return id_of(mp_product(_spec, element(u), element(v)));
    }

    bool left_divides(ElementId u, ElementId v) const override {
      return mp_left_divides(_spec, element(u), element(v));
    }

    // "a_0^n.a_1.a_3"; the unit is "1".
    static std::string render(MpElement const& u) {
      std::string out;
      if (u.n > 0) {
        out = u.n == 1 ? "a_0" : "a_0^" + u.n.str();
      }
      for (std::size_t k = 1; k <= u.eps.size(); ++k) {
        if (u.eps[k - 1] != 0) {
          if (!out.empty()) {
            out += '.';
          }
          out += "a_" + std::to_string(k);
        }
      }
      return out.empty() ? "1" : out;
    }

   private:
    MpSpec                   _spec;
    std::vector<MpElement>   _elements;
    std::vector<std::string> _warnings;
  };

}  // namespace skewgrowth

#endif  // SKEWGROWTH_FAMILIES_MP_HPP_
