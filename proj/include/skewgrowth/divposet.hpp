#ifndef SKEWGROWTH_DIVPOSET_HPP_
#define SKEWGROWTH_DIVPOSET_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "monoid_model.hpp"

namespace skewgrowth {

  // The left-divisibility order on the enumerated elements, materialised as
  // sorted multiple and divisor lists built from one pass over products.
  class DivPoset {
   public:
    explicit DivPoset(MonoidModel const& model, unsigned threads = 1)
        : _model(&model),
          _multiples(model.size()),
          _divisors(model.size()) {
      auto const n = static_cast<std::uint32_t>(model.size());
      auto row     = [&](std::uint32_t u) {
        auto&           out = _multiples[u];
        ElementId const uu{u};
        for (std::uint32_t x = 0; x < n; ++x) {
          auto v = model.product(uu, ElementId{x});
          if (!v) {
            // Ids increase with degree, so every later x is too heavy.
            break;
          }
          out.push_back(*v);
        }
        out = make_element_set(std::move(out));
      };
      threads = std::max(1u, threads);
      if (threads == 1 || n < 64) {
        for (std::uint32_t u = 0; u < n; ++u) {
          row(u);
        }
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] {
            for (std::uint32_t u = t; u < n; u += threads) {
              row(u);
            }
          });
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      for (std::uint32_t u = 0; u < n; ++u) {
        for (auto v : _multiples[u]) {
          _divisors[v.value].push_back(ElementId{u});
        }
      }
    }

    MonoidModel const& model() const noexcept {
      return *_model;
    }

    bool divides(ElementId u, ElementId v) const {
      auto const& m = _multiples.at(u.value);
      return std::binary_search(m.begin(), m.end(), v);
    }

    // All v with u |_l v up to the cutoff, u included.
    ElementSet const& multiples(ElementId u) const {
      return _multiples.at(u.value);
    }

    // All u with u |_l v, v included.
    ElementSet const& divisors(ElementId v) const {
      return _divisors.at(v.value);
    }

    // Common right multiples of J up to the cutoff.
    ElementSet cm(ElementSet const& J) const {
      if (J.empty()) {
        throw EmptyIndexSet("cm of the empty set");
      }
      ElementSet acc = multiples(J.front());
      for (std::size_t i = 1; i < J.size() && !acc.empty(); ++i) {
        acc = intersect(acc, multiples(J[i]));
      }
      return acc;
    }

    // Minimal elements of S.  Ids increase with degree and a proper divisor
    // has smaller degree, so one sweep against the kept elements suffices.
    ElementSet min_set(ElementSet const& S) const {
      ElementSet out;
      for (auto u : S) {
        bool minimal = true;
        for (auto m : out) {
          if (divides(m, u)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          out.push_back(u);
        }
      }
      return out;
    }

    ElementSet mcm(ElementSet const& J) const {
      return min_set(cm(J));
    }

    static ElementSet intersect(ElementSet const& a, ElementSet const& b) {
      ElementSet out;
      std::set_intersection(
          a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }

   private:
    MonoidModel const*      _model;
    std::vector<ElementSet> _multiples;
    std::vector<ElementSet> _divisors;
  };

}  // namespace skewgrowth

#endif  // SKEWGROWTH_DIVPOSET_HPP_
