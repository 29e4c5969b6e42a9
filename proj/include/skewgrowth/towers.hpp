#ifndef SKEWGROWTH_TOWERS_HPP_
#define SKEWGROWTH_TOWERS_HPP_

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "degree_key.hpp"
#include "dirichlet.hpp"
#include "divposet.hpp"
#include "errors.hpp"
#include "monoid_model.hpp"

namespace skewgrowth {

  // (I_0, J_1, ..., J_n) with the cached tops I_k = mcm(J_k), truncated at
  // the cutoff.  tops[0] is the ground.
  struct Tower {
    std::vector<ElementSet> stages;
    std::vector<ElementSet> tops;

    ElementSet const& ground() const {
      return tops.front();
    }

    std::size_t height() const noexcept {
      return stages.size();
    }
  };

  inline int tower_sign(Tower const& T) {
    std::size_t exponent = 1;
    for (auto const& J : T.stages) {
      exponent += J.size() - 1;
    }
    return exponent % 2 == 0 ? 1 : -1;
  }

  // |T| = I_n.
  inline ElementSet const& tower_top(Tower const& T) {
    return T.tops.back();
  }

  // The towers over one ground, in breadth-first order: towers[0] is the
  // root (I_0), and children of each tower are sorted by their last stage.
  struct TowerForest {
    ElementSet                            ground;
    DegreeKey                             cutoff;
    std::vector<Tower>                    towers;
    std::vector<std::size_t>              parent;    // parent[0] is unused
    std::vector<std::vector<std::size_t>> children;
  };

  // Every tower T over I0 with deg(|T|) <= cutoff.  A next stage J must lie
  // in {j in I_n : deg(j) + d_min <= cutoff}: an antichain member j of J is a
  // proper divisor of every element of mcm(J), so heavier j cannot reach a
  // top within the cutoff.
  inline TowerForest enumerate_towers(DivPoset const&  poset,
                                      ElementSet const& I0) {
    auto const& model = poset.model();
    if (I0.empty()) {
      throw InvalidGround("the ground set is empty");
    }
    for (auto u : I0) {
      if (u == MonoidModel::unit()) {
        throw InvalidGround("the ground set contains the unit");
      }
    }
    if (poset.min_set(I0) != I0) {
      throw InvalidGround("the ground set is not an antichain");
    }
    DegreeKey const& cutoff = model.cutoff();
    DegreeKey const& d_min  = model.min_positive_degree();

    TowerForest forest{I0, cutoff, {}, {0}, {{}}};
    forest.towers.push_back({{}, {I0}});

    for (std::size_t t = 0; t < forest.towers.size(); ++t) {
      ElementSet candidates;
      for (auto j : tower_top(forest.towers[t])) {
        if (model.degree(j) + d_min <= cutoff) {
          candidates.push_back(j);
        }
      }
      // Subsets in lexicographic order, pruned once the common multiples
      // run out.
      std::vector<Tower> found;
      ElementSet         J;
      auto extend = [&](auto&& self, std::size_t from, ElementSet const& common)
          -> void {
        for (std::size_t i = from; i < candidates.size(); ++i) {
          ElementSet next = J.empty()
                                ? poset.multiples(candidates[i])
                                : DivPoset::intersect(
                                    common, poset.multiples(candidates[i]));
          if (next.empty()) {
            continue;
          }
          J.push_back(candidates[i]);
          if (J.size() >= 2) {
            Tower child = forest.towers[t];
            child.stages.push_back(J);
            child.tops.push_back(poset.min_set(next));
            found.push_back(std::move(child));
          }
          self(self, i + 1, next);
          J.pop_back();
        }
      };
      extend(extend, 0, {});
      std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
        return a.stages.back() < b.stages.back();
      });
      for (auto& child : found) {
        forest.children[t].push_back(forest.towers.size());
        forest.parent.push_back(t);
        forest.children.emplace_back();
        forest.towers.push_back(std::move(child));
      }
    }
    return forest;
  }

  inline TowerForest enumerate_towers(DivPoset const& poset) {
    return enumerate_towers(poset, poset.model().atoms());
  }

  // deg(|T|): the least degree over the top set.
  inline DegreeKey top_degree(MonoidModel const& model, Tower const& T) {
    return model.degree(tower_top(T).front());
  }

  // 1 + sum_T sign(T) sum_{D in |T|} t^{deg D}, truncated at the cutoff.
  inline Series skew_growth(MonoidModel const& model,
                            TowerForest const& forest) {
    Series N = Series::one(model.key_kind(), model.cutoff());
    for (auto const& T : forest.towers) {
      int const s = tower_sign(T);
      for (auto u : tower_top(T)) {
        N.add_term(model.degree(u), s);
      }
    }
    return N;
  }

  inline Series skew_growth(DivPoset const& poset, ElementSet const& I0) {
    return skew_growth(poset.model(), enumerate_towers(poset, I0));
  }

  inline Series skew_growth(DivPoset const& poset) {
    return skew_growth(poset, poset.model().atoms());
  }

  // sum_u t^{deg u} over the element table.
  inline Series growth_series(MonoidModel const& model) {
    Series P(model.key_kind(), model.cutoff());
    for (auto const& l : model.levels()) {
      P.add_term(l.degree, l.count);
    }
    return P;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline nlohmann::json labels(MonoidModel const& model,
                                 ElementSet const&  s) {
      nlohmann::json out = nlohmann::json::array();
      for (auto u : s) {
        out.push_back(model.label(u));
      }
      return out;
    }

    inline std::string brace(MonoidModel const& model, ElementSet const& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i == 0 ? "" : ",") + model.label(s[i]);
      }
      return out + "}";
    }

    inline std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace detail

  inline nlohmann::json forest_to_json(MonoidModel const& model,
                                       TowerForest const& forest) {
    nlohmann::json towers = nlohmann::json::array();
    for (std::size_t i = 0; i < forest.towers.size(); ++i) {
      auto const&    T      = forest.towers[i];
      nlohmann::json stages = nlohmann::json::array();
      for (auto const& J : T.stages) {
        stages.push_back(detail::labels(model, J));
      }
      nlohmann::json degrees = nlohmann::json::array();
      for (auto u : tower_top(T)) {
        degrees.push_back(key_to_json(model.degree(u)));
      }
      towers.push_back({{"stages", stages},
                        {"top", detail::labels(model, tower_top(T))},
                        {"top_degrees", degrees},
                        {"sign", tower_sign(T)},
                        {"height", T.height()},
                        {"parent",
                         i == 0 ? nlohmann::json(nullptr)
                                : nlohmann::json(forest.parent[i])}});
    }
    return {{"ground", detail::labels(model, forest.ground)},
            {"cutoff", key_to_json(forest.cutoff)},
            {"towers", towers}};
  }

  inline std::string forest_to_dot(MonoidModel const& model,
                                   TowerForest const& forest) {
    std::ostringstream out;
    out << "digraph towers {\n";
    for (std::size_t i = 0; i < forest.towers.size(); ++i) {
      auto const& T = forest.towers[i];
      std::string stages;
      for (auto const& J : T.stages) {
        stages += (stages.empty() ? "" : " ") + detail::brace(model, J);
      }
      out << "  T" << i << " [label=\""
          << detail::dot_escape("h=" + std::to_string(T.height())
                                + " sign=" + (tower_sign(T) > 0 ? "+1" : "-1")
                                + " top=" + detail::brace(model, tower_top(T)))
          << "\", tooltip=\""
          << detail::dot_escape(
                 "ground=" + detail::brace(model, forest.ground)
                 + (stages.empty() ? "" : " stages=" + stages))
          << "\"];\n";
    }
    for (std::size_t i = 1; i < forest.towers.size(); ++i) {
      out << "  T" << forest.parent[i] << " -> T" << i << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_TOWERS_HPP_
