#ifndef SKEWGROWTH_CHECKS_HPP_
#define SKEWGROWTH_CHECKS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "degree_key.hpp"
#include "dirichlet.hpp"
#include "divposet.hpp"
#include "families_mp.hpp"
#include "monoid_model.hpp"
#include "towers.hpp"

namespace skewgrowth {

  struct CheckReport {
    enum class Status { pass, fail, not_applicable };

    std::string              name;
    Status                   status = Status::pass;
    DegreeKey                max_degree_verified;
    std::optional<nlohmann::json> counterexample;
    std::vector<std::string> notes;

    bool passed() const noexcept {
      return status == Status::pass;
    }
  };

  inline std::string_view to_string(CheckReport::Status s) {
    switch (s) {
      case CheckReport::Status::pass:
        return "pass";
      case CheckReport::Status::fail:
        return "fail";
      case CheckReport::Status::not_applicable:
        return "not-applicable";
    }
    return "?";
  }

  inline nlohmann::json to_json(CheckReport const& r) {
    nlohmann::json out = {{"name", r.name},
                          {"status", std::string(to_string(r.status))},
                          {"max_degree_verified",
                           key_to_json(r.max_degree_verified)}};
    if (r.counterexample) {
      out["counterexample"] = *r.counterexample;
    }
    if (!r.notes.empty()) {
      out["notes"] = r.notes;
    }
    return out;
  }

  // Searches for a u = a v with u != v (left form) and u b = v b (right
  // form).  The reported witness has the least product degree; ties go to
  // the left form and then to the smallest ids.  A pass is evidence up to
  // the cutoff only.
  inline CheckReport check_cancellative(MonoidModel const& model) {
    CheckReport report{"cancellative",
                       CheckReport::Status::pass,
                       model.cutoff(),
                       std::nullopt,
                       {}};
    auto const n = static_cast<std::uint32_t>(model.size());

    // (product id, side, a, u, v)
    using Witness = std::tuple<std::uint32_t, int, std::uint32_t,
                               std::uint32_t, std::uint32_t>;
    std::optional<Witness> best;
    auto consider = [&](Witness w) {
      if (!best || w < *best) {
        best = w;
      }
    };

    for (std::uint32_t a = 0; a < n; ++a) {
      std::map<std::uint32_t, std::uint32_t> left;   // a u -> u
      std::map<std::uint32_t, std::uint32_t> right;  // u a -> u
      for (std::uint32_t u = 0; u < n; ++u) {
        auto au = model.product(ElementId{a}, ElementId{u});
        if (!au) {
          break;
        }
        auto [it, fresh] = left.try_emplace(au->value, u);
        if (!fresh) {
          consider({au->value, 0, a, it->second, u});
        }
        auto ua = model.product(ElementId{u}, ElementId{a});
        auto [jt, fresh2] = right.try_emplace(ua->value, u);
        if (!fresh2) {
          consider({ua->value, 1, a, jt->second, u});
        }
      }
    }
    if (best) {
      auto const [w, side, a, u, v] = *best;
      report.status = CheckReport::Status::fail;
      report.counterexample
          = nlohmann::json{{"side", side == 0 ? "left" : "right"},
                           {"a", model.label(ElementId{a})},
                           {"u", model.label(ElementId{u})},
                           {"v", model.label(ElementId{v})},
                           {"product", model.label(ElementId{w})},
                           {"degree", key_to_json(model.degree(ElementId{w}))}};
      report.notes.push_back(side == 0 ? "a u = a v with u != v"
                                       : "u a = v a with u != v");
    } else {
      report.notes.push_back("no violation up to the cutoff; this is not a "
                             "proof of cancellativity");
    }
    return report;
  }

  // P N = 1 with N from towers over `ground` (default: the atoms), and N
  // equal to the inverse of P, both up to the cutoff.
  inline CheckReport check_inversion(DivPoset const&                  poset,
                                     std::optional<ElementSet> const& ground
                                     = std::nullopt) {
    auto const& model = poset.model();
    CheckReport report{
        "inversion", CheckReport::Status::pass, model.cutoff(), {}, {}};
    if (!check_cancellative(model).passed()) {
      report.notes.push_back(
          "the monoid is not cancellative up to the cutoff, so a failure "
          "here is expected");
    }
    Series const P   = growth_series(model);
    Series const N   = skew_growth(poset, ground ? *ground : model.atoms());
    Series const one = Series::one(model.key_kind(), model.cutoff());
    Series const PN  = series_mul(P, N);
    Series const inv = series_invert(P);

    auto const bad_product = first_difference(PN, one);
    auto const bad_inverse = first_difference(N, inv);
    if (bad_product || bad_inverse) {
      report.status = CheckReport::Status::fail;
      DegreeKey const k
          = !bad_inverse || (bad_product && *bad_product < *bad_inverse)
                ? *bad_product
                : *bad_inverse;
      report.counterexample = nlohmann::json{
          {"degree", key_to_json(k)},
          {"growth", P.coefficient(k).str()},
          {"skew_towers", N.coefficient(k).str()},
          {"skew_inverse", inv.coefficient(k).str()},
          {"product", PN.coefficient(k).str()}};
    }
    return report;
  }

  // m_d + sum_T sign(T) sum_{D in |T|} m_{d - deg D} = 0 for every degree d
  // with 0 < d <= cutoff at which some term can be nonzero.
  inline CheckReport check_recursion(DivPoset const&                  poset,
                                     std::optional<ElementSet> const& ground
                                     = std::nullopt) {
    auto const& model = poset.model();
    CheckReport report{
        "recursion", CheckReport::Status::pass, model.cutoff(), {}, {}};
    auto const forest
        = enumerate_towers(poset, ground ? *ground : model.atoms());

    std::map<DegreeKey, int> weight;  // deg D -> signed count of top members
    for (auto const& T : forest.towers) {
      for (auto u : tower_top(T)) {
        weight[model.degree(u)] += tower_sign(T);
      }
    }
    std::set<DegreeKey> degrees;
    for (auto const& l : model.levels()) {
      degrees.insert(l.degree);
      for (auto const& [e, w] : weight) {
        auto d = l.degree + e;
        if (d <= model.cutoff()) {
          degrees.insert(std::move(d));
        }
      }
    }
    for (auto const& d : degrees) {
      if (d.is_zero()) {
        continue;
      }
      Integer sum = model.count_at(d);
      for (auto const& [e, w] : weight) {
        if (auto rest = d.minus(e)) {
          sum += Integer(w) * model.count_at(*rest);
        }
      }
      if (sum != 0) {
        report.status         = CheckReport::Status::fail;
        report.counterexample = nlohmann::json{
            {"degree", key_to_json(d)},
            {"count", model.count_at(d)},
            {"residual", sum.str()}};
        return report;
      }
    }
    return report;
  }

  // Compares the tower series with 1 + sum_J (-1)^{#J} t^{deg lcm(J)} over
  // the nonempty sets J of atoms that have a common multiple.  Applies only
  // when every such J has at most one minimal common multiple.
  inline CheckReport check_lcm_reduction(DivPoset const& poset) {
    auto const& model = poset.model();
    CheckReport report{
        "lcm-reduction", CheckReport::Status::pass, model.cutoff(), {}, {}};
    auto const atoms = model.atoms();
    Series     lcm   = Series::one(model.key_kind(), model.cutoff());

    ElementSet                J;
    std::optional<ElementSet> blocker;
    ElementSet                blocker_mcm;
    auto extend = [&](auto&& self, std::size_t from, ElementSet const& common)
        -> void {
      for (std::size_t i = from; i < atoms.size() && !blocker; ++i) {
        ElementSet next
            = J.empty() ? poset.multiples(atoms[i])
                        : DivPoset::intersect(common, poset.multiples(atoms[i]));
        if (next.empty()) {
          continue;
        }
        J.push_back(atoms[i]);
        ElementSet const m = poset.min_set(next);
        if (m.size() > 1) {
          blocker     = J;
          blocker_mcm = m;
        } else {
          lcm.add_term(model.degree(m.front()), J.size() % 2 == 0 ? 1 : -1);
          self(self, i + 1, next);
        }
        J.pop_back();
      }
    };
    extend(extend, 0, {});

    if (blocker) {
      report.status = CheckReport::Status::not_applicable;
      report.notes.push_back("mcm(" + detail::brace(model, *blocker)
                             + ") = " + detail::brace(model, blocker_mcm)
                             + " has more than one element");
      return report;
    }
    Series const N = skew_growth(poset);
    if (auto k = first_difference(N, lcm)) {
      report.status         = CheckReport::Status::fail;
      report.counterexample = nlohmann::json{
          {"degree", key_to_json(*k)},
          {"skew_towers", N.coefficient(*k).str()},
          {"lcm_sum", lcm.coefficient(*k).str()}};
    }
    return report;
  }

  // Classifies every top element of a tower of positive height over the
  // atoms of M_p as Delta or a_0 Delta, Delta a product of a_1..a_K.  An
  // element of neither form fails the check.  Elements whose form differs
  // from the one predicted by whether a_0 lies in the first stage are listed
  // under "mismatches" without failing it: a_0^5 = a_1^2 in mcm(a_0, a_1)
  // for p_1 = 4 is already such a case.
  inline CheckReport check_mp_delta_shape(MpModel const&     model,
                                          TowerForest const& forest) {
    CheckReport report{
        "mp-delta-shape", CheckReport::Status::pass, model.cutoff(), {}, {}};
    auto const a0 = model.id_of(mp_generator(model.spec(), 0));
    nlohmann::json neither    = nlohmann::json::array();
    nlohmann::json mismatches = nlohmann::json::array();
    std::set<std::pair<std::size_t, std::uint32_t>> seen;
    for (std::size_t i = 1; i < forest.towers.size(); ++i) {
      auto const& T = forest.towers[i];
      bool const with_a0
          = a0 && std::binary_search(
                      T.stages.front().begin(), T.stages.front().end(), *a0);
      for (std::size_t k = 1; k < T.tops.size(); ++k) {
        for (auto u : T.tops[k]) {
          if (!seen.insert({i, u.value}).second) {
            continue;
          }
          MpElement const& e     = model.element(u);
          bool const       delta = mp_is_delta_form(model.spec(), e);
          bool             a0_delta = false;
          if (e.n >= 1) {
            MpElement rest = e;
            rest.n -= 1;
            a0_delta = mp_is_delta_form(model.spec(), rest);
          }
          nlohmann::json entry = {{"tower", i},
                                  {"element", model.label(u)},
                                  {"expected", with_a0 ? "a_0 Delta" : "Delta"}};
          if (!delta && !a0_delta) {
            neither.push_back(std::move(entry));
          } else if (with_a0 ? !a0_delta : !delta) {
            mismatches.push_back(std::move(entry));
          }
        }
      }
    }
    if (!neither.empty()) {
      report.status         = CheckReport::Status::fail;
      report.counterexample = nlohmann::json{{"neither_form", neither}};
    }
    if (!mismatches.empty()) {
      report.notes.push_back("mismatches: " + mismatches.dump());
    }
    return report;
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_CHECKS_HPP_
