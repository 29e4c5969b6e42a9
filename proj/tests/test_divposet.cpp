#include <catch_amalgamated.hpp>

#include <skewgrowth/skewgrowth.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace skewgrowth;

namespace {
  std::vector<std::string> labels(MonoidModel const& m, ElementSet const& s) {
    std::vector<std::string> out;
    for (auto u : s) {
      out.push_back(m.label(u));
    }
    return out;
  }

  using Labels = std::vector<std::string>;
}  // namespace

TEST_CASE("common multiples", "[divposet]") {
  auto const e3 = make_model(builtin("example3"), Rational(3));
  DivPoset const p3(*e3);
  // c = aa, ac = aaa, bc = aab
  CHECK(labels(*e3, p3.cm(e3->parse_element_set("a,b")))
        == Labels{"aa", "ab", "aaa", "aab"});

  auto const fr = make_model(builtin("free:2"));
  CHECK(DivPoset(*fr).cm(fr->parse_element_set("a,b")).empty());

  auto const z = make_model(builtin("zpos:30"));
  CHECK(labels(*z, DivPoset(*z).cm(z->parse_element_set("2,3")))
        == Labels{"6", "12", "18", "24", "30"});

  CHECK_THROWS_AS(p3.cm({}), EmptyIndexSet);
  CHECK_THROWS_AS(p3.mcm({}), EmptyIndexSet);
}

TEST_CASE("minimal elements and minimal common multiples", "[divposet]") {
  auto const e3 = make_model(builtin("example3"), Rational(3));
  DivPoset const p3(*e3);
  CHECK(labels(*e3, p3.min_set(e3->parse_element_set("aa,ab,aaa,aab")))
        == Labels{"aa", "ab"});
  CHECK(labels(*e3, p3.min_set(e3->parse_element_set("aab")))
        == Labels{"aab"});
  CHECK(p3.min_set({}).empty());
  CHECK(labels(*e3, p3.mcm(e3->parse_element_set("a,b")))
        == Labels{"aa", "ab"});

  auto const b3 = make_model(builtin("braid3"), Rational(6));
  CHECK(labels(*b3, DivPoset(*b3).mcm(b3->parse_element_set("a,b")))
        == Labels{"aba"});

  auto const z = make_model(builtin("zpos:30"));
  DivPoset const pz(*z);
  CHECK(labels(*z, pz.min_set(z->parse_element_set("6,12,18,24,30")))
        == Labels{"6"});
  CHECK(labels(*z, pz.mcm(z->parse_element_set("2,3"))) == Labels{"6"});
}

TEST_CASE("precomputed divisibility matches the model", "[divposet]") {
  for (auto preset : {"example3", "braid3", "free:2", "zpos:80",
                      "mp:p=4,8,16:K=3"}) {
    auto const m = make_model(builtin(preset),
                              std::string(preset).rfind("zpos", 0) == 0
                                  ? std::nullopt
                                  : std::optional<Rational>(Rational(6)));
    DivPoset const p(*m);
    for (std::uint32_t i = 0; i < m->size(); ++i) {
      for (std::uint32_t j = 0; j < m->size(); ++j) {
        ElementId const u{i}, v{j};
        CHECK(p.divides(u, v) == m->left_divides(u, v));
      }
    }
  }
}

TEST_CASE("threaded construction gives the same poset", "[divposet]") {
  auto const m = make_model(builtin("braid3"), Rational(9));
  DivPoset const one(*m, 1), four(*m, 4);
  for (std::uint32_t i = 0; i < m->size(); ++i) {
    CHECK(one.multiples(ElementId{i}) == four.multiples(ElementId{i}));
    CHECK(one.divisors(ElementId{i}) == four.divisors(ElementId{i}));
  }
}

TEST_CASE("order axioms and the minimal-element fact",
          "[divposet][property]") {
  gen::Rng rng(3);
  for (auto preset : {"example3", "braid3", "zpos:60", "mp:p=4,8,16:K=3"}) {
    auto const m = make_model(builtin(preset),
                              std::string(preset).rfind("zpos", 0) == 0
                                  ? std::nullopt
                                  : std::optional<Rational>(Rational(6)));
    DivPoset const p(*m);
    auto const     n = static_cast<std::uint32_t>(m->size());
    for (std::uint32_t i = 0; i < n; ++i) {
      ElementId const u{i};
      CHECK(p.divides(u, u));
      for (auto v : p.multiples(u)) {
        if (v != u) {
          CHECK_FALSE(p.divides(v, u));
          CHECK(m->degree(u) < m->degree(v));
        }
        for (auto w : p.multiples(v)) {
          CHECK(p.divides(u, w));
        }
      }
    }
    for (int t = 0; t < 300; ++t) {
      std::vector<ElementId> s;
      int const k = gen::uniform(rng, 1, 6);
      for (int i = 0; i < k; ++i) {
        s.push_back(ElementId{std::uint32_t(gen::uniform(rng, 0, int(n) - 1))});
      }
      auto const S   = make_element_set(s);
      auto const min = p.min_set(S);
      for (auto u : S) {
        bool covered = false;
        for (auto v : min) {
          covered = covered || p.divides(v, u);
        }
        CHECK(covered);
      }
      auto const mcm = p.mcm(S);
      CHECK(mcm == oracle::naive_mcm(*m, S));
      for (auto x : mcm) {
        for (auto y : mcm) {
          CHECK((x == y || !p.divides(x, y)));
        }
      }
    }
  }
}

TEST_CASE("mcm at a lower cutoff is the restriction of mcm at a higher one",
          "[divposet][property]") {
  for (auto preset : {"example3", "braid3"}) {
    auto const lo = make_model(builtin(preset), Rational(4));
    auto const hi = make_model(builtin(preset), Rational(8));
    DivPoset const plo(*lo), phi(*hi);
    auto const     n = static_cast<std::uint32_t>(lo->size());
    for (std::uint32_t i = 1; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        for (std::uint32_t k = j; k < n; ++k) {
          Labels J{lo->label(ElementId{i}), lo->label(ElementId{j}),
                   lo->label(ElementId{k})};
          auto const Jlo = lo->parse_element_set(J[0] + "," + J[1] + "," + J[2]);
          auto const Jhi = hi->parse_element_set(J[0] + "," + J[1] + "," + J[2]);
          Labels expected;
          for (auto u : phi.mcm(Jhi)) {
            if (hi->degree(u) <= lo->cutoff()) {
              expected.push_back(hi->label(u));
            }
          }
          CHECK(labels(*lo, plo.mcm(Jlo)) == expected);
        }
      }
    }
  }
}
