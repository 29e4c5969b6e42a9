#include <catch_amalgamated.hpp>

#include <skewgrowth/skewgrowth.hpp>

#include "oracles.hpp"

using namespace skewgrowth;

namespace {
  using Labels = std::vector<std::string>;

  Labels labels(MonoidModel const& m, ElementSet const& s) {
    Labels out;
    for (auto u : s) {
      out.push_back(m.label(u));
    }
    return out;
  }

  DegreeKey R(int p) {
    return DegreeKey::rational(Rational(p));
  }

  std::vector<std::unique_ptr<MonoidModel>> all_builtins() {
    std::vector<std::unique_ptr<MonoidModel>> out;
    out.push_back(make_model(builtin("free:2"), Rational(10)));
    out.push_back(make_model(builtin("free:deg=1,3/2,2"), Rational(6)));
    out.push_back(make_model(builtin("example3"), Rational(12)));
    out.push_back(make_model(builtin("braid3"), Rational(10)));
    out.push_back(make_model(builtin("zpos:200")));
    out.push_back(make_model(builtin("mp:p=4,8,16:K=3"), Rational(8)));
    out.push_back(make_model(builtin("mp:p=pow2:K=3"), Rational(12)));
    return out;
  }
}  // namespace

TEST_CASE("example3 has exactly one tower of each height", "[towers]") {
  auto const m = make_model(builtin("example3"), Rational(5));
  DivPoset const p(*m);
  auto const     f = enumerate_towers(p, m->parse_element_set("a,b"));
  REQUIRE(f.towers.size() == 5);
  for (std::size_t n = 0; n < 5; ++n) {
    auto const& T = f.towers[n];
    CHECK(T.height() == n);
    CHECK(tower_top(T).size() == 2);
    CHECK(top_degree(*m, T) == R(int(n) + 1));
    for (auto const& J : T.stages) {
      CHECK(J.size() == 2);
    }
    CHECK(f.children[n].size() == (n + 1 < 5 ? 1u : 0u));
  }
  CHECK(labels(*m, tower_top(f.towers[1])) == Labels{"aa", "ab"});
  CHECK(labels(*m, f.towers[1].stages[0]) == Labels{"a", "b"});
  CHECK(labels(*m, f.towers[2].stages[1]) == Labels{"aa", "ab"});
  CHECK(labels(*m, tower_top(f.towers[2])) == Labels{"aaa", "aab"});
}

TEST_CASE("free monoids only have the root tower", "[towers]") {
  auto const m = make_model(builtin("free:2"));
  auto const f = enumerate_towers(DivPoset(*m));
  CHECK(f.towers.size() == 1);
  CHECK(f.towers[0].height() == 0);
}

TEST_CASE("positive integers have towers of height at most one",
          "[towers]") {
  auto const m = make_model(builtin("zpos:30"));
  auto const f = enumerate_towers(DivPoset(*m));
  bool       saw_235 = false;
  for (auto const& T : f.towers) {
    CHECK(T.height() <= 1);
    if (T.height() == 1 && labels(*m, T.stages[0]) == Labels{"2", "3", "5"}) {
      saw_235 = true;
      CHECK(labels(*m, tower_top(T)) == Labels{"30"});
    }
  }
  CHECK(saw_235);
  // 2-subsets and the one 3-subset of primes with product <= 30
  CHECK(f.towers.size() == 1 + 7 + 1);
}

TEST_CASE("tower signs", "[towers]") {
  auto const m = make_model(builtin("example3"), Rational(4));
  auto const f = enumerate_towers(DivPoset(*m));
  CHECK(tower_sign(f.towers[0]) == -1);
  CHECK(tower_sign(f.towers[1]) == 1);
  CHECK(tower_sign(f.towers[2]) == -1);

  Tower T{{{ElementId{1}, ElementId{2}, ElementId{3}}}, {{}, {}}};
  CHECK(tower_sign(T) == -1);  // (-1)^{3 - 1 + 1}
}

TEST_CASE("tower tops", "[towers]") {
  auto const z = make_model(builtin("zpos:30"));
  DivPoset const p(*z);
  auto const     f = enumerate_towers(p);
  CHECK(tower_top(f.towers[0]) == z->atoms());
  CHECK(labels(*z, tower_top(f.towers[1])) == Labels{"6"});
  CHECK(labels(*z, f.towers[1].stages[0]) == Labels{"2", "3"});
}

TEST_CASE("skew-growth series of the examples", "[towers]") {
  auto const e3 = make_model(builtin("example3"), Rational(5));
  auto const N  = skew_growth(DivPoset(*e3));
  for (int d = 0; d <= 5; ++d) {
    CHECK(N.coefficient(R(d)) == (d == 0 ? 1 : d % 2 == 1 ? -2 : 2));
  }

  auto const fr = make_model(builtin("free:2"));
  Series     expected = Series::one(KeyKind::rational, fr->cutoff());
  expected.add_term(R(1), -2);
  CHECK(skew_growth(DivPoset(*fr)) == expected);

  auto const z  = make_model(builtin("zpos:30"));
  auto const Nz = skew_growth(DivPoset(*z));
  auto const mu = oracle::mobius(30);
  for (int n = 1; n <= 30; ++n) {
    CHECK(Nz.coefficient(DegreeKey::multint(Integer(n))) == mu[n]);
  }
}

TEST_CASE("a smaller ground set", "[towers]") {
  auto const m = make_model(builtin("example3"), Rational(6));
  DivPoset const p(*m);
  auto const     N = skew_growth(p, m->parse_element_set("a"));
  Series         expected = Series::one(KeyKind::rational, m->cutoff());
  expected.add_term(R(1), -1);
  CHECK(N == expected);
}

TEST_CASE("invalid ground sets", "[towers]") {
  auto const m = make_model(builtin("example3"), Rational(4));
  DivPoset const p(*m);
  CHECK_THROWS_AS(enumerate_towers(p, {}), InvalidGround);
  CHECK_THROWS_AS(enumerate_towers(p, {MonoidModel::unit()}), InvalidGround);
  CHECK_THROWS_AS(enumerate_towers(p, m->parse_element_set("a,aa")),
                  InvalidGround);
}

TEST_CASE("forest export", "[towers]") {
  auto const fr = make_model(builtin("free:2"));
  auto const jf = forest_to_json(*fr, enumerate_towers(DivPoset(*fr)));
  CHECK(jf["towers"].size() == 1);
  CHECK(jf["towers"][0]["sign"] == -1);
  CHECK(jf["ground"] == nlohmann::json::array({"a", "b"}));

  auto const z  = make_model(builtin("zpos:10"));
  auto const jz = forest_to_json(*z, enumerate_towers(DivPoset(*z)));
  REQUIRE(jz["towers"].size() == 3);
  CHECK(jz["towers"][1]["stages"] == nlohmann::json::parse(R"([["2","3"]])"));
  CHECK(jz["towers"][1]["top"] == nlohmann::json::array({"6"}));
  CHECK(jz["towers"][1]["top_degrees"] == nlohmann::json::array({6}));
  CHECK(jz["towers"][2]["stages"] == nlohmann::json::parse(R"([["2","5"]])"));
  CHECK(jz["towers"][2]["parent"] == 0);

  auto const e3  = make_model(builtin("example3"), Rational(3));
  auto const dot = forest_to_dot(*e3, enumerate_towers(DivPoset(*e3)));
  CHECK(dot.find("T0 -> T1;") != std::string::npos);
  CHECK(dot.find("T1 -> T2;") != std::string::npos);
  CHECK(dot.find("T0 -> T2;") == std::string::npos);
  CHECK(dot.find("label=\"h=1 sign=+1 top={aa,ab}\"") != std::string::npos);
}

TEST_CASE("towers over every builtin obey the degree bound and tree shape",
          "[towers][property]") {
  for (auto const& m : all_builtins()) {
    DivPoset const p(*m);
    auto const     f     = enumerate_towers(p);
    auto const&    d_min = m->min_positive_degree();
    INFO(m->label(ElementId{1}) << " cutoff " << m->cutoff().str());
    for (std::size_t i = 0; i < f.towers.size(); ++i) {
      auto const& T = f.towers[i];
      // deg |T| >= (n + 1) d_min
      CHECK(top_degree(*m, T) >= d_min.times(T.height() + 1));
      CHECK(top_degree(*m, T) <= m->cutoff());
      if (i > 0) {
        auto const& parent = f.towers[f.parent[i]];
        CHECK(parent.height() + 1 == T.height());
        CHECK(std::equal(parent.stages.begin(), parent.stages.end(),
                         T.stages.begin()));
      }
      for (std::size_t k = 0; k < T.stages.size(); ++k) {
        auto const& J = T.stages[k];
        CHECK(J.size() >= 2);
        CHECK(std::includes(T.tops[k].begin(), T.tops[k].end(), J.begin(),
                            J.end()));
        CHECK(T.tops[k + 1] == p.mcm(J));
        CHECK_FALSE(T.tops[k + 1].empty());
        if (k > 0) {
          auto max_deg = [&](ElementSet const& s) {
            return m->degree(s.back());
          };
          CHECK(max_deg(J) >= max_deg(T.stages[k - 1]) + d_min);
        }
      }
    }
    CHECK(skew_growth(*m, f) == series_invert(growth_series(*m)));
  }
}

TEST_CASE("towers stop at height one when every mcm is a singleton",
          "[towers][property]") {
  for (auto preset : {"zpos:200", "braid3"}) {
    auto const m = make_model(builtin(preset));
    auto const f = enumerate_towers(DivPoset(*m));
    for (auto const& T : f.towers) {
      CHECK(T.height() <= 1);
      CHECK(tower_top(T).size() <= (T.height() == 0 ? m->size() : 1));
    }
  }
}

TEST_CASE("tower results at a lower cutoff restrict those at a higher one",
          "[towers][property]") {
  for (auto preset : {"example3", "braid3"}) {
    auto const lo = make_model(builtin(preset), Rational(4));
    auto const hi = make_model(builtin(preset), Rational(8));
    auto const flo = forest_to_json(*lo, enumerate_towers(DivPoset(*lo)));
    auto const fhi = forest_to_json(*hi, enumerate_towers(DivPoset(*hi)));
    nlohmann::json restricted = nlohmann::json::array();
    for (auto t : fhi["towers"]) {
      nlohmann::json top = nlohmann::json::array(), deg = nlohmann::json::array();
      for (std::size_t i = 0; i < t["top"].size(); ++i) {
        if (*parse_rational(t["top_degrees"][i].get<std::string>()) <= 4) {
          top.push_back(t["top"][i]);
          deg.push_back(t["top_degrees"][i]);
        }
      }
      if (!top.empty()) {
        t["top"]         = top;
        t["top_degrees"] = deg;
        t.erase("parent");
        restricted.push_back(t);
      }
    }
    nlohmann::json low = flo["towers"];
    for (auto& t : low) {
      t.erase("parent");
    }
    CHECK(low == restricted);
  }
}
