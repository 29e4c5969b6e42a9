#include <catch_amalgamated.hpp>

#include <cmath>

#include <skewgrowth/skewgrowth.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace skewgrowth;
using Catch::Matchers::WithinAbs;

namespace {
  DegreeKey R(int p, int q = 1) {
    return DegreeKey::rational(Rational(p, q));
  }
  DegreeKey M(int n) {
    return DegreeKey::multint(Integer(n));
  }

  // 1 + c t + c t^2 + ... + c t^cutoff
  Series geometric(int c, int cutoff, bool alternate = false) {
    Series f = Series::one(KeyKind::rational, R(cutoff));
    for (int d = 1; d <= cutoff; ++d) {
      f.add_term(R(d), alternate && d % 2 == 1 ? -c : c);
    }
    return f;
  }

  Series zeta(int nmax) {
    Series f(KeyKind::multint, M(nmax));
    for (int n = 1; n <= nmax; ++n) {
      f.add_term(M(n), 1);
    }
    return f;
  }
}  // namespace

TEST_CASE("degree keys add by kind", "[dirichlet]") {
  CHECK(R(1, 2) + R(3, 4) == R(5, 4));
  CHECK(M(6) + M(5) == M(30));
  CHECK(DegreeKey::zero(KeyKind::multint) == M(1));
  CHECK(R(0).is_zero());
  CHECK(M(12).minus(M(4)) == M(3));
  CHECK_FALSE(M(12).minus(M(5)).has_value());
  CHECK_FALSE(R(1).minus(R(2)).has_value());
  CHECK(R(1, 2).times(3) == R(3, 2));
  CHECK(M(2).times(3) == M(8));
  CHECK(M(2) < M(3));
  CHECK_THROWS_AS(R(1) < M(2), KeyKindMismatch);
  CHECK_THROWS_AS(DegreeKey::rational(Rational(-1)), DomainError);
  CHECK_THROWS_AS(DegreeKey::multint(Integer(0)), DomainError);
}

TEST_CASE("rational literals", "[dirichlet]") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK(to_string(Rational(85, 8)) == "85/8");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("series keep only keys up to the cutoff and no zeros",
          "[dirichlet]") {
  Series f(KeyKind::rational, R(2));
  f.add_term(R(3), 5);
  f.add_term(R(1), 2);
  f.add_term(R(1), -2);
  CHECK(f.terms().empty());
  CHECK(f == Series(KeyKind::rational, R(2)));
  CHECK_FALSE(f == Series(KeyKind::rational, R(3)));
  CHECK_THROWS_AS(f.add_term(M(2), 1), KeyKindMismatch);
}

TEST_CASE("the closed forms (1+t)/(1-t) and (1-t)/(1+t) multiply to 1",
          "[dirichlet]") {
  auto const P = geometric(2, 5);
  auto const N = geometric(2, 5, true);
  CHECK(series_mul(P, N) == Series::one(KeyKind::rational, R(5)));
  CHECK(series_mul(P, Series::one(KeyKind::rational, R(5))) == P);
}

TEST_CASE("multiplying zeta by (1 - 2^-s) keeps the odd terms",
          "[dirichlet]") {
  Series g = Series::one(KeyKind::multint, M(10));
  g.add_term(M(2), -1);
  auto const h = series_mul(zeta(10), g);
  for (int n = 1; n <= 10; ++n) {
    CHECK(h.coefficient(M(n)) == (n % 2 == 1 ? 1 : 0));
  }
}

TEST_CASE("inversion", "[dirichlet]") {
  CHECK(series_invert(geometric(2, 9)) == geometric(2, 9, true));
  CHECK(series_invert(Series::one(KeyKind::rational, R(4)))
        == Series::one(KeyKind::rational, R(4)));

  auto const mu  = oracle::mobius(30);
  auto const inv = series_invert(zeta(30));
  for (int n = 1; n <= 30; ++n) {
    CHECK(inv.coefficient(M(n)) == mu[n]);
  }
  CHECK(inv.coefficient(M(12)) == 0);
  CHECK(inv.coefficient(M(30)) == -1);

  Series bad(KeyKind::rational, R(3));
  bad.add_term(R(0), 2);
  CHECK_THROWS_AS(series_invert(bad), NonUnitConstantTerm);
  CHECK_THROWS_AS(series_invert(Series(KeyKind::rational, R(3))),
                  NonUnitConstantTerm);

  Series neg = Series::one(KeyKind::rational, R(3));
  neg        = series_negate(neg);
  neg.add_term(R(1), 1);
  CHECK(series_mul(neg, series_invert(neg))
        == Series::one(KeyKind::rational, R(3)));
}

TEST_CASE("operands must agree on kind and cutoff", "[dirichlet]") {
  CHECK_THROWS_AS(series_mul(geometric(1, 3), geometric(1, 4)),
                  CutoffMismatch);
  CHECK_THROWS_AS(series_add(geometric(1, 3), zeta(3)), KeyKindMismatch);
  CHECK(truncate(geometric(2, 6), R(3)) == geometric(2, 3));
  CHECK_THROWS_AS(truncate(geometric(2, 3), R(6)), CutoffMismatch);
}

TEST_CASE("numeric partial sums", "[dirichlet]") {
  Series f = Series::one(KeyKind::rational, R(1));
  f.add_term(R(1), -2);
  CHECK_THAT(evaluate_partial(f, 0.25), WithinAbs(0.5, 1e-12));
  // 1 + 2 (1/2 + ... + 1/2^20) = 3 - 2^-19
  CHECK_THAT(evaluate_partial(geometric(2, 20), 0.5),
             WithinAbs(3.0 - std::ldexp(1.0, -19), 1e-12));
  CHECK_THAT(evaluate_dirichlet(zeta(100), 2.0), WithinAbs(1.63498, 1e-5));
  // t0 = exp(-s) turns t^{log n} into n^{-s}
  CHECK_THAT(evaluate_partial(zeta(100), std::exp(-2.0)),
             WithinAbs(evaluate_dirichlet(zeta(100), 2.0), 1e-12));
  CHECK_THROWS_AS(evaluate_partial(f, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate_partial(f, 0.0), DomainError);
  CHECK_THROWS_AS(evaluate_dirichlet(zeta(5), 0.0), DomainError);
  CHECK_THROWS_AS(evaluate_dirichlet(f, 2.0), KeyKindMismatch);
}

TEST_CASE("series JSON", "[dirichlet]") {
  Series f = Series::one(KeyKind::rational, R(5, 2));
  f.add_term(R(3, 2), -4);
  CHECK(to_json(f).dump()
        == R"({"cutoff":"5/2","key_kind":"rational","terms":[["0","1"],["3/2","-4"]]})");
  CHECK(to_json(zeta(2)).dump()
        == R"({"cutoff":2,"key_kind":"multint","terms":[[1,"1"],[2,"1"]]})");
}

TEST_CASE("ring laws on random truncated series", "[dirichlet][property]") {
  gen::Rng rng(11);
  for (auto kind : {KeyKind::rational, KeyKind::multint}) {
    int const cutoff = kind == KeyKind::rational ? 6 : 60;
    for (int i = 0; i < 200; ++i) {
      auto const f = gen::series(rng, kind, cutoff, false);
      auto const g = gen::series(rng, kind, cutoff, false);
      auto const h = gen::series(rng, kind, cutoff, false);
      CHECK(series_mul(f, g) == series_mul(g, f));
      CHECK(series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h)));
      CHECK(series_mul(f, series_add(g, h))
            == series_add(series_mul(f, g), series_mul(f, h)));
      CHECK(series_add(f, series_negate(f)) == Series(kind, f.cutoff()));
    }
  }
}

TEST_CASE("inversion is a two-sided involution", "[dirichlet][property]") {
  gen::Rng rng(12);
  for (auto kind : {KeyKind::rational, KeyKind::multint}) {
    int const cutoff = kind == KeyKind::rational ? 5 : 80;
    for (int i = 0; i < 200; ++i) {
      auto const f   = gen::series(rng, kind, cutoff, true);
      auto const inv = series_invert(f);
      CHECK(series_mul(f, inv) == Series::one(kind, f.cutoff()));
      CHECK(series_invert(inv) == f);
    }
  }
}

TEST_CASE("multint convolution only pairs divisors", "[dirichlet][property]") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    auto const f = gen::series(rng, KeyKind::multint, 60, false);
    auto const g = gen::series(rng, KeyKind::multint, 60, false);
    auto const h = series_mul(f, g);
    for (int n = 1; n <= 60; ++n) {
      Integer expected = 0;
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a * b == n) {
            expected += f.coefficient(M(a)) * g.coefficient(M(b));
          }
        }
      }
      CHECK(h.coefficient(M(n)) == expected);
    }
  }
}
