// Prints the skew-growth series of (Z_{>0}, log) up to nmax: the tower sum
// reproduces the Moebius function, i.e. the truncated Euler product.

#include <cstdlib>
#include <iostream>

#include <skewgrowth/skewgrowth.hpp>

int main(int argc, char** argv) {
  using namespace skewgrowth;
  std::uint32_t const nmax = argc > 1 ? std::atoi(argv[1]) : 30;

  MultIntModel model(nmax);
  DivPoset     poset(model);
  Series const P = growth_series(model);
  Series const N = skew_growth(poset);

  for (auto const& [n, c] : N.terms()) {
    std::cout << "mu(" << n.str() << ") = " << c.str() << '\n';
  }
  bool const ok = series_mul(P, N) == Series::one(KeyKind::multint,
                                                  model.cutoff());
  std::cout << "zeta * prod (1 - p^-s) = 1 up to " << nmax << ": "
            << (ok ? "yes" : "no") << '\n';
  std::cout << "partial sum of N at s = 2: " << evaluate_dirichlet(N, 2.0)
            << '\n';
  return ok ? 0 : 1;
}
