#include <doctest.h>

#include <cmath>

#include "bohrlab/extremal.hpp"
#include "bohrlab/radii.hpp"

using namespace bohrlab;
using namespace bohrlab::extremal;

TEST_CASE("closed forms are strictly increasing in r") {
  for (double a : {0.1, 0.5, 0.9}) {
    for (int m = 0; m <= 2; ++m) {
      double prev_a = -1.0, prev_d = -1.0;
      for (int i = 1; i < 99; ++i) {
        const double r = 0.01 * i;
        const double va = a_family_value(a, 2, m, r);
        const double vd = d_family_value(a, m, r);
        CHECK(va > prev_a);
        CHECK(vd > prev_d);
        prev_a = va;
        prev_d = vd;
      }
    }
  }
}

TEST_CASE("optimal parameters touch one exactly at the theorem radius") {
  for (int p = 1; p <= 5; ++p) {
    for (int m = 1; m <= p; ++m) {
      const double r0 = maximal_root(RadiusEquation::r_tstar(p, m)).root;
      const double a = a_family_optimal_parameter(p, r0);
      CHECK(a > 0.0);
      CHECK(a < 1.0);
      CHECK(a_family_value(a, p, m, r0) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  for (int m = 1; m <= 5; ++m) {
    const double r0 = maximal_root(RadiusEquation::r_dstar(m + 1, m)).root;
    const double a = d_family_optimal_parameter(r0);
    CHECK(a > 0.0);
    CHECK(a < 1.0);
    CHECK(d_family_value(a, m, r0) == doctest::Approx(1.0).epsilon(1e-9));
  }
  // r**_{2,1} = 3/5 gives a = 1/3
  CHECK(d_family_optimal_parameter(0.6) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("Psi converges to its printed limit") {
  for (double p_exp : {0.5, 1.0, 2.0}) {
    for (int n : {1, 2, 3, 6}) {
      for (double r : {0.2, 0.5, 0.7}) {
        const double a = 1.0 - 1e-7;
        CHECK(psi_rogosinski(a, p_exp, n, 2, r) ==
              doctest::Approx(psi_rogosinski_limit(p_exp, n, 2, r)).epsilon(1e-4));
        CHECK(psi_rogosinski(a, p_exp, n, std::nullopt, r) ==
              doctest::Approx(psi_rogosinski_limit(p_exp, n, std::nullopt, r)).epsilon(1e-4));
      }
    }
  }
  for (double r : {0.2, 0.34, 0.6}) {
    CHECK(psi_improved(1.0 - 1e-8, {8.0 / 9.0}, r) ==
          doctest::Approx(psi_improved_limit(r)).epsilon(1e-5));
  }
}

TEST_CASE("the Psi limit vanishes at the Bohr-Rogosinski roots") {
  for (double p_exp : {0.5, 1.0, 2.0}) {
    for (int n : {1, 2, 3}) {
      const double r = unique_root(RadiusEquation::rog_npm(n, p_exp, 2)).root;
      CHECK(std::abs(psi_rogosinski_limit(p_exp, n, 2, r)) <= 1e-9);
      const double r_inf = unique_root(RadiusEquation::rog_np(n, p_exp)).root;
      CHECK(std::abs(psi_rogosinski_limit(p_exp, n, std::nullopt, r_inf)) <= 1e-9);
    }
  }
  CHECK(psi_improved_limit(1.0 / 3.0) == doctest::Approx(0.0));
  CHECK(psi_improved_limit(0.34) < 0.0);
}
