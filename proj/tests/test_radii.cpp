#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrlab/errors.hpp"
#include "bohrlab/radii.hpp"

using namespace bohrlab;

namespace {

// Each equation written out independently of the library's monomial tables.
double reference_value(const RadiusEquation& e, double r) {
  const double p = e.p, m = e.m, n = e.n, q = e.p_exp;
  switch (e.kind) {
    case RadiusKind::RPm:
      return -6 * std::pow(r, p - m) + std::pow(r, 2 * (p - m)) + 8 * std::pow(r, 2 * p) + 1;
    case RadiusKind::RTStarPm:
      return 5 * std::pow(r, 2 * p + m) - 2 * std::pow(r, p + m) + std::pow(r, m) +
             4 * std::pow(r, 2 * p) - 4 * std::pow(r, p);
    case RadiusKind::RDStarNm:
      return 4 * std::pow(r, 2 * n - m) + 4 * std::pow(r, n + 1 - m) - 4 * std::pow(r, n - m) +
             std::pow(r, m + 2) - 2 * std::pow(r, m + 1) + std::pow(r, m);
    case RadiusKind::RogNpm:
      return q * (1 - std::pow(r, m)) / (1 + std::pow(r, m)) - 2 * std::pow(r, n) / (1 - r);
    case RadiusKind::RogNp:
      return 2 * std::pow(r, n) - q * (1 - r);
    case RadiusKind::RStarNm:
      break;
  }
  return NAN;
}

}  // namespace

TEST_CASE("equation values at hand-checked points") {
  CHECK(std::abs(equation_value(RadiusEquation::r_tstar(1, 0), 1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(equation_value(RadiusEquation::rog_np(1, 1), 1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(equation_value(RadiusEquation::r_dstar(2, 1), 0.6)) < 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double r = u(rng);
    // 5r^2 - 2r + 1 + 4r^2 - 4r = (3r - 1)^2
    CHECK(equation_value(RadiusEquation::r_tstar(1, 0), r) ==
          doctest::Approx((3 * r - 1) * (3 * r - 1)).epsilon(1e-12));
    // 4r^3 + 4r^2 - 4r + r^3 - 2r^2 + r = r (5r - 3)(r + 1)
    CHECK(equation_value(RadiusEquation::r_dstar(2, 1), r) ==
          doctest::Approx(r * (5 * r - 3) * (r + 1)).epsilon(1e-12));
  }
}

TEST_CASE("equation values match the written-out formulas") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (int i = 0; i < 200; ++i) {
    const double r = u(rng);
    const int p = 1 + i % 7, m = i % (p + 1), n = m + 1 + i % 5;
    const double q = 0.25 + (i % 8) * 0.25;
    for (const auto& e : {RadiusEquation::r_pm(p, m), RadiusEquation::r_tstar(p, m),
                          RadiusEquation::r_dstar(n, m), RadiusEquation::rog_npm(n, q, m + 1),
                          RadiusEquation::rog_np(n, q)}) {
      CHECK(equation_value(e, r) == doctest::Approx(reference_value(e, r)).epsilon(1e-11));
      // derivative against a central difference
      const double h = 1e-6;
      const double fd = (equation_value(e, r + h) - equation_value(e, r - h)) / (2 * h);
      CHECK(equation_derivative(e, r) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("piecewise star equation branches") {
  // m = 0: 2r^N + r - 1
  CHECK(equation_value(RadiusEquation::r_star(3, 0), 0.4) ==
        doctest::Approx(2 * std::pow(0.4, 3) + 0.4 - 1));
  // both branches vanish where the single-equation form does
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 1; n <= 8; ++n) {
      const double r = maximal_root(RadiusEquation::r_dstar(n, m)).root;
      CHECK(std::abs(equation_value(RadiusEquation::r_star(n, m), r)) < 1e-9);
    }
  }
}

TEST_CASE("equation_value rejects radii outside (0, 1)") {
  for (double r : {0.0, 1.0, -0.5, 1.5}) {
    CHECK_THROWS_AS(equation_value(RadiusEquation::r_pm(1, 0), r), BohrError);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(RadiusEquation::r_pm(1, 2).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::r_tstar(0, 0).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::r_star(2, 2).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::r_dstar(65, 1).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::r_tstar(65, 1).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::rog_np(1, 0.0).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::rog_np(1, 2.5).validate(), BohrError);
  CHECK_THROWS_AS(RadiusEquation::rog_npm(1, 1.0, 0).validate(), BohrError);
  CHECK_NOTHROW(RadiusEquation::rog_np(64, 2.0).validate());
  CHECK(radius_kind_from_string("R_DSTAR_NM") == RadiusKind::RDStarNm);
  CHECK_THROWS_AS(radius_kind_from_string("R_X"), BohrError);
}

TEST_CASE("maximal roots at known values") {
  for (int p = 1; p <= 6; ++p) {
    const RootResult rr = maximal_root(RadiusEquation::r_tstar(p, 0));
    CHECK(std::abs(rr.root - std::pow(3.0, -1.0 / p)) <= 1e-10);
    CHECK(rr.double_root);
  }
  CHECK(std::abs(maximal_root(RadiusEquation::r_star(1, 0)).root - 1.0 / 3.0) <= 1e-10);
  CHECK(std::abs(maximal_root(RadiusEquation::r_star(2, 1)).root - 0.6) <= 1e-10);
  const double r21 = maximal_root(RadiusEquation::r_tstar(2, 1)).root;
  CHECK(r21 > 1.0 / std::sqrt(3.0));
  CHECK(r21 < 1.0);
  // R_PM with m = p reduces to 8 r^{2p} = 4
  CHECK(std::abs(maximal_root(RadiusEquation::r_pm(3, 3)).root - std::pow(0.5, 1.0 / 6.0)) <= 1e-10);
}

TEST_CASE("unique roots") {
  CHECK(std::abs(unique_root(RadiusEquation::rog_np(1, 2)).root - 0.5) <= 1e-10);
  CHECK(std::abs(unique_root(RadiusEquation::rog_np(1, 1)).root - 1.0 / 3.0) <= 1e-10);
  // m -> infinity limit
  const double a = unique_root(RadiusEquation::rog_npm(2, 1.0, 64)).root;
  const double b = unique_root(RadiusEquation::rog_np(2, 1.0)).root;
  CHECK(std::abs(a - b) <= 1e-8);
  // golden ratio: 2r^2 = 2(1 - r)
  CHECK(std::abs(unique_root(RadiusEquation::rog_np(2, 2)).root - (std::sqrt(5.0) - 1) / 2) <= 1e-10);
  CHECK_THROWS_AS(unique_root(RadiusEquation::r_pm(1, 0)), BohrError);
}

TEST_CASE("star equivalence") {
  CHECK(star_equivalence_check(1, 0) <= 1e-12);
  CHECK(star_equivalence_check(2, 1) <= 1e-12);
  for (int m = 0; m <= 4; ++m) {
    for (int n = m + 1; n <= 8; ++n) CHECK(star_equivalence_check(n, m) <= 1e-10);
  }
}

TEST_CASE("table roots are certified and maximal") {
  const auto eqs = radius_table_equations(6, 4, 6);
  CHECK(radius_table_equations(0, 0, 0).empty());
  for (const auto& e : eqs) {
    const bool unique = e.kind == RadiusKind::RogNpm || e.kind == RadiusKind::RogNp;
    const RootResult rr = unique ? unique_root(e) : maximal_root(e);
    CHECK(rr.root > 0.0);
    CHECK(rr.root < 1.0);
    CHECK(std::abs(equation_value(e, rr.root)) <= 1e-10);
    // no sign change on the grid above the root
    const bool last_negative = equation_value(e, 1.0 - 1e-4) < 0;
    bool stable = true;
    for (double r = rr.root + 2e-4; r < 1.0 - 1e-4 && stable; r += 1e-4) {
      stable = (equation_value(e, r) < 0) == last_negative;
    }
    CHECK_MESSAGE(stable, e.describe());
  }
}

TEST_CASE("refined lacunary roots exceed the m = 0 root") {
  for (int p = 1; p <= 6; ++p) {
    for (int m = 1; m <= p; ++m) {
      CHECK(maximal_root(RadiusEquation::r_tstar(p, m)).root > std::pow(3.0, -1.0 / p));
    }
  }
}

TEST_CASE("Bohr-Rogosinski roots increase in N") {
  for (double q : {0.5, 1.0, 2.0}) {
    double prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
      const double r = unique_root(RadiusEquation::rog_np(n, q)).root;
      CHECK(r > prev);
      prev = r;
    }
    prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
      const double r = unique_root(RadiusEquation::rog_npm(n, q, 3)).root;
      CHECK(r > prev);
      prev = r;
    }
  }
}
