#include "bohrlab/radii.hpp"

#include <cmath>
#include <fmt/format.h>
#include <utility>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

struct Monomial {
  double coeff;
  double exponent;
};

// Every kind except RogNpm is a short sum of monomials.
std::vector<Monomial> monomials(const RadiusEquation& eq) {
  const double p = eq.p, m = eq.m, n = eq.n;
  switch (eq.kind) {
    case RadiusKind::RPm:
      return {{-6.0, p - m}, {1.0, 2.0 * (p - m)}, {8.0, 2.0 * p}, {1.0, 0.0}};
    case RadiusKind::RStarNm:
      if (eq.m == 0) return {{2.0, n}, {1.0, 1.0}, {-1.0, 0.0}};
      if (eq.n > 2 * eq.m) {
        return {{4.0, 2.0 * (n - m)}, {4.0, n + 1.0 - 2.0 * m}, {-4.0, n - 2.0 * m},
                {1.0, 2.0}, {-2.0, 1.0}, {1.0, 0.0}};
      }
      return {{4.0, n}, {1.0, 2.0 + 2.0 * m - n}, {-2.0, 1.0 + 2.0 * m - n},
              {1.0, 2.0 * m - n}, {4.0, 1.0}, {-4.0, 0.0}};
    case RadiusKind::RDStarNm:
      return {{4.0, 2.0 * n - m}, {4.0, n + 1.0 - m}, {-4.0, n - m},
              {1.0, m + 2.0}, {-2.0, m + 1.0}, {1.0, m}};
    case RadiusKind::RTStarPm:
      return {{5.0, 2.0 * p + m}, {-2.0, p + m}, {1.0, m}, {4.0, 2.0 * p}, {-4.0, p}};
    case RadiusKind::RogNp:
      return {{2.0, n}, {eq.p_exp, 1.0}, {-eq.p_exp, 0.0}};
    case RadiusKind::RogNpm:
      break;
  }
  return {};
}

double power(double r, double e) { return e == 0.0 ? 1.0 : std::pow(r, e); }

void require_open_unit(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw BohrError(ErrorCode::InvalidArgument, "radius equations are evaluated on (0, 1)");
  }
}

template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  while (hi - lo > kRootBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(RadiusKind kind) {
  switch (kind) {
    case RadiusKind::RPm: return "R_PM";
    case RadiusKind::RStarNm: return "R_STAR_NM";
    case RadiusKind::RDStarNm: return "R_DSTAR_NM";
    case RadiusKind::RTStarPm: return "R_TSTAR_PM";
    case RadiusKind::RogNpm: return "ROG_NPM";
    case RadiusKind::RogNp: return "ROG_NP";
  }
  return "?";
}

RadiusKind radius_kind_from_string(const std::string& s) {
  for (RadiusKind k : {RadiusKind::RPm, RadiusKind::RStarNm, RadiusKind::RDStarNm,
                       RadiusKind::RTStarPm, RadiusKind::RogNpm, RadiusKind::RogNp}) {
    if (s == to_string(k)) return k;
  }
  throw BohrError(ErrorCode::Parse, "unknown radius kind '" + s + "'");
}

void RadiusEquation::validate() const {
  auto fail = [&](const std::string& why) {
    throw BohrError(ErrorCode::InvalidArgument, describe() + ": " + why);
  };
  auto capped = [&](int v) { return v <= kMaxRadiusParameter; };
  switch (kind) {
    case RadiusKind::RPm:
    case RadiusKind::RTStarPm:
      if (p < 1 || m < 0 || m > p) fail("needs p >= 1 and 0 <= m <= p");
      if (!capped(p)) fail("p exceeds the cap of 64");
      break;
    case RadiusKind::RStarNm:
    case RadiusKind::RDStarNm:
      if (m < 0 || n < m + 1) fail("needs m >= 0 and N >= m + 1");
      if (!capped(n)) fail("N exceeds the cap of 64");
      break;
    case RadiusKind::RogNpm:
      if (m < 1) fail("needs m >= 1");
      if (!capped(m)) fail("m exceeds the cap of 64");
      [[fallthrough]];
    case RadiusKind::RogNp:
      if (n < 1) fail("needs N >= 1");
      if (!capped(n)) fail("N exceeds the cap of 64");
      if (!(p_exp > 0.0 && p_exp <= 2.0)) fail("exponent p must lie in (0, 2]");
      break;
  }
}

std::string RadiusEquation::describe() const {
  switch (kind) {
    case RadiusKind::RPm:
    case RadiusKind::RTStarPm:
      return fmt::format("{}(p={}, m={})", to_string(kind), p, m);
    case RadiusKind::RStarNm:
    case RadiusKind::RDStarNm:
      return fmt::format("{}(N={}, m={})", to_string(kind), n, m);
    case RadiusKind::RogNpm:
      return fmt::format("{}(N={}, p={}, m={})", to_string(kind), n, p_exp, m);
    case RadiusKind::RogNp:
      return fmt::format("{}(N={}, p={})", to_string(kind), n, p_exp);
  }
  return "?";
}

double equation_value(const RadiusEquation& eq, double r) {
  require_open_unit(r);
  if (eq.kind == RadiusKind::RogNpm) {
    const double rm = power(r, eq.m);
    return eq.p_exp * (1.0 - rm) / (1.0 + rm) - 2.0 * power(r, eq.n) / (1.0 - r);
  }
  double acc = 0.0;
  for (const auto& t : monomials(eq)) acc += t.coeff * power(r, t.exponent);
  return acc;
}

double equation_derivative(const RadiusEquation& eq, double r) {
  require_open_unit(r);
  if (eq.kind == RadiusKind::RogNpm) {
    const double rm = power(r, eq.m);
    const double rn = power(r, eq.n);
    const double d1 = eq.p_exp * (-2.0 * eq.m * power(r, eq.m - 1)) / ((1.0 + rm) * (1.0 + rm));
    const double d2 = 2.0 * (eq.n * power(r, eq.n - 1) * (1.0 - r) + rn) / ((1.0 - r) * (1.0 - r));
    return d1 - d2;
  }
  double acc = 0.0;
  for (const auto& t : monomials(eq)) {
    if (t.exponent != 0.0) acc += t.coeff * t.exponent * power(r, t.exponent - 1.0);
  }
  return acc;
}

RootResult maximal_root(const RadiusEquation& eq) {
  eq.validate();
  auto f = [&](double r) { return equation_value(eq, r); };
  auto df = [&](double r) { return equation_derivative(eq, r); };

  const int cells = int(std::lround(1.0 / kRootGridStep));
  std::vector<double> grid(cells), values(cells);
  for (int i = 1; i < cells; ++i) {
    grid[i] = i * kRootGridStep;
    values[i] = f(grid[i]);
  }

  // Scan downward: the first certified root found is the maximal one.
  for (int i = cells - 1; i >= 1; --i) {
    const double r = grid[i], v = values[i];
    if (v == 0.0) return {r, 0.0, false};
    if (i + 1 < cells && (values[i + 1] < 0.0) != (v < 0.0) && values[i + 1] != 0.0) {
      const double root = bisect(f, r, grid[i + 1]);
      const double res = f(root);
      if (std::abs(res) <= kRootResidual) return {root, res, false};
    }
    // Local minimum of |value| without a sign change: candidate touching root.
    if (i >= 2 && i + 1 < cells && (values[i - 1] < 0.0) == (v < 0.0) &&
        (values[i + 1] < 0.0) == (v < 0.0) && std::abs(v) <= std::abs(values[i - 1]) &&
        std::abs(v) <= std::abs(values[i + 1])) {
      const double lo = grid[i - 1], hi = grid[i + 1];
      double x = r;
      if ((df(lo) < 0.0) != (df(hi) < 0.0)) x = bisect(df, lo, hi);
      const double res = f(x);
      if (std::abs(res) <= kRootResidual) return {x, res, true};
    }
  }
  throw BohrError(ErrorCode::NoRoot, "no certified root in (0, 1) for " + eq.describe());
}

RootResult unique_root(const RadiusEquation& eq) {
  eq.validate();
  if (eq.kind != RadiusKind::RogNpm && eq.kind != RadiusKind::RogNp) {
    throw BohrError(ErrorCode::InvalidArgument, "unique_root is for the Bohr-Rogosinski kinds");
  }
  auto f = [&](double r) { return equation_value(eq, r); };
  double lo = kRootGridStep, hi = 1.0 - kRootGridStep;
  // Widen toward the endpoints until the bracket holds a sign change.
  while ((f(lo) < 0.0) == (f(hi) < 0.0)) {
    if (lo < 1e-300 && hi > 1.0 - 1e-15) {
      throw BohrError(ErrorCode::NoRoot, "no sign change for " + eq.describe());
    }
    lo *= 0.5;
    hi = 0.5 * (hi + 1.0);
  }
  const double root = bisect(f, lo, hi);
  const double res = f(root);
  if (std::abs(res) > kRootResidual) {
    throw BohrError(ErrorCode::NoRoot, "residual too large for " + eq.describe());
  }
  return {root, res, false};
}

double star_equivalence_check(int n, int m) {
  const double a = maximal_root(RadiusEquation::r_star(n, m)).root;
  const double b = maximal_root(RadiusEquation::r_dstar(n, m)).root;
  return std::abs(a - b);
}

std::vector<RadiusEquation> radius_table_equations(int p_max, int m_max, int n_max) {
  std::vector<RadiusEquation> out;
  for (int p = 1; p <= p_max; ++p) {
    for (int m = 0; m <= std::min(p, m_max); ++m) out.push_back(RadiusEquation::r_pm(p, m));
  }
  for (int p = 1; p <= p_max; ++p) {
    for (int m = 0; m <= std::min(p, m_max); ++m) out.push_back(RadiusEquation::r_tstar(p, m));
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= std::min(n - 1, m_max); ++m) out.push_back(RadiusEquation::r_star(n, m));
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= std::min(n - 1, m_max); ++m) {
      out.push_back(RadiusEquation::r_dstar(n, m));
    }
  }
  // Exponents p in (0, 2]; the table lists the integer ones under the p cap.
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= std::min(p_max, 2); ++p) {
      for (int m = 1; m <= m_max; ++m) out.push_back(RadiusEquation::rog_npm(n, p, m));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= std::min(p_max, 2); ++p) out.push_back(RadiusEquation::rog_np(n, p));
  }
  return out;
}

}  // namespace bohrlab
