#include "bohrlab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

// Coefficients smaller than this count as structurally zero in support checks.
constexpr double kSupportSlack = 1e-13;

double rpow(double r, double e) { return e == 0.0 ? 1.0 : std::pow(r, e); }

void require_positive_radius(double r) {
  require_radius(r);
  if (r == 0.0) throw BohrError(ErrorCode::RadiusRejected, "this sum is defined for r > 0");
}

EvaluationReport finish(double value, double tail, bool certified, std::string kind,
                        const CoefficientSeries& f, double r, double rhs = 1.0) {
  EvaluationReport rep;
  rep.value = value;
  rep.tail_error = tail;
  rep.margin = value + tail - rhs;
  rep.certified = certified;
  rep.inputs.kind = std::move(kind);
  rep.inputs.function = fmt::format("series(T={}, bound={:.3g}, {})", f.truncation_order(),
                                    f.coefficient_bound(), to_string(f.certificate()));
  rep.inputs.r = r;
  return rep;
}

// Left side of the refined tail estimate:
//   sum_{s>=N} |c_s| r^s + sgn(t) sum_{s=1}^t |c_s|^2 r^N/(1-r)
//   + (1/(1+|c_0|) + r/(1-r)) sum_{s>t} |c_s|^2 r^{2s},   t = floor((N-1)/2).
BoundedValue lemma_lhs(const CoefficientSeries& f, int n, double r) {
  const int t = (n - 1) / 2;
  const std::size_t order = f.truncation_order();
  if (order < std::size_t(t)) {
    throw BohrError(ErrorCode::InvalidArgument, "series truncated below floor((N-1)/2)");
  }
  double linear = 0.0, middle = 0.0, squared = 0.0;
  double rs = 1.0;
  for (std::size_t s = 0; s <= order; ++s) {
    const double a = f.modulus(s);
    if (s >= std::size_t(n)) linear += a * rs;
    if (s >= 1 && s <= std::size_t(t)) middle += a * a;
    if (s > std::size_t(t) && s >= 1) squared += a * a * rs * rs;
    rs *= r;
  }
  const double bracket = 1.0 / (1.0 + f.modulus(0)) + r / (1.0 - r);
  BoundedValue out;
  out.value = linear + (t >= 1 ? middle * rpow(r, n) / (1.0 - r) : 0.0) + bracket * squared;
  out.tail_error = tail_bound(f, r, TailWeight::Linear) +
                   bracket * tail_bound(f, r, TailWeight::Squared);
  return out;
}

double polynomial_g(const std::vector<double>& d, double x) {
  double acc = 0.0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) acc = (acc + *it) * x;
  return acc;
}

}  // namespace

const char* to_string(FunctionalTag tag) {
  switch (tag) {
    case FunctionalTag::APm: return "A_PM";
    case FunctionalTag::DNm: return "D_NM";
    case FunctionalTag::GMpN: return "G_MPN";
    case FunctionalTag::HpN: return "H_PN";
    case FunctionalTag::IM: return "I_M";
    case FunctionalTag::LemmaTail: return "LEMMA_TAIL";
  }
  return "?";
}

FunctionalTag functional_tag_from_string(const std::string& s) {
  for (FunctionalTag t : {FunctionalTag::APm, FunctionalTag::DNm, FunctionalTag::GMpN,
                          FunctionalTag::HpN, FunctionalTag::IM, FunctionalTag::LemmaTail}) {
    if (s == to_string(t)) return t;
  }
  throw BohrError(ErrorCode::Parse, "unknown functional kind '" + s + "'");
}

void FunctionalKind::validate() const {
  auto fail = [&](const std::string& why) {
    throw BohrError(ErrorCode::InvalidArgument, describe() + ": " + why);
  };
  switch (tag) {
    case FunctionalTag::APm:
      RadiusEquation::r_tstar(p, m).validate();
      break;
    case FunctionalTag::DNm:
      RadiusEquation::r_dstar(n, m).validate();
      break;
    case FunctionalTag::GMpN:
      RadiusEquation::rog_npm(n, p_exp, m).validate();
      break;
    case FunctionalTag::HpN:
      RadiusEquation::rog_np(n, p_exp).validate();
      break;
    case FunctionalTag::IM:
      for (double di : d) {
        if (!(di >= 0.0)) fail("coefficients d_i must be nonnegative");
      }
      if (!constraint_check(d).ok) {
        throw BohrError(ErrorCode::ConstraintViolated, describe() + ": constraint violated");
      }
      break;
    case FunctionalTag::LemmaTail:
      if (n < 1) fail("needs N >= 1");
      break;
  }
}

std::string FunctionalKind::describe() const {
  switch (tag) {
    case FunctionalTag::APm: return fmt::format("A_PM(p={}, m={})", p, m);
    case FunctionalTag::DNm: return fmt::format("D_NM(N={}, m={})", n, m);
    case FunctionalTag::GMpN: return fmt::format("G_MPN(m={}, p={}, N={})", m, p_exp, n);
    case FunctionalTag::HpN: return fmt::format("H_PN(p={}, N={})", p_exp, n);
    case FunctionalTag::IM: return fmt::format("I_M(d=[{}])", fmt::join(d, ","));
    case FunctionalTag::LemmaTail: return fmt::format("LEMMA_TAIL(N={})", n);
  }
  return "?";
}

double theorem_radius(const FunctionalKind& kind) {
  kind.validate();
  switch (kind.tag) {
    case FunctionalTag::APm:
      return maximal_root(RadiusEquation::r_tstar(kind.p, kind.m)).root;
    case FunctionalTag::DNm:
      return maximal_root(RadiusEquation::r_dstar(kind.n, kind.m)).root;
    case FunctionalTag::GMpN:
      return unique_root(RadiusEquation::rog_npm(kind.n, kind.p_exp, kind.m)).root;
    case FunctionalTag::HpN:
      return unique_root(RadiusEquation::rog_np(kind.n, kind.p_exp)).root;
    case FunctionalTag::IM:
      return 1.0 / 3.0;
    case FunctionalTag::LemmaTail:
      break;
  }
  throw BohrError(ErrorCode::InvalidArgument, "the tail estimate holds for every r < 1");
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < kMaxRadius)) {
    throw BohrError(ErrorCode::RadiusRejected,
                    fmt::format("radius {} is outside [0, {})", r, kMaxRadius));
  }
}

EvaluationReport eval_A(const LacunarySeries& f, double r) {
  auto rep = eval_A_terms(f.expand(), f.p, f.m, r);
  rep.inputs.function = fmt::format("lacunary(m={}, p={}, T_g={})", f.m, f.p,
                                    f.g.truncation_order());
  return rep;
}

EvaluationReport eval_A_terms(const CoefficientSeries& terms, int p, int m, double r) {
  FunctionalKind::a_pm(p, m).validate();
  require_positive_radius(r);
  const std::size_t order = terms.truncation_order();
  if (order < std::size_t(m)) {
    throw BohrError(ErrorCode::InvalidArgument, "series truncated below degree m");
  }
  for (std::size_t k = 0; k <= order; ++k) {
    const bool on_support = k >= std::size_t(m) && (k - std::size_t(m)) % std::size_t(p) == 0;
    if (!on_support && terms.modulus(k) > kSupportSlack) {
      throw BohrError(ErrorCode::SupportViolation,
                      fmt::format("coefficient {} lies off the support {{sp+{}}}", k, m));
    }
  }
  const std::string kind = FunctionalKind::a_pm(p, m).describe();
  const double rm = rpow(r, m);
  const double am = terms.modulus(std::size_t(m));
  if (am >= 1.0 - kSupportSlack) {
    // g is a unimodular constant: only the degree-m term survives.
    return finish(rm, 0.0, terms.certified(), kind, terms, r);
  }
  const double rp = rpow(r, p);
  double linear = 0.0, squared = 0.0;
  double rk = rm;
  for (std::size_t k = std::size_t(m); k <= order; k += std::size_t(p), rk *= rp) {
    const double term = terms.modulus(k) * rk;
    linear += term;
    if (k > std::size_t(m)) squared += term * term;
  }
  const double bracket = 1.0 / (rm + am * rm) + rpow(r, p - m) / (1.0 - rp);
  const double tail = tail_bound(terms, r, TailWeight::Linear) +
                      bracket * tail_bound(terms, r, TailWeight::Squared);
  return finish(linear + bracket * squared, tail, terms.certified(), kind, terms, r);
}

EvaluationReport eval_D(const CoefficientSeries& terms, int m, int n, double r,
                        SquaredIndex index) {
  FunctionalKind::d_nm(n, m).validate();
  require_radius(r);
  const std::size_t order = terms.truncation_order();
  for (std::size_t k = 0; k <= order; ++k) {
    const bool on_support = k == std::size_t(m) || k >= std::size_t(n);
    if (!on_support && terms.modulus(k) > kSupportSlack) {
      throw BohrError(ErrorCode::SupportViolation,
                      fmt::format("coefficient {} lies off the support {{{}}} u [{}, inf)", k, m, n));
    }
  }
  const std::string kind = FunctionalKind::d_nm(n, m).describe() +
                           (index == SquaredIndex::ShiftedByM ? "[shifted]" : "");
  if (r == 0.0) {
    // Every term of positive degree vanishes at z = 0.
    return finish(m == 0 ? terms.modulus(0) : 0.0, 0.0, terms.certified(), kind, terms, r);
  }
  const double rm = rpow(r, m);
  const double am = terms.modulus(std::size_t(m));
  if (am >= 1.0 - kSupportSlack) {
    return finish(rm, 0.0, terms.certified(), kind, terms, r);
  }
  const std::size_t shift = index == SquaredIndex::ShiftedByM ? std::size_t(m) : 0;
  double linear = 0.0, squared = 0.0;
  const double r_shift = rpow(r, double(shift));
  double rk = rpow(r, double(n));
  for (std::size_t k = std::size_t(n); k <= order; ++k, rk *= r) {
    linear += terms.modulus(k) * rk;
    const std::size_t ks = k + shift;
    if (ks <= order) {
      const double t = terms.modulus(ks) * rk * r_shift;
      squared += t * t;
    }
  }
  const double bracket = 1.0 / (rm + am * rm) + rpow(r, 1.0 - m) / (1.0 - r);
  const double value = am * rm + linear + bracket * squared;
  const double tail = tail_bound(terms, r, TailWeight::Linear) +
                      bracket * tail_bound(terms, r, TailWeight::Squared);
  return finish(value, tail, terms.certified(), kind, terms, r);
}

namespace {

// Shared body of eval_G / eval_H; m = 0 with w = 0 is the limit case.
EvaluationReport eval_rogosinski(const CoefficientSeries& f, int m, double p_exp, int n,
                                 double r, const CoefficientSeries& w, std::string kind) {
  if (!(p_exp > 0.0 && p_exp <= 2.0)) {
    throw BohrError(ErrorCode::InvalidArgument, "exponent p must lie in (0, 2]");
  }
  if (n < 1) throw BohrError(ErrorCode::InvalidArgument, "needs N >= 1");
  require_radius(r);
  if (!w.certified()) throw BohrError(ErrorCode::NotSchwarz, "Schwarz slice must be Schur class");
  for (std::size_t k = 0; k < std::size_t(m) && k <= w.truncation_order(); ++k) {
    if (std::abs(w[k]) > kSupportSlack) {
      throw BohrError(ErrorCode::NotSchwarz,
                      fmt::format("Schwarz slice needs a zero of order {} at the origin", m));
    }
  }

  // zeta = w(r), |zeta| <= r^m.
  const Complex zeta = w.evaluate(r);
  const double dw = tail_bound(w, r, TailWeight::Linear);
  const double rho = std::abs(zeta) + dw;
  if (rho >= 1.0) throw BohrError(ErrorCode::NotSchwarz, "|w(r)| is not below 1");
  const double fz = std::abs(f.evaluate(zeta));
  double f_err = tail_bound(f, std::abs(zeta), TailWeight::Linear);
  if (dw > 0.0) f_err += dw / ((1.0 - rho) * (1.0 - rho));
  const double head = std::pow(fz, p_exp);
  double head_err = 0.0;
  if (f_err > 0.0) {
    const double lo = std::max(fz - f_err, 0.0);
    head_err = std::max(std::pow(fz + f_err, p_exp) - head, head - std::pow(lo, p_exp));
  }

  const BoundedValue rest = lemma_lhs(f, n, r);
  return finish(head + rest.value, head_err + rest.tail_error, f.certified(), std::move(kind),
                f, r);
}

}  // namespace

EvaluationReport eval_G(const CoefficientSeries& f, int m, double p_exp, int n, double r,
                        const CoefficientSeries& w) {
  if (m < 1) throw BohrError(ErrorCode::InvalidArgument, "Schwarz order m must be >= 1");
  return eval_rogosinski(f, m, p_exp, n, r, w, FunctionalKind::g_mpn(m, p_exp, n).describe());
}

EvaluationReport eval_H(const CoefficientSeries& f, double p_exp, int n, double r) {
  return eval_rogosinski(f, 0, p_exp, n, r, CoefficientSeries::constant(0.0),
                         FunctionalKind::h_pn(p_exp, n).describe());
}

BoundedValue s_star(const CoefficientSeries& f, double r) {
  require_radius(r);
  double acc = 0.0;
  double r2s = 1.0;
  const double r2 = r * r;
  for (std::size_t s = 1; s <= f.truncation_order(); ++s) {
    r2s *= r2;
    const double a = f.modulus(s);
    acc += double(s) * a * a * r2s;
  }
  return {acc, tail_bound(f, r, TailWeight::SStar)};
}

double c_constant(int s) {
  if (s < 1) throw BohrError(ErrorCode::InvalidArgument, "c_s is defined for s >= 1");
  const double e = 2.0 * s - 2.0;
  auto g = [e](double a) { return a * (1.0 + a) * (1.0 + a) * rpow(1.0 - a * a, e); };

  constexpr int kGrid = 10000;
  int best = 0;
  double best_value = g(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = g(double(i) / kGrid);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double lo = double(std::max(best - 1, 0)) / kGrid;
  double hi = double(std::min(best + 1, kGrid)) / kGrid;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  while (hi - lo > 1e-12) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + phi * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - phi * (hi - lo);
      g1 = g(x1);
    }
  }
  return std::max({best_value, g(0.5 * (lo + hi)), g(1.0)});
}

ConstraintResult constraint_check(const std::vector<double>& d) {
  constexpr double kEqualitySlack = 1e-12;
  ConstraintResult out;
  double q = 1.0;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const double di = d[i - 1];
    if (!(di >= 0.0)) {
      throw BohrError(ErrorCode::InvalidArgument, "coefficients d_i must be nonnegative");
    }
    q *= (3.0 / 8.0) * (3.0 / 8.0);
    const double c = i == 1 ? 4.0 : c_constant(int(i));
    out.lhs += 2.0 * (2.0 * double(i) - 1.0) * c * di * q;
  }
  out.ok = out.lhs <= 1.0 + kEqualitySlack;
  out.excess = out.ok ? 0.0 : out.lhs - 1.0;
  return out;
}

EvaluationReport eval_I(const CoefficientSeries& f, const std::vector<double>& d, double r) {
  const ConstraintResult cr = constraint_check(d);
  if (!cr.ok) {
    throw BohrError(ErrorCode::ConstraintViolated,
                    fmt::format("constraint left side {} exceeds 1", cr.lhs));
  }
  require_radius(r);
  const EvaluationReport bohr = eval_D(f, 0, 1, r);
  const BoundedValue ss = s_star(f, r);
  const double g = polynomial_g(d, ss.value);
  const double g_err = polynomial_g(d, ss.value + ss.tail_error) - g;
  return finish(bohr.value + g, bohr.tail_error + g_err, f.certified(),
                FunctionalKind::i_m(d).describe(), f, r);
}

LemmaSlack lemma_tail_bound_check(const CoefficientSeries& f, int n, double r) {
  if (n < 1) throw BohrError(ErrorCode::InvalidArgument, "needs N >= 1");
  require_radius(r);
  const BoundedValue lhs = lemma_lhs(f, n, r);
  const double a0 = f.modulus(0);
  const double rhs = (1.0 - a0 * a0) * rpow(r, n) / (1.0 - r);
  return {rhs - lhs.value, lhs.tail_error};
}

EvaluationReport evaluate(const FunctionalKind& kind, const CoefficientSeries& f, double r) {
  kind.validate();
  switch (kind.tag) {
    case FunctionalTag::APm:
      return eval_A_terms(f, kind.p, kind.m, r);
    case FunctionalTag::DNm:
      return eval_D(f, kind.m, kind.n, r);
    case FunctionalTag::GMpN:
      return eval_G(f, kind.m, kind.p_exp, kind.n, r,
                    schwarz_power(kind.m, std::size_t(kind.m)));
    case FunctionalTag::HpN:
      return eval_H(f, kind.p_exp, kind.n, r);
    case FunctionalTag::IM:
      return eval_I(f, kind.d, r);
    case FunctionalTag::LemmaTail: {
      require_radius(r);
      const BoundedValue lhs = lemma_lhs(f, kind.n, r);
      const double a0 = f.modulus(0);
      const double rhs = (1.0 - a0 * a0) * rpow(r, kind.n) / (1.0 - r);
      return finish(lhs.value, lhs.tail_error, f.certified(), kind.describe(), f, r, rhs);
    }
  }
  throw BohrError(ErrorCode::InvalidArgument, "unknown functional kind");
}

}  // namespace bohrlab
