#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

// Slack for floating-point noise when checking the coefficient invariants.
constexpr double kInvariantSlack = 1e-12;

void require_disk_parameter(double a) {
  if (!(a >= 0.0 && a < 1.0)) {
    throw BohrError(ErrorCode::InvalidArgument,
                    "Mobius parameter must lie in [0, 1), got " + std::to_string(a));
  }
}

// q = num / den mod lambda^{order+1}; den[0] != 0.
std::vector<Complex> divide(const std::vector<Complex>& num,
                            const std::vector<Complex>& den, std::size_t order) {
  std::vector<Complex> q(order + 1);
  const Complex d0 = den[0];
  const std::size_t dn = den.size();
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = n < num.size() ? num[n] : Complex{};
    const std::size_t jmax = std::min(n, dn - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * q[n - j];
    q[n] = acc / d0;
  }
  return q;
}

double tail_weight(double b, double t, double r, TailWeight weight) {
  if (b == 0.0 || r == 0.0) return 0.0;
  switch (weight) {
    case TailWeight::Linear:
      return b * std::pow(r, t + 1.0) / (1.0 - r);
    case TailWeight::Squared:
      return b * b * std::pow(r, 2.0 * (t + 1.0)) / (1.0 - r * r);
    case TailWeight::SStar: {
      // sum_{s>T} s x^s = x^{T+1} ((T+1) - T x) / (1-x)^2 with x = r^2
      const double x = r * r;
      return b * b * std::pow(x, t + 1.0) * ((t + 1.0) - t * x) / ((1.0 - x) * (1.0 - x));
    }
  }
  return 0.0;
}

}  // namespace

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::SchurExact: return "SCHUR_EXACT";
    case Certificate::SchurSampled: return "SCHUR_SAMPLED";
    case Certificate::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Certificate certificate_from_string(const std::string& s) {
  if (s == "SCHUR_EXACT") return Certificate::SchurExact;
  if (s == "SCHUR_SAMPLED") return Certificate::SchurSampled;
  if (s == "UNKNOWN") return Certificate::Unknown;
  throw BohrError(ErrorCode::Parse, "unknown certificate '" + s + "'");
}

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs, double coefficient_bound,
                                     Certificate certificate)
    : coeffs_(std::move(coeffs)), bound_(coefficient_bound), certificate_(certificate) {
  if (coeffs_.empty()) {
    throw BohrError(ErrorCode::InvalidArgument, "series needs at least c_0");
  }
  if (!(bound_ >= 0.0 && bound_ <= 1.0)) {
    throw BohrError(ErrorCode::InvalidArgument, "coefficient bound must lie in [0, 1]");
  }
  const double a0 = std::abs(coeffs_[0]);
  if (a0 > 1.0 + kInvariantSlack) {
    throw BohrError(ErrorCode::InvalidArgument, "|c_0| exceeds 1");
  }
  if (a0 >= 1.0 - kInvariantSlack) {
    for (std::size_t s = 1; s < coeffs_.size(); ++s) {
      if (std::abs(coeffs_[s]) > kInvariantSlack) {
        throw BohrError(ErrorCode::InvalidArgument,
                        "|c_0| = 1 forces every other coefficient to vanish");
      }
    }
  }
  if (certificate_ == Certificate::SchurExact) {
    const double cap = std::max(0.0, 1.0 - a0 * a0) + kInvariantSlack;
    for (std::size_t s = 1; s < coeffs_.size(); ++s) {
      if (std::abs(coeffs_[s]) > cap) {
        throw BohrError(ErrorCode::InvalidArgument,
                        "coefficient " + std::to_string(s) + " violates |c_s| <= 1 - |c_0|^2");
      }
    }
  }
}

CoefficientSeries CoefficientSeries::constant(Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return CoefficientSeries(std::move(c), 0.0, Certificate::SchurExact);
}

bool CoefficientSeries::is_unimodular_constant() const noexcept {
  return std::abs(coeffs_[0]) >= 1.0 - kInvariantSlack;
}

Complex CoefficientSeries::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CoefficientSeries LacunarySeries::expand() const { return lacunary_expand(m, p, g); }

CoefficientSeries mobius_series(double a, std::size_t order) {
  require_disk_parameter(a);
  if (order < 1) throw BohrError(ErrorCode::InvalidArgument, "order must be >= 1");
  std::vector<Complex> c(order + 1);
  c[0] = a;
  double term = 1.0 - a * a;
  for (std::size_t s = 1; s <= order; ++s) {
    c[s] = term;
    term *= -a;
  }
  return CoefficientSeries(std::move(c), (1.0 - a * a) * std::pow(a, double(order)),
                           Certificate::SchurExact);
}

CoefficientSeries mobius_minus_series(double a, std::size_t order) {
  require_disk_parameter(a);
  if (order < 1) throw BohrError(ErrorCode::InvalidArgument, "order must be >= 1");
  std::vector<Complex> c(order + 1);
  c[0] = -a;
  double term = 1.0 - a * a;
  for (std::size_t s = 1; s <= order; ++s) {
    c[s] = term;
    term *= a;
  }
  return CoefficientSeries(std::move(c), (1.0 - a * a) * std::pow(a, double(order)),
                           Certificate::SchurExact);
}

CoefficientSeries mobius_compose(Complex gamma, const CoefficientSeries& inner,
                                 std::size_t order) {
  if (std::abs(gamma) > 1.0 + kInvariantSlack) {
    throw BohrError(ErrorCode::InvalidArgument, "Schur parameter outside the closed disk");
  }
  if (std::abs(inner[0]) > kInvariantSlack) {
    throw BohrError(ErrorCode::InvalidArgument, "inner function must vanish at 0");
  }
  if (std::abs(gamma) >= 1.0 - kInvariantSlack) {
    return CoefficientSeries::constant(gamma / std::abs(gamma), order);
  }
  const std::size_t n = std::min(order, inner.truncation_order());
  std::vector<Complex> num(n + 1), den(n + 1);
  const Complex cg = std::conj(gamma);
  for (std::size_t s = 0; s <= n; ++s) {
    num[s] = inner[s];
    den[s] = cg * inner[s];
  }
  num[0] += gamma;
  den[0] += 1.0;
  // Orders past the inner truncation are unknown; cap the result there.
  auto c = divide(num, den, n);
  const double a0 = std::abs(c[0]);
  Certificate cert = inner.certificate();
  return CoefficientSeries(std::move(c), std::min(1.0, 1.0 - a0 * a0), cert);
}

CoefficientSeries schur_from_parameters(std::span<const Complex> gamma, std::size_t order) {
  for (const Complex& g : gamma) {
    if (std::abs(g) > 1.0 + kInvariantSlack) {
      throw BohrError(ErrorCode::InvalidArgument, "Schur parameter outside the closed disk");
    }
  }
  std::size_t last = gamma.size();
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (std::abs(gamma[k]) >= 1.0 - kInvariantSlack) {
      last = k;
      break;
    }
  }
  // Run the recursion on numerator and denominator polynomials, so f = P / Q
  // with deg P, deg Q <= K and one final O(T K) division.
  std::vector<Complex> num{Complex{}}, den{Complex{1.0}};
  if (last < gamma.size()) num[0] = gamma[last] / std::abs(gamma[last]);
  std::size_t k = last;
  while (k-- > 0) {
    const Complex g = gamma[k];
    const Complex cg = std::conj(g);
    // (g Q + lambda P) / (Q + conj(g) lambda P)
    std::vector<Complex> p2(num.size() + 1), q2(num.size() + 1);
    for (std::size_t s = 0; s < den.size(); ++s) {
      p2[s] += g * den[s];
      q2[s] += den[s];
    }
    for (std::size_t s = 0; s < num.size(); ++s) {
      p2[s + 1] += num[s];
      q2[s + 1] += cg * num[s];
    }
    num = std::move(p2);
    den = std::move(q2);
  }
  auto f = divide(num, den, order);
  const double a0 = std::abs(f[0]);
  if (a0 >= 1.0 - kInvariantSlack) {
    return CoefficientSeries::constant(f[0] / a0, order);
  }
  return CoefficientSeries(std::move(f), 1.0 - a0 * a0, Certificate::SchurExact);
}

CoefficientSeries lacunary_expand(int m, int p, const CoefficientSeries& g) {
  if (m < 0 || p < 1) {
    throw BohrError(ErrorCode::InvalidArgument, "lacunary expansion needs m >= 0 and p >= 1");
  }
  const std::size_t tg = g.truncation_order();
  const std::size_t order = std::size_t(m) + std::size_t(p) * tg;
  std::vector<Complex> c(order + 1);
  for (std::size_t s = 0; s <= tg; ++s) c[std::size_t(m) + std::size_t(p) * s] = g[s];
  // lambda^m g(lambda^p) is Schur class iff g is.
  return CoefficientSeries(std::move(c), g.coefficient_bound(), g.certificate());
}

CoefficientSeries schwarz_power(int m, std::size_t order) {
  if (m < 0) throw BohrError(ErrorCode::InvalidArgument, "order of zero must be >= 0");
  std::vector<Complex> c(std::max(order, std::size_t(m)) + 1);
  c[std::size_t(m)] = 1.0;
  return CoefficientSeries(std::move(c), 0.0, Certificate::SchurExact);
}

double tail_bound(const CoefficientSeries& series, double r, TailWeight weight) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw BohrError(ErrorCode::RadiusRejected, "tail bound needs 0 <= r < 1");
  }
  return tail_weight(series.coefficient_bound(), double(series.truncation_order()), r, weight);
}

std::size_t max_truncation() {
  if (const char* env = std::getenv("BOHRLAB_MAX_TRUNC")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::size_t(v);
  }
  return 20000;
}

std::size_t default_truncation(double r) {
  if (!(r >= 0.0 && r < kMaxRadius)) {
    throw BohrError(ErrorCode::RadiusRejected,
                    "radius " + std::to_string(r) + " is outside [0, 0.995)");
  }
  const std::size_t cap = max_truncation();
  std::size_t order = 1;
  if (r > 0.0) {
    const double guess = std::log(kTailTarget * (1.0 - r)) / std::log(r);
    order = std::size_t(std::max(1.0, std::floor(guess)));
  }
  for (; order < cap; ++order) {
    const double t = double(order);
    if (tail_weight(1.0, t, r, TailWeight::Linear) <= kTailTarget &&
        tail_weight(1.0, t, r, TailWeight::Squared) <= kTailTarget &&
        tail_weight(1.0, t, r, TailWeight::SStar) <= kTailTarget) {
      return order;
    }
  }
  return cap;
}

}  // namespace bohrlab
