#include "bohrlab/extremal.hpp"

#include <cmath>

namespace bohrlab::extremal {

double a_family_value(double a, int p, int m, double r) {
  const double rp = std::pow(r, p);
  return std::pow(r, m) * (a + (1.0 - a * a) * rp / (1.0 - rp));
}

double d_family_value(double a, int m, double r) {
  return std::pow(r, m) * (a + (1.0 - a * a) * r / (1.0 - r));
}

double psi_rogosinski(double a, double p_exp, int n, std::optional<int> m, double r) {
  const double rm = m ? std::pow(r, *m) : 0.0;
  const double head = std::pow((a + rm) / (1.0 + a * rm), p_exp);
  const int t = (n - 1) / 2;
  const double rn = std::pow(r, n);
  double psi = (head - 1.0) / (1.0 - a);
  psi += (1.0 + a) * rn * std::pow(a, n - 1) / (1.0 - a * r);
  if (t >= 1) {
    // sum_{s=1}^t a^{2s-2} = (1 - a^{2t}) / (1 - a^2)
    const double geometric = (1.0 - std::pow(a, 2.0 * t)) / (1.0 - a * a);
    psi += (1.0 - a * a) * (1.0 + a) * geometric * rn / (1.0 - r);
  }
  // sum_{s>t} a^{2s-2} r^{2s} = a^{2t} r^{2t+2} / (1 - a^2 r^2)
  const double tail = std::pow(a, 2.0 * t) * std::pow(r, 2.0 * t + 2.0) / (1.0 - a * a * r * r);
  psi += (1.0 / (1.0 + a) + r / (1.0 - r)) * (1.0 - a * a) * (1.0 + a) * tail;
  return psi;
}

double psi_rogosinski_limit(double p_exp, int n, std::optional<int> m, double r) {
  const double rm = m ? std::pow(r, *m) : 0.0;
  return -p_exp * (1.0 - rm) / (1.0 + rm) + 2.0 * std::pow(r, n) / (1.0 - r);
}

double psi_improved(double a, const std::vector<double>& d, double r) {
  double psi = 1.0 - (1.0 + a) * r / (1.0 - r);
  const double denom = 1.0 - a * a * r * r;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const double k = double(i);
    psi -= d[i - 1] * std::pow(r, 2.0 * k) * std::pow(1.0 - a, 2.0 * k - 1.0) *
           std::pow(1.0 + a, 2.0 * k) / std::pow(denom, 2.0 * k);
  }
  return psi;
}

double psi_improved_limit(double r) { return (1.0 - 3.0 * r) / (1.0 - r); }

double a_family_optimal_parameter(int p, double r0) {
  const double rp = std::pow(r0, p);
  return (1.0 - rp) / (2.0 * rp);
}

double d_family_optimal_parameter(double r0) { return (1.0 - r0) / (2.0 * r0); }

}  // namespace bohrlab::extremal
