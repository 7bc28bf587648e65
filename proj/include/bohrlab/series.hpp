#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

/// Why a series is believed to be bounded by one on the disk.
enum class Certificate { SchurExact, SchurSampled, Unknown };

const char* to_string(Certificate c);
Certificate certificate_from_string(const std::string& s);

enum class TailWeight { Linear, Squared, SStar };

/// Evaluations at or beyond this radius are refused.
inline constexpr double kMaxRadius = 0.995;
/// Target for the truncation certificate when the order is chosen automatically.
inline constexpr double kTailTarget = 1e-12;

/// Truncated Taylor coefficients c_0..c_T of a disk function together with a
/// bound on every dropped coefficient |c_s|, s > T.
class CoefficientSeries {
 public:
  CoefficientSeries(std::vector<Complex> coeffs, double coefficient_bound,
                    Certificate certificate);

  static CoefficientSeries constant(Complex value, std::size_t order = 0);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }
  double coefficient_bound() const noexcept { return bound_; }
  Certificate certificate() const noexcept { return certificate_; }
  bool certified() const noexcept { return certificate_ != Certificate::Unknown; }

  /// Coefficient s, or zero past the truncation order.
  Complex operator[](std::size_t s) const noexcept {
    return s < coeffs_.size() ? coeffs_[s] : Complex{};
  }
  double modulus(std::size_t s) const noexcept { return std::abs((*this)[s]); }

  /// |c_0| == 1; the maximum principle forces the rest to vanish.
  bool is_unimodular_constant() const noexcept;

  /// Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const noexcept;

 private:
  std::vector<Complex> coeffs_;
  double bound_;
  Certificate certificate_;
};

/// Slice of the form lambda^m * g(lambda^p).
struct LacunarySeries {
  int m = 0;
  int p = 1;
  CoefficientSeries g;

  CoefficientSeries expand() const;
};

/// (a + lambda) / (1 + a lambda).
CoefficientSeries mobius_series(double a, std::size_t order);

/// (lambda - a) / (1 - a lambda).
CoefficientSeries mobius_minus_series(double a, std::size_t order);

/// (gamma + s) / (1 + conj(gamma) s) computed in truncated power-series
/// arithmetic. `inner` must vanish at the origin and be Schur class.
CoefficientSeries mobius_compose(Complex gamma, const CoefficientSeries& inner,
                                 std::size_t order);

/// Schur-algorithm parametrization: f_k = (g_k + lambda f_{k+1}) /
/// (1 + conj(g_k) lambda f_{k+1}), with f_K = 0 after the last parameter and
/// the recursion stopping at the first unimodular parameter.
CoefficientSeries schur_from_parameters(std::span<const Complex> gamma,
                                        std::size_t order);

/// lambda^m * g(lambda^p) expanded to order m + p * T_g.
CoefficientSeries lacunary_expand(int m, int p, const CoefficientSeries& g);

/// lambda^m, the simplest Schwarz function with a zero of order m.
CoefficientSeries schwarz_power(int m, std::size_t order);

/// Upper bound on the dropped part of sum |c_s| r^s (Linear), sum |c_s|^2 r^{2s}
/// (Squared) or sum s |c_s|^2 r^{2s} (SStar).
double tail_bound(const CoefficientSeries& series, double r, TailWeight weight);

/// Truncation cap; BOHRLAB_MAX_TRUNC overrides the default of 20000.
std::size_t max_truncation();

/// Smallest order whose three tail weights all fall below kTailTarget at r,
/// assuming a coefficient bound of one. Throws RadiusRejected for r >= kMaxRadius.
std::size_t default_truncation(double r);

}  // namespace bohrlab
