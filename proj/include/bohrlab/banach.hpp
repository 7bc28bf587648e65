#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

using Vector = std::vector<Complex>;

/// Finite-dimensional l^q space: C^n with the q-norm. q = infinity is the
/// max-modulus norm.
struct SpaceSpec {
  int n = 1;
  double q = 2.0;

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  bool is_infinity() const noexcept { return q == kInfinity; }
  /// Conjugate exponent q' with 1/q + 1/q' = 1.
  double dual_exponent() const noexcept;
  void validate() const;
};

double lq_norm(const Vector& v, const SpaceSpec& spec);

/// Norm of a coefficient vector w as a functional on (C^n, ||.||_q).
double dual_norm(const Vector& w, const SpaceSpec& spec);

/// Coefficients w of a norming functional T_x(y) = sum_j w_j y_j with
/// ||T_x|| = 1 and T_x(x) = ||x||. For q in {1, inf} the functional is not
/// unique; we take conj(sgn x_j) on the support for q = 1 and the first index
/// of maximal modulus for q = inf.
Vector support_functional(const Vector& x, const SpaceSpec& spec);

/// sum_j w_j y_j
Complex apply_functional(const Vector& w, const Vector& y);

enum class MappingForm { ScalarComposite, VectorValued, ZTimesScalar };

const char* to_string(MappingForm form);
MappingForm mapping_form_from_string(const std::string& s);

/// One of the structured mappings on the unit ball of X:
///   ScalarComposite  f(z) = h(T_u(z))
///   VectorValued     f(z) = h(T_u(z)) dir      (dir in Y)
///   ZTimesScalar     f(z) = z h(T_u(z))        (Y = X, so f(0) = 0)
struct BanachFunction {
  MappingForm form = MappingForm::ScalarComposite;
  SpaceSpec domain;
  SpaceSpec target;
  Vector u;
  Vector dir;
  CoefficientSeries h = CoefficientSeries::constant(0.0);

  void validate() const;
};

/// Restriction lambda -> f(lambda omega).
struct Slice {
  MappingForm form = MappingForm::ScalarComposite;
  /// The scalar profile lambda -> h(lambda T_u(omega)). For ZTimesScalar the
  /// slice itself is lambda omega h(lambda T_u(omega)).
  CoefficientSeries series = CoefficientSeries::constant(0.0);
  /// Direction of the values (VectorValued only).
  std::optional<Vector> dir;
  Vector omega;
  SpaceSpec target;
};

Slice slice(const BanachFunction& f, const Vector& omega);

/// Norm-type coefficients ||D^s f(0)(omega^s)|| / s! as a nonnegative real
/// series; the dropped-coefficient bound carries over from the profile.
CoefficientSeries norm_terms(const Slice& s);

/// Functional-type coefficients |T_v(D^s f(0)(omega^s))| / s! for a unit
/// vector v of the target space.
CoefficientSeries functional_terms(const Slice& s, const Vector& v);

}  // namespace bohrlab
