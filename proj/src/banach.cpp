#include "bohrlab/banach.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kUnitTolerance = 1e-12;

Complex conj_sign(Complex z) {
  const double a = std::abs(z);
  return a == 0.0 ? Complex{} : std::conj(z) / a;
}

void require_dimension(const Vector& v, const SpaceSpec& spec) {
  if (v.size() != std::size_t(spec.n)) {
    throw BohrError(ErrorCode::DimensionMismatch,
                    "vector has dimension " + std::to_string(v.size()) + ", space has " +
                        std::to_string(spec.n));
  }
}

double norm_with_exponent(const Vector& v, double q) {
  if (q == SpaceSpec::kInfinity) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
  }
  // Scale by the max modulus so large q cannot overflow.
  double scale = 0.0;
  for (const Complex& x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const Complex& x : v) acc += std::pow(std::abs(x) / scale, q);
  return scale * std::pow(acc, 1.0 / q);
}

void require_unit(const Vector& v, const SpaceSpec& spec, const char* what) {
  require_dimension(v, spec);
  if (std::abs(lq_norm(v, spec) - 1.0) > kUnitTolerance) {
    throw BohrError(ErrorCode::InvalidArgument, std::string(what) + " must be a unit vector");
  }
}

}  // namespace

double SpaceSpec::dual_exponent() const noexcept {
  if (is_infinity()) return 1.0;
  if (q == 1.0) return kInfinity;
  return q / (q - 1.0);
}

void SpaceSpec::validate() const {
  if (n < 1) throw BohrError(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (!(q >= 1.0)) throw BohrError(ErrorCode::InvalidArgument, "norm exponent must be >= 1");
}

double lq_norm(const Vector& v, const SpaceSpec& spec) {
  require_dimension(v, spec);
  return norm_with_exponent(v, spec.q);
}

double dual_norm(const Vector& w, const SpaceSpec& spec) {
  require_dimension(w, spec);
  return norm_with_exponent(w, spec.dual_exponent());
}

Vector support_functional(const Vector& x, const SpaceSpec& spec) {
  const double nx = lq_norm(x, spec);
  if (nx == 0.0) throw BohrError(ErrorCode::InvalidArgument, "T_x needs x != 0");
  Vector w(x.size());
  if (spec.is_infinity()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < x.size(); ++j) {
      if (std::abs(x[j]) > std::abs(x[best])) best = j;
    }
    w[best] = conj_sign(x[best]);
  } else if (spec.q == 1.0) {
    for (std::size_t j = 0; j < x.size(); ++j) w[j] = conj_sign(x[j]);
  } else {
    for (std::size_t j = 0; j < x.size(); ++j) {
      w[j] = conj_sign(x[j]) * std::pow(std::abs(x[j]) / nx, spec.q - 1.0);
    }
  }
  return w;
}

Complex apply_functional(const Vector& w, const Vector& y) {
  if (w.size() != y.size()) {
    throw BohrError(ErrorCode::DimensionMismatch, "functional and vector dimensions differ");
  }
  Complex acc{};
  for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * y[j];
  return acc;
}

const char* to_string(MappingForm form) {
  switch (form) {
    case MappingForm::ScalarComposite: return "SCALAR_COMPOSITE";
    case MappingForm::VectorValued: return "VECTOR_VALUED";
    case MappingForm::ZTimesScalar: return "Z_TIMES_SCALAR";
  }
  return "SCALAR_COMPOSITE";
}

MappingForm mapping_form_from_string(const std::string& s) {
  if (s == "SCALAR_COMPOSITE") return MappingForm::ScalarComposite;
  if (s == "VECTOR_VALUED") return MappingForm::VectorValued;
  if (s == "Z_TIMES_SCALAR") return MappingForm::ZTimesScalar;
  throw BohrError(ErrorCode::Parse, "unknown mapping form '" + s + "'");
}

void BanachFunction::validate() const {
  domain.validate();
  target.validate();
  require_unit(u, domain, "u");
  if (form == MappingForm::VectorValued) require_unit(dir, target, "dir");
  if (form == MappingForm::ZTimesScalar && (target.n != domain.n || target.q != domain.q)) {
    throw BohrError(ErrorCode::InvalidArgument, "z h(T_u(z)) maps X into itself");
  }
}

Slice slice(const BanachFunction& f, const Vector& omega) {
  f.validate();
  require_unit(omega, f.domain, "omega");
  const Complex t = apply_functional(support_functional(f.u, f.domain), omega);

  const auto& h = f.h.coeffs();
  std::vector<Complex> c(h.size());
  Complex power = 1.0;  // 0^0 = 1
  for (std::size_t s = 0; s < h.size(); ++s) {
    c[s] = h[s] * power;
    power *= t;
  }
  Slice out;
  out.form = f.form;
  out.target = f.target;
  out.omega = omega;
  out.series = CoefficientSeries(std::move(c), f.h.coefficient_bound(), f.h.certificate());
  if (f.form == MappingForm::VectorValued) out.dir = f.dir;
  return out;
}

CoefficientSeries norm_terms(const Slice& s) {
  const auto& c = s.series.coeffs();
  if (s.form == MappingForm::ZTimesScalar) {
    // lambda omega h(lambda t): the degree-k term is h_{k-1} t^{k-1} omega,
    // whose norm is |h_{k-1} t^{k-1}| since ||omega|| = 1.
    std::vector<Complex> out(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = std::abs(c[k]);
    return CoefficientSeries(std::move(out), s.series.coefficient_bound(),
                             s.series.certificate());
  }
  // ||c_s dir|| = |c_s|, and scalar-valued maps have norm |c_s| already.
  std::vector<Complex> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = std::abs(c[k]);
  return CoefficientSeries(std::move(out), s.series.coefficient_bound(),
                           s.series.certificate());
}

CoefficientSeries functional_terms(const Slice& s, const Vector& v) {
  if (s.form == MappingForm::ScalarComposite) {
    throw BohrError(ErrorCode::InvalidArgument,
                    "functional-type terms need a vector-valued mapping");
  }
  require_unit(v, s.target, "v");
  const Vector w = support_functional(v, s.target);
  const auto& c = s.series.coeffs();
  if (s.form == MappingForm::VectorValued) {
    const double k = std::abs(apply_functional(w, *s.dir));
    std::vector<Complex> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[j] = k * std::abs(c[j]);
    return CoefficientSeries(std::move(out), k * s.series.coefficient_bound(),
                             s.series.certificate());
  }
  // Degree-k term h_{k-1} t^{k-1} omega.
  const double k = std::abs(apply_functional(w, s.omega));
  std::vector<Complex> out(c.size() + 1);
  for (std::size_t j = 0; j < c.size(); ++j) out[j + 1] = k * std::abs(c[j]);
  return CoefficientSeries(std::move(out), k * s.series.coefficient_bound(),
                           s.series.certificate());
}

}  // namespace bohrlab
