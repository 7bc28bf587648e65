#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bohrlab/banach.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// Disk functions described by a generator, so the truncation order can follow
/// the evaluation radius.
struct MobiusFamily {
  double a = 0.0;  // (a + lambda) / (1 + a lambda)
};
struct MobiusMinusFamily {
  double a = 0.0;  // (lambda - a) / (1 - a lambda)
};
struct SchurFamily {
  std::vector<Complex> gamma;
};
struct ConstantFamily {
  Complex value;
};
/// Coefficients given verbatim; materializing never extends them.
struct ExplicitSeries {
  CoefficientSeries series = CoefficientSeries::constant(0.0);
};

using Generator = std::variant<MobiusFamily, MobiusMinusFamily, SchurFamily, ConstantFamily,
                               ExplicitSeries>;

/// lambda^m * g(lambda^p) with g given by a generator.
struct FunctionDescriptor {
  Generator g;
  int m = 0;
  int p = 1;

  /// Full slice expanded to at least `order` (explicit series keep their own order).
  CoefficientSeries materialize(std::size_t order) const;
  /// Same with order chosen from the radius.
  CoefficientSeries materialize_for(double r) const;
  bool certified() const;
  std::string describe() const;
};

/// A Banach-space mapping read through one of its slices.
///   Scalar      use the scalar slice series
///   Norm        term norms ||D^s f(0)(omega^s)|| / s!
///   Functional  |T_v(D^s f(0)(omega^s))| / s!
enum class ReadMode { Scalar, Norm, Functional };

struct BanachInput {
  MappingForm form = MappingForm::ScalarComposite;
  SpaceSpec domain;
  SpaceSpec target;
  Vector u;
  Vector dir;
  FunctionDescriptor h;
  std::optional<Vector> omega;  // defaults to u
  std::optional<Vector> v;      // defaults to dir, or u for ZTimesScalar
  ReadMode mode = ReadMode::Scalar;

  /// Term sequence at the requested truncation order.
  CoefficientSeries terms(std::size_t order) const;
  CoefficientSeries terms_for(double r) const;
};

/// Returned by empirical_radius when no crossing occurs on (0, 0.99].
inline constexpr double kNoCrossing = 0.99;

struct EmpiricalRadius {
  double radius = kNoCrossing;
  bool crossed = false;
};

/// Smallest r in (0, 0.99] with positive margin: grid step 1e-3, then
/// bisection to 1e-9 on the first crossing cell.
EmpiricalRadius empirical_radius(const FunctionalKind& kind, const FunctionDescriptor& f);

/// Theorem families whose sharpness is reproduced. B/C and E/F are the
/// functional-type and norm-type versions of A and D.
enum class SharpnessTag { A, B, C, D, E, F, G, H, I };

const char* to_string(SharpnessTag tag);
SharpnessTag sharpness_tag_from_string(const std::string& s);

/// Which functional kind a tag evaluates, and its theorem radius.
FunctionalKind sharpness_kind(SharpnessTag tag, const FunctionalKind& params);
double sharpness_radius(SharpnessTag tag, const FunctionalKind& params);

struct WitnessReport {
  SharpnessTag tag = SharpnessTag::A;
  std::string kind;
  double radius = 0.0;  // theorem radius
  double r = 0.0;       // tested radius
  double a = 0.0;       // witness parameter
  double value = 0.0;
  double tail_error = 0.0;
  /// value - tail_error - 1
  double excess = 0.0;
  bool exceeds = false;
};

/// Builds the extremal function for `tag` at radius r > theorem radius and
/// recomputes its sum through the evaluators. `params` carries p, m, N, the
/// exponent and d as in FunctionalKind. Throws WitnessNotFound on failure.
WitnessReport sharpness_witness(SharpnessTag tag, const FunctionalKind& params, double r);

/// Ascending schedule a = 1 - 2^-k for the limit arguments; the last entry is
/// the largest a not above 1 - 1e-6.
std::vector<double> witness_schedule();

/// Random Schur-class input for one campaign trial.
struct Sample {
  std::vector<Complex> gamma;
  /// Value at the origin for the sampler of the D kind (after the lambda^m factor).
  std::optional<Complex> head;
  std::string describe() const;
};

struct TrialOutcome {
  double margin = 0.0;
  double tail_error = 0.0;
};

struct CampaignSummary {
  FunctionalKind kind;
  int trials = 0;
  std::uint64_t seed = 0;
  double r = 0.0;
  double max_margin = 0.0;
  double tail_at_max = 0.0;
  int argmax = -1;
  Sample argmax_sample;
  /// Trials with margin above their certified tail error.
  int violations = 0;
};

/// Sampler used by the campaigns; deterministic in (seed, trial).
Sample draw_sample(const FunctionalKind& kind, std::uint64_t seed, int trial);
/// Series of a sample at the truncation order suited to r.
CoefficientSeries sample_series(const FunctionalKind& kind, const Sample& s, double r);
TrialOutcome run_trial(const FunctionalKind& kind, std::uint64_t seed, int trial, double r);

/// Evaluates `trials` random inputs at the theorem radius of `kind` (the
/// tail-estimate kind uses r = 0.5). Both versions return identical summaries.
CampaignSummary random_campaign_serial(const FunctionalKind& kind, int trials,
                                       std::uint64_t seed);
CampaignSummary random_campaign(const FunctionalKind& kind, int trials, std::uint64_t seed);

/// Same as above at an explicit radius.
CampaignSummary random_campaign_at(const FunctionalKind& kind, int trials, std::uint64_t seed,
                                   double r, bool parallel = true);

}  // namespace bohrlab
