#include "bohrlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kSampleDiskRadius = 0.98;
constexpr int kMaxSchurParameters = 8;
constexpr double kGridStep = 1e-3;
constexpr double kBisectionWidth = 1e-9;
constexpr double kLemmaCampaignRadius = 0.5;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t outer_order(std::size_t order, int m, int p) {
  if (order <= std::size_t(m)) return 1;
  return std::max<std::size_t>(1, (order - std::size_t(m) + std::size_t(p) - 1) / std::size_t(p));
}

std::string complex_list(const std::vector<Complex>& v) {
  std::string out;
  for (const Complex& z : v) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{:.6g}{:+.6g}i", z.real(), z.imag());
  }
  return out;
}

// The normalized vectors used by the Banach-space witnesses.
struct WitnessSpaces {
  SpaceSpec domain{3, 3.0};
  SpaceSpec target{2, 1.5};
  Vector u;
  Vector dir;
};

Vector normalized(Vector v, const SpaceSpec& spec) {
  const double n = lq_norm(v, spec);
  for (auto& x : v) x /= n;
  return v;
}

WitnessSpaces witness_spaces() {
  WitnessSpaces w;
  w.u = normalized({{1.0, 0.0}, {0.0, 2.0}, {-1.0, 0.0}}, w.domain);
  w.dir = normalized({{1.0, 0.0}, {-1.0, 0.5}}, w.target);
  return w;
}

// Terms of h read through the Banach form that `tag` exercises.
CoefficientSeries banach_terms(SharpnessTag tag, const CoefficientSeries& h) {
  const WitnessSpaces w = witness_spaces();
  BanachFunction f;
  f.domain = w.domain;
  f.u = w.u;
  f.h = h;
  switch (tag) {
    case SharpnessTag::B:
    case SharpnessTag::E:
      f.form = MappingForm::VectorValued;
      f.target = w.target;
      f.dir = w.dir;
      return functional_terms(slice(f, w.u), w.dir);
    case SharpnessTag::C:
    case SharpnessTag::F:
      f.form = MappingForm::ZTimesScalar;
      f.target = w.domain;
      return norm_terms(slice(f, w.u));
    default:
      return h;
  }
}

bool norm_type(SharpnessTag tag) { return tag == SharpnessTag::C || tag == SharpnessTag::F; }

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, int trial) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(trial)};
    engine_.seed(seq);
  }
  // 53-bit uniform on [0, 1); independent of the library's distribution code.
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  int integer(int lo, int hi) { return lo + int(engine_() % std::uint64_t(hi - lo + 1)); }
  Complex disk_point(double radius) {
    const double rho = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(rho, theta);
  }

 private:
  std::mt19937_64 engine_;
};

double campaign_radius(const FunctionalKind& kind) {
  return kind.tag == FunctionalTag::LemmaTail ? kLemmaCampaignRadius : theorem_radius(kind);
}

}  // namespace

CoefficientSeries FunctionDescriptor::materialize(std::size_t order) const {
  if (m < 0 || p < 1) throw BohrError(ErrorCode::InvalidArgument, "needs m >= 0 and p >= 1");
  const std::size_t tg = outer_order(order, m, p);
  CoefficientSeries outer = std::visit(
      Overloaded{
          [&](const MobiusFamily& f) { return mobius_series(f.a, tg); },
          [&](const MobiusMinusFamily& f) { return mobius_minus_series(f.a, tg); },
          [&](const SchurFamily& f) { return schur_from_parameters(f.gamma, tg); },
          [&](const ConstantFamily& f) { return CoefficientSeries::constant(f.value, tg); },
          [&](const ExplicitSeries& f) { return f.series; },
      },
      g);
  if (m == 0 && p == 1) return outer;
  return lacunary_expand(m, p, outer);
}

CoefficientSeries FunctionDescriptor::materialize_for(double r) const {
  return materialize(default_truncation(r));
}

bool FunctionDescriptor::certified() const {
  if (const auto* e = std::get_if<ExplicitSeries>(&g)) return e->series.certified();
  return true;
}

std::string FunctionDescriptor::describe() const {
  const std::string inner = std::visit(
      Overloaded{
          [](const MobiusFamily& f) { return fmt::format("mobius(a={})", f.a); },
          [](const MobiusMinusFamily& f) { return fmt::format("mobius_minus(a={})", f.a); },
          [](const SchurFamily& f) { return fmt::format("schur([{}])", complex_list(f.gamma)); },
          [](const ConstantFamily& f) {
            return fmt::format("constant({})", complex_list({f.value}));
          },
          [](const ExplicitSeries& f) {
            return fmt::format("series(T={}, {})", f.series.truncation_order(),
                               to_string(f.series.certificate()));
          },
      },
      g);
  if (m == 0 && p == 1) return inner;
  return fmt::format("lacunary(m={}, p={}, {})", m, p, inner);
}

CoefficientSeries BanachInput::terms(std::size_t order) const {
  BanachFunction f;
  f.form = form;
  f.domain = domain;
  f.target = target;
  f.u = u;
  f.dir = dir;
  f.h = h.materialize(order);
  const Slice s = slice(f, omega.value_or(u));
  switch (mode) {
    case ReadMode::Scalar:
      if (form == MappingForm::ZTimesScalar) {
        throw BohrError(ErrorCode::InvalidArgument,
                        "z h(T_u(z)) is vector-valued; read it by norm or functional");
      }
      return s.series;
    case ReadMode::Norm:
      return norm_terms(s);
    case ReadMode::Functional:
      return functional_terms(s, v.value_or(form == MappingForm::ZTimesScalar ? u : dir));
  }
  throw BohrError(ErrorCode::InvalidArgument, "unknown read mode");
}

CoefficientSeries BanachInput::terms_for(double r) const {
  return terms(default_truncation(r));
}

EmpiricalRadius empirical_radius(const FunctionalKind& kind, const FunctionDescriptor& f) {
  if (!f.certified()) {
    throw BohrError(ErrorCode::Uncertified, "empirical radius needs a certified Schur function");
  }
  kind.validate();
  const CoefficientSeries series = f.materialize_for(kNoCrossing);
  const std::vector<Complex>& c = series.coeffs();
  // tail_max[k] = max_{s >= k} |c_s|, so a shorter prefix keeps a valid bound.
  std::vector<double> tail_max(c.size() + 1, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) tail_max[k] = std::max(tail_max[k + 1], std::abs(c[k]));
  // Small radii only need a short prefix of the 0.99-order expansion.
  auto crossed = [&](double r) {
    const std::size_t order = std::min(default_truncation(r), series.truncation_order());
    if (order == series.truncation_order()) return evaluate(kind, series, r).margin > 0.0;
    const CoefficientSeries prefix(
        std::vector<Complex>(c.begin(), c.begin() + std::ptrdiff_t(order) + 1),
        std::max(series.coefficient_bound(), tail_max[order + 1]), series.certificate());
    return evaluate(kind, prefix, r).margin > 0.0;
  };

  const int cells = int(std::lround(kNoCrossing / kGridStep));
  for (int i = 1; i <= cells; ++i) {
    const double r = i * kGridStep;
    if (!crossed(r)) continue;
    // The left end is never evaluated at i = 1, where r = 0 may lie outside the domain.
    double lo = (i - 1) * kGridStep, hi = r;
    while (hi - lo > kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      if (crossed(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return {0.5 * (lo + hi), true};
  }
  return {kNoCrossing, false};
}

const char* to_string(SharpnessTag tag) {
  static constexpr const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H", "I"};
  return names[int(tag)];
}

SharpnessTag sharpness_tag_from_string(const std::string& s) {
  for (int i = 0; i <= int(SharpnessTag::I); ++i) {
    if (s == to_string(SharpnessTag(i))) return SharpnessTag(i);
  }
  throw BohrError(ErrorCode::Parse, "unknown sharpness tag '" + s + "' (expected A..I)");
}

FunctionalKind sharpness_kind(SharpnessTag tag, const FunctionalKind& params) {
  if (norm_type(tag) && params.m < 1) {
    throw BohrError(ErrorCode::InvalidArgument, "norm-type mappings z g(z) need m >= 1");
  }
  switch (tag) {
    case SharpnessTag::A:
    case SharpnessTag::B:
    case SharpnessTag::C:
      return FunctionalKind::a_pm(params.p, params.m);
    case SharpnessTag::D:
    case SharpnessTag::E:
    case SharpnessTag::F:
      if (params.n != params.m + 1) {
        throw BohrError(ErrorCode::InvalidArgument,
                        "the extremal of the D family is built for N = m + 1");
      }
      return FunctionalKind::d_nm(params.m + 1, params.m);
    case SharpnessTag::G:
      return FunctionalKind::g_mpn(params.m, params.p_exp, params.n);
    case SharpnessTag::H:
      return FunctionalKind::h_pn(params.p_exp, params.n);
    case SharpnessTag::I:
      return FunctionalKind::i_m(params.d);
  }
  throw BohrError(ErrorCode::InvalidArgument, "unknown sharpness tag");
}

double sharpness_radius(SharpnessTag tag, const FunctionalKind& params) {
  return theorem_radius(sharpness_kind(tag, params));
}

std::vector<double> witness_schedule() {
  std::vector<double> out;
  for (int k = 1;; ++k) {
    const double a = 1.0 - std::ldexp(1.0, -k);
    if (a > 1.0 - 1e-6) break;
    out.push_back(a);
  }
  return out;
}

WitnessReport sharpness_witness(SharpnessTag tag, const FunctionalKind& params, double r) {
  const FunctionalKind kind = sharpness_kind(tag, params);
  const double radius = theorem_radius(kind);
  require_radius(r);
  if (!(r > radius)) {
    throw BohrError(ErrorCode::InvalidArgument,
                    fmt::format("witness radius {} must exceed the theorem radius {}", r, radius));
  }
  const std::size_t order = default_truncation(r);

  WitnessReport out;
  out.tag = tag;
  out.kind = kind.describe();
  out.radius = radius;
  out.r = r;
  auto record = [&](double a, const EvaluationReport& rep) {
    out.a = a;
    out.value = rep.value;
    out.tail_error = rep.tail_error;
    out.excess = rep.value - rep.tail_error - 1.0;
    out.exceeds = out.excess > 0.0;
  };
  auto not_found = [&]() {
    return BohrError(ErrorCode::WitnessNotFound,
                     fmt::format("no witness for {} ({}) at r = {}", to_string(tag),
                                 kind.describe(), r));
  };

  switch (tag) {
    case SharpnessTag::A:
    case SharpnessTag::B:
    case SharpnessTag::C: {
      const int p = kind.p, m = kind.m;
      double a;
      if (m == 0) {
        // Here the radius equation has a double root and the optimal a is 1,
        // so the witness is tuned to r instead.
        const double rp = std::pow(r, p);
        a = 1.0 / (2.0 * rp / (1.0 - rp));
      } else {
        const double rp = std::pow(radius, p);
        a = (1.0 - rp) / (2.0 * rp);
      }
      const CoefficientSeries g = mobius_minus_series(a, outer_order(order, m, p));
      const int shift = norm_type(tag) ? 1 : 0;
      const CoefficientSeries terms = banach_terms(tag, lacunary_expand(m - shift, p, g));
      record(a, eval_A_terms(terms, p, m, r));
      break;
    }
    case SharpnessTag::D:
    case SharpnessTag::E:
    case SharpnessTag::F: {
      const int m = kind.m;
      const double a = m == 0 ? (1.0 - r) / (2.0 * r) : (1.0 - radius) / (2.0 * radius);
      const CoefficientSeries g = mobius_minus_series(a, order);
      const int shift = norm_type(tag) ? 1 : 0;
      const CoefficientSeries terms = banach_terms(tag, lacunary_expand(m - shift, 1, g));
      record(a, eval_D(terms, m, m + 1, r));
      break;
    }
    case SharpnessTag::G:
    case SharpnessTag::H:
    case SharpnessTag::I: {
      const CoefficientSeries w = schwarz_power(std::max(kind.m, 0), order);
      for (double a : witness_schedule()) {
        const CoefficientSeries f = mobius_series(a, order);
        EvaluationReport rep;
        if (tag == SharpnessTag::G) {
          rep = eval_G(f, kind.m, kind.p_exp, kind.n, r, w);
        } else if (tag == SharpnessTag::H) {
          rep = eval_H(f, kind.p_exp, kind.n, r);
        } else {
          rep = eval_I(f, kind.d, r);
        }
        record(a, rep);
        if (out.exceeds) return out;
      }
      throw not_found();
    }
  }
  if (!out.exceeds) throw not_found();
  return out;
}

std::string Sample::describe() const {
  std::string s = fmt::format("schur([{}])", complex_list(gamma));
  if (head) s += fmt::format(" head {}", complex_list({*head}));
  return s;
}

Sample draw_sample(const FunctionalKind& kind, std::uint64_t seed, int trial) {
  TrialRng rng(seed, trial);
  Sample s;
  if (kind.tag == FunctionalTag::DNm) s.head = rng.disk_point(kSampleDiskRadius);
  const int count = rng.integer(1, kMaxSchurParameters);
  s.gamma.reserve(count);
  for (int k = 0; k < count; ++k) s.gamma.push_back(rng.disk_point(kSampleDiskRadius));
  return s;
}

CoefficientSeries sample_series(const FunctionalKind& kind, const Sample& s, double r) {
  const std::size_t order = default_truncation(r);
  switch (kind.tag) {
    case FunctionalTag::APm: {
      const auto g = schur_from_parameters(s.gamma, outer_order(order, kind.m, kind.p));
      return lacunary_expand(kind.m, kind.p, g);
    }
    case FunctionalTag::DNm: {
      // Every Schur function supported on {m} u [N, inf) is lambda^m phi with
      // phi = (h + lambda^{N-m} psi) / (1 + conj(h) lambda^{N-m} psi). Zero
      // parameters shift psi, so phi has parameters (h, 0, ..., 0, gamma).
      std::vector<Complex> params{s.head.value_or(Complex{})};
      params.resize(std::size_t(kind.n - kind.m), Complex{});
      params.insert(params.end(), s.gamma.begin(), s.gamma.end());
      return lacunary_expand(kind.m, 1, schur_from_parameters(params, order));
    }
    default:
      return schur_from_parameters(s.gamma, order);
  }
}

TrialOutcome run_trial(const FunctionalKind& kind, std::uint64_t seed, int trial, double r) {
  const Sample s = draw_sample(kind, seed, trial);
  const EvaluationReport rep = evaluate(kind, sample_series(kind, s, r), r);
  return {rep.margin, rep.tail_error};
}

namespace {

std::vector<TrialOutcome> outcomes_serial(const FunctionalKind& kind, int trials,
                                          std::uint64_t seed, double r) {
  std::vector<TrialOutcome> out(trials);
  for (int i = 0; i < trials; ++i) out[i] = run_trial(kind, seed, i, r);
  return out;
}

std::vector<TrialOutcome> outcomes_parallel(const FunctionalKind& kind, int trials,
                                            std::uint64_t seed, double r) {
  std::vector<TrialOutcome> out(trials);
  std::vector<std::exception_ptr> errors(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < trials; ++i) {
    try {
      out[i] = run_trial(kind, seed, i, r);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

CampaignSummary random_campaign_at(const FunctionalKind& kind, int trials, std::uint64_t seed,
                                   double r, bool parallel) {
  if (trials < 1) throw BohrError(ErrorCode::InvalidArgument, "trials must be >= 1");
  kind.validate();
  require_radius(r);
  const std::vector<TrialOutcome> outcomes = parallel ? outcomes_parallel(kind, trials, seed, r)
                                                      : outcomes_serial(kind, trials, seed, r);

  CampaignSummary sum;
  sum.kind = kind;
  sum.trials = trials;
  sum.seed = seed;
  sum.r = r;
  for (int i = 0; i < trials; ++i) {
    const TrialOutcome& o = outcomes[i];
    // Strict comparison keeps the lowest trial index on ties.
    if (sum.argmax < 0 || o.margin > sum.max_margin) {
      sum.max_margin = o.margin;
      sum.tail_at_max = o.tail_error;
      sum.argmax = i;
    }
    if (o.margin > o.tail_error) ++sum.violations;
  }
  sum.argmax_sample = draw_sample(kind, seed, sum.argmax);
  return sum;
}

CampaignSummary random_campaign_serial(const FunctionalKind& kind, int trials,
                                       std::uint64_t seed) {
  return random_campaign_at(kind, trials, seed, campaign_radius(kind), false);
}

CampaignSummary random_campaign(const FunctionalKind& kind, int trials, std::uint64_t seed) {
  return random_campaign_at(kind, trials, seed, campaign_radius(kind), true);
}

}  // namespace bohrlab
