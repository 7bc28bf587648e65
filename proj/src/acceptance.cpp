#include "bohrlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <random>

#include "bohrlab/banach.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/harness.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the worst deviation of a family of checks.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (!(v <= value)) {
      value = v;
      where = at;
    }
  }
};

Outcome golden_radii(const Goldens& g) {
  constexpr double kTol = 1e-10;
  Worst w;
  auto check = [&](const RadiusEquation& eq, double expected, bool unique) {
    const double got = unique ? unique_root(eq).root : maximal_root(eq).root;
    w.update(std::abs(got - expected), eq.describe());
  };
  check(RadiusEquation::r_star(1, 0), g.r_star_1_0, false);
  check(RadiusEquation::r_star(2, 1), g.r_star_2_1, false);
  for (int p = 1; p <= 10; ++p) {
    check(RadiusEquation::r_tstar(p, 0), std::pow(g.tstar_base, -1.0 / p), false);
  }
  check(RadiusEquation::rog_np(1, 1), g.rog_np_1_1, true);
  check(RadiusEquation::rog_np(1, 2), g.rog_np_1_2, true);
  return {w.value <= kTol, fmt::format("worst |root - golden| = {:.3g} at {}", w.value, w.where)};
}

Outcome star_equivalence() {
  Worst w;
  for (int m = 0; m <= 4; ++m) {
    for (int n = m + 1; n <= 8; ++n) {
      w.update(star_equivalence_check(n, m), fmt::format("(N={}, m={})", n, m));
    }
  }
  return {w.value <= 1e-10, fmt::format("worst |r* - r**| = {:.3g} at {}", w.value, w.where)};
}

Outcome closed_form_oracle() {
  Worst w;
  const std::pair<int, int> a_params[] = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}, {3, 2}};
  for (int ia = 1; ia <= 19; ++ia) {
    for (int ir = 1; ir <= 19; ++ir) {
      const double a = 0.05 * ia, r = 0.05 * ir;
      const std::size_t order = default_truncation(r);
      for (auto [p, m] : a_params) {
        const double rp = std::pow(r, p);
        const double expected = std::pow(r, m) * (a + (1.0 - a * a) * rp / (1.0 - rp));
        const auto g = mobius_minus_series(a, order / std::size_t(p) + 1);
        const double got = eval_A(LacunarySeries{m, p, g}, r).value;
        w.update(std::abs(got - expected), fmt::format("A(p={}, m={}) a={} r={}", p, m, a, r));
      }
      for (int m = 0; m <= 3; ++m) {
        const double expected = std::pow(r, m) * (a + (1.0 - a * a) * r / (1.0 - r));
        const auto f = lacunary_expand(m, 1, mobius_minus_series(a, order));
        const double got = eval_D(f, m, m + 1, r).value;
        w.update(std::abs(got - expected), fmt::format("D(N={}, m={}) a={} r={}", m + 1, m, a, r));
      }
    }
  }
  return {w.value <= 1e-9, fmt::format("worst deviation {:.3g} at {}", w.value, w.where)};
}

Outcome theorem_safety(std::uint64_t seed) {
  const FunctionalKind kinds[] = {
      FunctionalKind::a_pm(1, 0),  FunctionalKind::a_pm(2, 1),  FunctionalKind::a_pm(3, 2),
      FunctionalKind::d_nm(1, 0),  FunctionalKind::d_nm(2, 1),  FunctionalKind::d_nm(3, 1),
      FunctionalKind::h_pn(1, 1),  FunctionalKind::h_pn(2, 1),  FunctionalKind::h_pn(2, 3),
      FunctionalKind::i_m({8.0 / 9.0}),
  };
  Outcome out;
  double worst = -1.0;
  std::string where;
  for (const auto& kind : kinds) {
    const CampaignSummary s = random_campaign(kind, 10000, seed);
    if (s.violations > 0) {
      out.pass = false;
      where = fmt::format("{} violated in {} trials (worst trial {})", kind.describe(),
                          s.violations, s.argmax);
    }
    if (out.pass && s.max_margin > worst) {
      worst = s.max_margin;
      where = fmt::format("max margin {:.3g} for {}", s.max_margin, kind.describe());
    }
  }
  out.detail = fmt::format("10 kinds x 10000 trials; {}", where);
  return out;
}

Outcome sharpness_suite() {
  struct Case {
    SharpnessTag tag;
    FunctionalKind params;
  };
  FunctionalKind d21 = FunctionalKind::d_nm(2, 1);
  FunctionalKind d10 = FunctionalKind::d_nm(1, 0);
  const Case cases[] = {
      {SharpnessTag::A, FunctionalKind::a_pm(1, 1)}, {SharpnessTag::A, FunctionalKind::a_pm(2, 1)},
      {SharpnessTag::A, FunctionalKind::a_pm(1, 0)}, {SharpnessTag::A, FunctionalKind::a_pm(2, 0)},
      {SharpnessTag::B, FunctionalKind::a_pm(2, 1)}, {SharpnessTag::C, FunctionalKind::a_pm(2, 1)},
      {SharpnessTag::D, d21},                        {SharpnessTag::D, d10},
      {SharpnessTag::E, d21},                        {SharpnessTag::F, d21},
      {SharpnessTag::G, FunctionalKind::g_mpn(1, 1.0, 1)},
      {SharpnessTag::G, FunctionalKind::g_mpn(2, 2.0, 3)},
      {SharpnessTag::H, FunctionalKind::h_pn(1.0, 1)}, {SharpnessTag::H, FunctionalKind::h_pn(2.0, 1)},
      {SharpnessTag::I, FunctionalKind::i_m({8.0 / 9.0})},
  };
  Outcome out;
  double least = INFINITY;
  std::string where;
  for (const auto& c : cases) {
    const double radius = sharpness_radius(c.tag, c.params);
    const double r = radius + 0.01;
    WitnessReport w;
    try {
      w = sharpness_witness(c.tag, c.params, r);
    } catch (const BohrError& e) {
      return {false, e.what()};
    }
    if (w.excess < least) {
      least = w.excess;
      where = fmt::format("{} {}", to_string(c.tag), w.kind);
    }
    if (!(w.excess > 1e-6)) out.pass = false;
    if (c.tag == SharpnessTag::A && c.params.m == 0) {
      // value = c + 1/(4c) with c = r^p / (1 - r^p)
      const double rp = std::pow(r, c.params.p);
      const double cc = rp / (1.0 - rp);
      if (std::abs(w.value - (cc + 0.25 / cc)) > 1e-9) {
        return {false, fmt::format("A m=0 branch: value {} differs from c + 1/(4c) = {}", w.value,
                                   cc + 0.25 / cc)};
      }
    }
    if (c.tag == SharpnessTag::I && !((1.0 - 3.0 * r) / (1.0 - r) < 0.0)) {
      return {false, "limit (1-3r)/(1-r) is not negative at the tested radius"};
    }
  }
  out.detail = fmt::format("15 witnesses at radius + 0.01; least excess {:.3g} ({})", least, where);
  return out;
}

Outcome lemma_tail(std::uint64_t seed) {
  const FunctionalKind kind = FunctionalKind::lemma_tail(1);
  Worst w;
  w.value = -INFINITY;
  double least_slack = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const Sample s = draw_sample(kind, seed, i);
    for (double r : {0.2, 0.5, 0.8}) {
      const CoefficientSeries f = sample_series(kind, s, r);
      for (int n : {1, 2, 3}) {
        const LemmaSlack ls = lemma_tail_bound_check(f, n, r);
        if (ls.slack < least_slack) {
          least_slack = ls.slack;
          w.where = fmt::format("trial {} N={} r={}", i, n, r);
        }
      }
    }
  }
  return {least_slack >= -1e-10,
          fmt::format("9000 checks; least slack {:.3g} at {}", least_slack, w.where)};
}

Outcome constraint_arithmetic(const Goldens& g) {
  const ConstraintResult cr = constraint_check({g.constraint_d1});
  if (!cr.ok || std::abs(cr.lhs - 1.0) > 1e-12) {
    return {false, fmt::format("d = ({}) gives left side {:.17g}", g.constraint_d1, cr.lhs)};
  }
  double prev = INFINITY;
  Worst w;
  for (int s = 2; s <= 8; ++s) {
    const double c = c_constant(s);
    if (!(c < prev)) return {false, fmt::format("c_{} = {} is not below c_{}", s, c, s - 1)};
    prev = c;
    const double e = 2.0 * s - 2.0;
    double oracle = 0.0;
    constexpr int kPoints = 1000000;
    for (int i = 0; i <= kPoints; ++i) {
      const double a = double(i) / kPoints;
      oracle = std::max(oracle, a * (1.0 + a) * (1.0 + a) * std::pow(1.0 - a * a, e));
    }
    w.update(std::abs(c - oracle), fmt::format("c_{}", s));
  }
  return {w.value <= 1e-8,
          fmt::format("left side {:.17g}; c_2..c_8 decreasing; worst grid gap {:.3g} at {}", cr.lhs,
                      w.value, w.where)};
}

Vector random_unit(std::mt19937_64& rng, const SpaceSpec& spec) {
  std::normal_distribution<double> normal;
  Vector v(spec.n);
  for (auto& x : v) x = {normal(rng), normal(rng)};
  const double n = lq_norm(v, spec);
  for (auto& x : v) x /= n;
  return v;
}

Outcome banach_reduction(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Worst w;
  Worst ident;
  const double qs[] = {1.5, 2.0, 3.0};
  const int ns[] = {2, 5};
  for (double q : qs) {
    for (int n : ns) {
      const SpaceSpec space{n, q};
      for (int rep = 0; rep < 20; ++rep) {
        const Vector x = random_unit(rng, space);
        Vector y = x;
        for (auto& c : y) c *= 3.5;
        const Vector wf = support_functional(y, space);
        ident.update(std::abs(apply_functional(wf, y) - lq_norm(y, space)) / lq_norm(y, space),
                     fmt::format("T_x(x) q={} n={}", q, n));
        ident.update(std::abs(dual_norm(wf, space) - 1.0), fmt::format("||w|| q={} n={}", q, n));
      }
      const Vector u = random_unit(rng, space);
      const Vector dir = random_unit(rng, space);
      const std::vector<Complex> gamma = {{0.3, -0.4}, {0.5, 0.1}, {-0.2, 0.6}};
      const std::string at = fmt::format("q={} n={}", q, n);

      // Lacunary family with p = 2, m = 1 and the D family with N = 2, m = 1.
      for (int fam = 0; fam < 2; ++fam) {
        const int p = fam == 0 ? 2 : 1, m = 1;
        const double r = fam == 0 ? 0.7 : 0.6;
        const std::size_t order = default_truncation(r);
        for (int which = 0; which < 2; ++which) {
          const CoefficientSeries g = which == 0 ? mobius_minus_series(0.4, order)
                                                 : schur_from_parameters(gamma, order);
          const CoefficientSeries scalar = lacunary_expand(m, p, g);
          auto eval = [&](const CoefficientSeries& t) {
            return fam == 0 ? eval_A_terms(t, p, m, r).value : eval_D(t, m, m + 1, r).value;
          };
          const double base = eval(scalar);

          BanachFunction vv;
          vv.form = MappingForm::VectorValued;
          vv.domain = space;
          vv.target = space;
          vv.u = u;
          vv.dir = dir;
          vv.h = scalar;
          const Slice sv = slice(vv, u);
          w.update(std::abs(eval(functional_terms(sv, dir)) - base), "vector functional " + at);
          w.update(std::abs(eval(norm_terms(sv)) - base), "vector norm " + at);

          BanachFunction zf;
          zf.form = MappingForm::ZTimesScalar;
          zf.domain = space;
          zf.target = space;
          zf.u = u;
          zf.h = lacunary_expand(m - 1, p, g);
          const Slice sz = slice(zf, u);
          w.update(std::abs(eval(norm_terms(sz)) - base), "z-times norm " + at);
          w.update(std::abs(eval(functional_terms(sz, u)) - base), "z-times functional " + at);
        }
      }
    }
  }
  const bool pass = w.value <= 1e-12 && ident.value <= 1e-12;
  return {pass, fmt::format("worst slice gap {:.3g} ({}); worst identity gap {:.3g} ({})", w.value,
                            w.where, ident.value, ident.where)};
}

Outcome empirical_agreement() {
  Worst w;
  {
    const FunctionalKind kind = FunctionalKind::a_pm(2, 1);
    const double r0 = theorem_radius(kind);
    const double r0p = r0 * r0;
    const FunctionDescriptor f{MobiusMinusFamily{(1.0 - r0p) / (2.0 * r0p)}, 1, 2};
    const EmpiricalRadius e = empirical_radius(kind, f);
    if (!e.crossed) return {false, "A(2,1) extremal never crosses 1"};
    w.update(std::abs(e.radius - r0), fmt::format("A(2,1): {:.12f} vs {:.12f}", e.radius, r0));
  }
  {
    const FunctionalKind kind = FunctionalKind::d_nm(2, 1);
    const double r0 = theorem_radius(kind);
    const FunctionDescriptor f{MobiusMinusFamily{(1.0 - r0) / (2.0 * r0)}, 1, 1};
    const EmpiricalRadius e = empirical_radius(kind, f);
    if (!e.crossed) return {false, "D(2,1) extremal never crosses 1"};
    w.update(std::abs(e.radius - r0), fmt::format("D(2,1): {:.12f} vs {:.12f}", e.radius, r0));
  }
  return {w.value <= 1e-6, fmt::format("worst gap {:.3g} at {}", w.value, w.where)};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const Goldens& g = options.goldens;
  const std::uint64_t seed = options.seed;
  const Criterion all[] = {
      {1, "golden-radii", 1.0, [&] { return golden_radii(g); }},
      {2, "star-equivalence", 1.0, [] { return star_equivalence(); }},
      {3, "closed-form-oracle", 5.0, [] { return closed_form_oracle(); }},
      {4, "theorem-safety", 60.0, [&] { return theorem_safety(seed); }},
      {5, "sharpness-suite", 10.0, [] { return sharpness_suite(); }},
      {6, "lemma-tail-bound", 10.0, [&] { return lemma_tail(seed); }},
      {7, "constraint-arithmetic", 5.0, [&] { return constraint_arithmetic(g); }},
      {8, "banach-reduction", 5.0, [&] { return banach_reduction(seed); }},
      {9, "empirical-radius", 5.0, [] { return empirical_agreement(); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : all) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult res;
    res.id = c.id;
    res.name = c.name;
    res.budget = c.budget;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.pass = o.pass && res.seconds < c.budget;
    res.detail = o.detail;
    if (o.pass && !res.pass) res.detail += " (over the time budget)";
    results.push_back(std::move(res));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  return fmt::format("{} {} {} ({:.2f} s / {:g} s) {}", r.pass ? "PASS" : "FAIL", r.id, r.name,
                     r.seconds, r.budget, r.detail);
}

}  // namespace bohrlab
