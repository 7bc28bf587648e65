#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrlab/extremal.hpp"
#include "bohrlab/harness.hpp"
#include "bohrlab/radii.hpp"
#include "test_support.hpp"

using namespace bohrlab;
using testing::random_parameters;
using testing::throws_code;

TEST_CASE("empirical radius of the optimal extremals equals the theorem radius") {
  for (auto [p, m] : {std::pair{2, 1}, std::pair{1, 1}, std::pair{3, 2}}) {
    const double r0 = maximal_root(RadiusEquation::r_tstar(p, m)).root;
    const double a = (1 - std::pow(r0, p)) / (2 * std::pow(r0, p));
    const FunctionDescriptor f{MobiusMinusFamily{a}, m, p};
    const EmpiricalRadius e = empirical_radius(FunctionalKind::a_pm(p, m), f);
    CHECK(e.crossed);
    CHECK(std::abs(e.radius - r0) <= 1e-6);
  }
  for (int m : {1, 2}) {
    const double r0 = maximal_root(RadiusEquation::r_dstar(m + 1, m)).root;
    const FunctionDescriptor f{MobiusMinusFamily{(1 - r0) / (2 * r0)}, m, 1};
    const EmpiricalRadius e = empirical_radius(FunctionalKind::d_nm(m + 1, m), f);
    CHECK(e.crossed);
    CHECK(std::abs(e.radius - r0) <= 1e-6);
  }
}

TEST_CASE("empirical radius sentinel and contract") {
  const EmpiricalRadius e =
      empirical_radius(FunctionalKind::d_nm(1, 0), FunctionDescriptor{ConstantFamily{0.5}, 0, 1});
  CHECK_FALSE(e.crossed);
  CHECK(e.radius == kNoCrossing);
  const FunctionDescriptor loose{
      ExplicitSeries{CoefficientSeries({0.5, 0.5}, 0.0, Certificate::Unknown)}, 0, 1};
  CHECK(throws_code([&] { empirical_radius(FunctionalKind::d_nm(1, 0), loose); },
                    ErrorCode::Uncertified));
}

TEST_CASE("random Schur functions cross no earlier than the theorem radius") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> count(1, 6);
  const FunctionalKind kinds[] = {FunctionalKind::a_pm(1, 0), FunctionalKind::a_pm(2, 1),
                                  FunctionalKind::d_nm(1, 0), FunctionalKind::d_nm(2, 1)};
  for (int i = 0; i < 500; ++i) {
    const FunctionalKind& kind = kinds[i % 4];
    const int p = kind.tag == FunctionalTag::APm ? kind.p : 1;
    const FunctionDescriptor f{SchurFamily{random_parameters(rng, count(rng), 0.98)}, kind.m, p};
    const EmpiricalRadius e = empirical_radius(kind, f);
    CHECK_MESSAGE(e.radius >= theorem_radius(kind) - 1e-9, f.describe());
  }
}

TEST_CASE("sharpness tags") {
  for (int i = 0; i <= int(SharpnessTag::I); ++i) {
    CHECK(sharpness_tag_from_string(to_string(SharpnessTag(i))) == SharpnessTag(i));
  }
  CHECK(throws_code([] { sharpness_tag_from_string("J"); }, ErrorCode::Parse));
  CHECK(throws_code([] { sharpness_kind(SharpnessTag::C, FunctionalKind::a_pm(1, 0)); },
                    ErrorCode::InvalidArgument));
  CHECK(throws_code([] { sharpness_kind(SharpnessTag::D, FunctionalKind::d_nm(3, 1)); },
                    ErrorCode::InvalidArgument));
  CHECK(sharpness_radius(SharpnessTag::D, FunctionalKind::d_nm(2, 1)) == doctest::Approx(0.6));
  const auto schedule = witness_schedule();
  CHECK(schedule.front() == 0.5);
  CHECK(schedule.back() <= 1 - 1e-6);
  CHECK(1 - (1 - schedule.back()) / 2 > 1 - 1e-6);
}

TEST_CASE("sharpness witnesses") {
  SUBCASE("A with (p, m) = (1, 1)") {
    const FunctionalKind k = FunctionalKind::a_pm(1, 1);
    const double r = sharpness_radius(SharpnessTag::A, k) + 0.01;
    const WitnessReport w = sharpness_witness(SharpnessTag::A, k, r);
    CHECK(w.exceeds);
    CHECK(w.value > 1.0);
    CHECK(w.value == doctest::Approx(extremal::a_family_value(w.a, 1, 1, r)).epsilon(1e-9));
  }
  SUBCASE("A with m = 0 at r = 0.34") {
    const WitnessReport w = sharpness_witness(SharpnessTag::A, FunctionalKind::a_pm(1, 0), 0.34);
    const double c = 0.34 / 0.66;
    CHECK(w.a == doctest::Approx(1 / (2 * c)));
    CHECK(std::abs(w.value - (c + 1 / (4 * c))) <= 1e-9);
    CHECK(w.exceeds);
  }
  SUBCASE("H with exponent 1 and N = 1 at r = 0.34") {
    const WitnessReport w = sharpness_witness(SharpnessTag::H, FunctionalKind::h_pn(1.0, 1), 0.34);
    CHECK(w.exceeds);
    CHECK(w.a > 0.5);
  }
  SUBCASE("every tag at radius + 0.01 and radius + 0.1") {
    FunctionalKind d21 = FunctionalKind::d_nm(2, 1);
    const std::pair<SharpnessTag, FunctionalKind> cases[] = {
        {SharpnessTag::A, FunctionalKind::a_pm(2, 1)}, {SharpnessTag::B, FunctionalKind::a_pm(2, 1)},
        {SharpnessTag::C, FunctionalKind::a_pm(2, 2)}, {SharpnessTag::D, d21},
        {SharpnessTag::E, d21},                        {SharpnessTag::F, d21},
        {SharpnessTag::G, FunctionalKind::g_mpn(1, 1.0, 2)},
        {SharpnessTag::H, FunctionalKind::h_pn(0.5, 3)},
        {SharpnessTag::I, FunctionalKind::i_m({8.0 / 9.0})}};
    for (const auto& [tag, params] : cases) {
      for (double delta : {0.01, 0.1}) {
        const double r = sharpness_radius(tag, params) + delta;
        const WitnessReport w = sharpness_witness(tag, params, r);
        CHECK_MESSAGE(w.excess > 0.0, to_string(tag));
        CHECK(w.excess == doctest::Approx(w.value - w.tail_error - 1.0));
      }
    }
  }
  CHECK(throws_code([] { sharpness_witness(SharpnessTag::A, FunctionalKind::a_pm(1, 0), 0.3); },
                    ErrorCode::InvalidArgument));
}

TEST_CASE("campaign samples are deterministic") {
  const FunctionalKind kind = FunctionalKind::d_nm(3, 1);
  for (int t = 0; t < 20; ++t) {
    const Sample a = draw_sample(kind, 99, t);
    const Sample b = draw_sample(kind, 99, t);
    CHECK(a.gamma == b.gamma);
    CHECK(a.head == b.head);
    CHECK(a.gamma.size() >= 1);
    CHECK(a.gamma.size() <= 8);
    for (Complex g : a.gamma) CHECK(std::abs(g) <= 0.98);
  }
  CHECK(draw_sample(kind, 99, 0).gamma != draw_sample(kind, 100, 0).gamma);
  // D samples honour the support {m} u {s >= N}
  const CoefficientSeries f = sample_series(kind, draw_sample(kind, 1, 3), 0.5);
  CHECK(f.modulus(0) == 0.0);
  CHECK(f.modulus(2) <= 1e-15);
}

TEST_CASE("serial and parallel campaigns agree") {
  for (const auto& kind : {FunctionalKind::a_pm(2, 1), FunctionalKind::g_mpn(1, 1.5, 2),
                           FunctionalKind::lemma_tail(2)}) {
    const CampaignSummary s = random_campaign_serial(kind, 300, 5);
    const CampaignSummary p = random_campaign(kind, 300, 5);
    CHECK(s.max_margin == p.max_margin);
    CHECK(s.argmax == p.argmax);
    CHECK(s.tail_at_max == p.tail_at_max);
    CHECK(s.violations == p.violations);
    CHECK(s.argmax_sample.describe() == p.argmax_sample.describe());
  }
  const CampaignSummary one = random_campaign(FunctionalKind::a_pm(1, 0), 1, 42);
  const CampaignSummary again = random_campaign(FunctionalKind::a_pm(1, 0), 1, 42);
  CHECK(one.max_margin == again.max_margin);
  CHECK(one.argmax == 0);
}

TEST_CASE("campaign at the theorem radius of A(1, 0)") {
  const CampaignSummary s = random_campaign(FunctionalKind::a_pm(1, 0), 10000, 7);
  CHECK(s.violations == 0);
  CHECK(s.max_margin <= 0.0);
  CHECK(s.r == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("campaign for the improved sum at r = 1/3") {
  const CampaignSummary s = random_campaign(FunctionalKind::i_m({8.0 / 9.0}), 1000, 7);
  CHECK(s.violations == 0);
  CHECK(s.max_margin <= 0.0);
  CHECK(s.r == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("a campaign above the radius finds violations") {
  const CampaignSummary s =
      random_campaign_at(FunctionalKind::d_nm(1, 0), 2000, 7, 0.6, true);
  CHECK(s.violations > 0);
  CHECK(s.max_margin > 0.0);
}
