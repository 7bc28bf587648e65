// Times the serial reference against the OpenMP campaign and checks they agree.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "bohrlab/harness.hpp"

using namespace bohrlab;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 20000;
  const FunctionalKind kinds[] = {FunctionalKind::a_pm(2, 1), FunctionalKind::d_nm(3, 1),
                                  FunctionalKind::g_mpn(1, 1.0, 2),
                                  FunctionalKind::i_m({8.0 / 9.0})};
  std::printf("threads %d, trials %d\n", omp_get_max_threads(), trials);
  std::printf("%-28s %10s %10s %8s %s\n", "kind", "serial_s", "omp_s", "speedup", "agree");
  bool all = true;
  for (const auto& kind : kinds) {
    CampaignSummary s, p;
    const double ts = seconds([&] { s = random_campaign_serial(kind, trials, 7); });
    const double tp = seconds([&] { p = random_campaign(kind, trials, 7); });
    const bool agree = s.max_margin == p.max_margin && s.argmax == p.argmax &&
                       s.violations == p.violations;
    all = all && agree;
    std::printf("%-28s %10.3f %10.3f %8.2f %s\n", kind.describe().c_str(), ts, tp, ts / tp,
                agree ? "yes" : "NO");
  }
  return all ? 0 : 1;
}
