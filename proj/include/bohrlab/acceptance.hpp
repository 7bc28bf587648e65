#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bohrlab {

/// Reference constants checked by the golden-radius criterion. Tests override
/// them to confirm a wrong constant is reported.
struct Goldens {
  double r_star_1_0 = 1.0 / 3.0;
  double r_star_2_1 = 3.0 / 5.0;
  /// r***_{p,0} = base^{-1/p}
  double tstar_base = 3.0;
  double rog_np_1_1 = 1.0 / 3.0;
  double rog_np_1_2 = 1.0 / 2.0;
  double constraint_d1 = 8.0 / 9.0;
};

struct AcceptanceOptions {
  Goldens goldens;
  /// Criterion ids to run; empty runs all nine.
  std::vector<int> only;
  std::uint64_t seed = 7;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One line per criterion: "PASS 3 closed-form-oracle (0.12 s / 5 s) ...".
std::string format_result(const CriterionResult& r);

}  // namespace bohrlab
