// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>

#include "bohrlab/acceptance.hpp"

int main() {
  const auto results = bohrlab::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", bohrlab::format_result(r).c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
