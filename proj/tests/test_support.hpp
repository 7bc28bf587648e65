#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "bohrlab/errors.hpp"
#include "bohrlab/series.hpp"

namespace testing {

inline std::vector<bohrlab::Complex> random_parameters(std::mt19937_64& rng, int count,
                                                       double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<bohrlab::Complex> g;
  for (int i = 0; i < count; ++i) {
    g.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
  }
  return g;
}

/// True when `f` throws a BohrError carrying `code`.
inline bool throws_code(const std::function<void()>& f, bohrlab::ErrorCode code) {
  try {
    f();
  } catch (const bohrlab::BohrError& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace testing
