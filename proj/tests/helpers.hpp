#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "pvi/common.hpp"
#include "pvi/monodromy.hpp"

namespace pvi::test {

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline MonodromyData qc_data() { return {-2.0, -7.0, -7.0, -7.0}; }

// Fixed-seed source for the "random (mu, nu)" samples.
struct Sampler {
  std::mt19937_64 gen{20240611};
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
};

}  // namespace pvi::test
