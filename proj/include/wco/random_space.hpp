#pragma once

#include "wco/space.hpp"

#include <random>

namespace wco {

// Seeded generator used by the oracle suites and the acceptance corpus:
// dim uniform in [2, max_dim]; masses log-uniform in [0.1, 10]; phi uniform
// among self-maps; |w| log-uniform in [0.1, 10] with a 20% chance of an exact
// zero (to exercise mu_w null sets), uniform phase.
PointSpace random_space(std::mt19937_64& rng, int max_dim = 12);

std::vector<Complex> random_vector(std::mt19937_64& rng, int n);
std::vector<double> random_nonneg_field(std::mt19937_64& rng, int n);

}  // namespace wco
