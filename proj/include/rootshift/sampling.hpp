#pragma once

// Seeded samplers shared by the estimator and the sweeps. Every sample draws
// from its own generator seeded with (base seed + sample index).

#include <cstdint>
#include <random>
#include <vector>

#include "rootshift/poly.hpp"

namespace rootshift {

using Rng = std::mt19937_64;

inline Rng sample_rng(std::uint64_t seed, std::uint64_t index) { return Rng(seed + index); }

/// Uniform point in the closed disk of the given radius.
Complex uniform_in_disk(Rng& rng, double radius);

int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

/// Roots uniform in the disk, each at least min_sep from the others.
/// Throws std::runtime_error after 1000 failed draws for a single root.
std::vector<Complex> random_separated_points(Rng& rng, int count, double radius, double min_sep);

/// Coefficients uniform in D(2) with |alpha_0| >= 0.1 (alpha_0 redrawn until it is).
DiffOperator random_admissible_operator(Rng& rng, int n);

/// I + alpha_2 D^2 + ... with alpha_k uniform in D(radius).
DiffOperator random_no_first_order_operator(Rng& rng, int n, double radius = 2.0);

}  // namespace rootshift
