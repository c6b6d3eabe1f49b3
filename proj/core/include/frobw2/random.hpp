#pragma once

// Seeded generators for randomized checks. Each trial gets its own engine
// seeded from (run seed, trial index), so trials are independent of order.

#include <cstdint>
#include <random>

#include "frobw2/froblift.hpp"

namespace frobw2 {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index);

struct RandomPolyShape {
  int max_degree = 3;          // per-variable exponent bound
  int max_terms = 6;           // number of monomial draws (repeats merge)
  unsigned laurent_mask = 0;   // these variables may get exponents down to -max_degree
  bool total_degree = false;   // bound the total degree instead of each exponent
};

/// Random polynomial with uniformly random nonzero coefficient codes.
Poly random_poly(std::mt19937_64& rng, const CoeffRing& ring, std::size_t nvars,
                 const RandomPolyShape& shape);

AffineChartLift random_lift(std::mt19937_64& rng, const CoeffRing& field, std::size_t nvars,
                            const RandomPolyShape& shape);

}  // namespace frobw2
