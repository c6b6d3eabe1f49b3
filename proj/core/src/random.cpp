#include "frobw2/random.hpp"

namespace frobw2 {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ index);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(trial_seed(seed, index));
}

Poly random_poly(std::mt19937_64& rng, const CoeffRing& ring, std::size_t nvars,
                 const RandomPolyShape& shape) {
  std::uniform_int_distribution<int> nterms(0, std::max(0, shape.max_terms));
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring.size() - 1);
  PolyBuilder out(ring, nvars);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::array<int, kMaxVars> e{};
    int budget = shape.max_degree;
    for (std::size_t j = 0; j < nvars; ++j) {
      const int hi = shape.total_degree ? budget : shape.max_degree;
      const int lo = ((shape.laurent_mask >> j) & 1u) ? -shape.max_degree : 0;
      e[j] = std::uniform_int_distribution<int>(lo, hi)(rng);
      if (shape.total_degree && e[j] > 0) budget -= e[j];
    }
    out.add(Monomial(std::span<const int>(e.data(), nvars)).key(),
            static_cast<Poly::Code>(coeff(rng)));
  }
  return out.build();
}

AffineChartLift random_lift(std::mt19937_64& rng, const CoeffRing& field, std::size_t nvars,
                            const RandomPolyShape& shape) {
  std::vector<Poly> corrections;
  for (std::size_t i = 0; i < nvars; ++i) corrections.push_back(random_poly(rng, field, nvars, shape));
  return make_lift(field, nvars, shape.laurent_mask, std::move(corrections));
}

}  // namespace frobw2
