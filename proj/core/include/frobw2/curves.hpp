#pragma once

// Elliptic curves over F_p in long Weierstrass form
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// and their ordinarity, by Hasse invariant and by point counting.

#include <cstdint>

#include "frobw2/witt2.hpp"

namespace frobw2 {

struct WeierstrassCurve {
  std::uint32_t p = 0;
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  /// y^2 = x^3 + a x + b.
  static WeierstrassCurve short_form(std::uint32_t p, std::int64_t a, std::int64_t b);
  bool is_short() const;
};

/// Discriminant in F_p (as an integer in [0, p)).
std::uint32_t discriminant(const WeierstrassCurve& E);
/// Throws SingularCurve when the discriminant vanishes.
void require_nonsingular(const WeierstrassCurve& E);

/// #E(F_p), including the point at infinity.
std::uint64_t count_points(const WeierstrassCurve& E);
/// a_p = p + 1 - #E(F_p).
std::int64_t frobenius_trace(const WeierstrassCurve& E);

/// Coefficient of x^(p-1) in (x^3 + a x + b)^((p-1)/2). Short form, p >= 5.
FqElem hasse_invariant(const WeierstrassCurve& E);

/// a_p != 0 mod p by point counting; for short forms with p >= 5 also
/// cross-checked against the Hasse invariant (InvariantViolation on mismatch).
bool is_ordinary_curve(const WeierstrassCurve& E);

struct OrdinarityCensus {
  std::uint32_t p = 0;
  std::uint64_t nonsingular = 0;
  std::uint64_t supersingular_by_hasse = 0;
  std::uint64_t supersingular_by_count = 0;
  std::uint64_t mismatches = 0;
};

/// All nonsingular y^2 = x^3 + a x + b over F_p, p >= 5.
OrdinarityCensus ordinarity_census(std::uint32_t p);

}  // namespace frobw2
