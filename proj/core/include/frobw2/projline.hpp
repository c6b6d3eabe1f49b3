#pragma once

// Frobenius lifts on P^1 over an affine base chart. The fiber coordinate is
// the last variable: x on one chart, y = 1/x on the other.

#include <string>

#include "frobw2/froblift.hpp"

namespace frobw2 {

struct P1Lift {
  AffineChartLift base;  // lift on the base chart
  Poly f;                // F(x) = x^p + p*f, over F_q in base.nvars() + 1 variables
};

/// The lift of the base chart on base.nvars() + 1 variables, fiber fixed by
/// the given correction.
AffineChartLift fiber_chart_lift(const AffineChartLift& base, const Poly& fiber_correction);

/// Correction g with F(y) = y^p + p*g, i.e. g = -y^(2p) f(1/y).
/// Throws DegreeTooHigh when deg_x f > 2p.
Poly extend_chart(const AffineChartLift& base, const Poly& f);

struct P1Check {
  bool ok = false;
  std::string failing_chart;  // "x", "y", "overlap" or "round-trip"
  std::string detail;
};

/// Extends to the y-chart, extends back, and checks both chart maps agree on
/// the overlap through y = 1/x using unit inversion in W2 Laurent rings.
P1Check verify_p1_lift(const P1Lift& L);

/// Counts d in [0, 3p] with x^d extendable over a point base.
int lift_space_dimension(std::uint32_t p);

}  // namespace frobw2
