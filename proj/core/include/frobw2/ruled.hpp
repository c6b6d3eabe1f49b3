#pragma once

// Ruled surfaces P(E) over a one-dimensional toric base, with E an extension
// of a line bundle by O. Four affine charts:
//   Ux = Spec k[u][x], Ut = Spec k[u][t], Vy = Spec k[v][y], Vs = Spec k[v][s]
// glued by t*x = s*y = 1 and x = a*y + b (+ p*y^2*glue on the W2 level).
// Base variable first, fiber variable second in every chart.

#include <optional>
#include <string>
#include <vector>

#include "frobw2/projline.hpp"

namespace frobw2 {

enum class ToricBase {
  A1,  // U = V = Spec k[u]
  Gm,  // U = V = Spec k[u, 1/u]
  P1,  // U = Spec k[u], V = Spec k[v], uv = 1
};

std::string_view to_string(ToricBase b);
ToricBase parse_toric_base(std::string_view s);

struct TransitionData {
  ToricBase base;
  Poly a;                   // unit on U∩V, over F_q in one variable u
  Poly b;                   // section on U∩V, same ring
  std::optional<Poly> glue; // f in x = a*y + b + p*y^2*f, over F_q in (u, y)

  /// Laurent mask of the overlap U∩V in u-coordinates (bit 0).
  unsigned overlap_mask() const noexcept { return base == ToricBase::A1 ? 0u : 1u; }
};

/// Checks a is a unit and b a section on U∩V. Throws UnitError / ShapeError.
TransitionData make_transition(ToricBase base, Poly a, Poly b, std::optional<Poly> glue = {});
/// Hirzebruch surface F_n = P(O + O(n)) over P^1: a = u^n, b = 0.
TransitionData hirzebruch(const CoeffRing& field, int n);

/// Lift of the base Frobenius on both base charts.
struct BaseLift {
  AffineChartLift U;  // in u
  AffineChartLift V;  // in v
};

/// F_U(u) = u^p + p*c. For P^1 the V side comes from the P^1 chart extension
/// of c, so deg c <= 2p is required there.
BaseLift make_base_lift(ToricBase base, const CoeffRing& field, const Poly& c);
BaseLift standard_base_lift(ToricBase base, const CoeffRing& field);

struct RuledLift {
  TransitionData T;
  BaseLift baseF;
  AffineChartLift ux, ut, vy, vs;
  Poly h;  // F(y) = y^p + p*h on Vy, over F_q in (v, y)
};

/// F(x) = x^p on Ux, F(y) = ((a~y + b~)^p - F_C(b~) - p y^(2p) glue^p) / F_C(a~)
/// on Vy, t and s charts by P^1 extension. Throws NotRegular if h has poles
/// on V, UnitError if F_C(a~) is not a unit.
RuledLift build_standard_lift(const TransitionData& T, const BaseLift& baseF);

struct GlueFailure {
  std::string overlap;     // e.g. "Ut|Vy": coordinates of the first chart
  std::string coordinate;  // which coordinate of the first chart disagrees
  std::string detail;
};

/// Checks, on every pairwise overlap, that the images of the first chart's
/// coordinates agree with the second chart's map after transport. Empty on
/// success.
std::vector<GlueFailure> verify_gluing(const RuledLift& L);

struct BaseLiftExtraction {
  AffineChartLift F0;          // degree-0 part in the fiber variable, as a base lift
  std::vector<Poly> tails;     // F_i(u) over W2 for i >= 1 (tails[i-1])
};

/// Splits the image of the base variable u (variable 0) in powers of the
/// fiber variable. Throws InvariantViolation if some tail is not divisible by
/// p or F0 does not lift the base Frobenius.
BaseLiftExtraction extract_base_lift(const Poly& image_of_u, unsigned base_mask);
BaseLiftExtraction extract_base_lift(const AffineChartLift& chart);

struct BaseGlueReport {
  bool ok = false;
  Poly eta_from_g0;     // (G0(u) - F0(u)) / p on U∩V
  Poly eta_from_tails;  // sum_{i>=1} F_i(u) b~^i / p on U∩V
  std::string detail;
};

/// Compares the base lifts extracted from the Ux and Vy charts on U∩V, both
/// through G0 - F0 and through the tails of the Ux expansion, and runs the
/// eta axioms on the resulting difference.
BaseGlueReport base_glue_consistency(const RuledLift& L);

}  // namespace frobw2
