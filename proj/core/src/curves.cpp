#include "frobw2/curves.hpp"

#include <vector>

#include "frobw2/poly.hpp"

namespace frobw2 {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

}  // namespace

WeierstrassCurve WeierstrassCurve::short_form(std::uint32_t p, std::int64_t a, std::int64_t b) {
  WeierstrassCurve E;
  E.p = p;
  E.a4 = a;
  E.a6 = b;
  return E;
}

bool WeierstrassCurve::is_short() const {
  const std::int64_t q = p;
  return mod(a1, q) == 0 && mod(a2, q) == 0 && mod(a3, q) == 0;
}

std::uint32_t discriminant(const WeierstrassCurve& E) {
  const std::int64_t p = PrimeChar(E.p).value();
  const std::int64_t a1 = mod(E.a1, p), a2 = mod(E.a2, p), a3 = mod(E.a3, p);
  const std::int64_t a4 = mod(E.a4, p), a6 = mod(E.a6, p);
  const std::int64_t b2 = mod(a1 * a1 + 4 * a2, p);
  const std::int64_t b4 = mod(2 * a4 + a1 * a3, p);
  const std::int64_t b6 = mod(a3 * a3 + 4 * a6, p);
  const std::int64_t b8 =
      mod(a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4, p);
  const std::int64_t d = -b2 * b2 % p * b8 - 8 * (b4 * b4 % p) * b4 - 27 * b6 * b6 +
                         9 * (b2 * b4 % p) * b6;
  return static_cast<std::uint32_t>(mod(d, p));
}

void require_nonsingular(const WeierstrassCurve& E) {
  if (discriminant(E) == 0)
    raise(ErrorKind::SingularCurve, "discriminant vanishes over F_" + std::to_string(E.p));
}

std::uint64_t count_points(const WeierstrassCurve& E) {
  require_nonsingular(E);
  const std::int64_t p = E.p;
  const std::int64_t a1 = mod(E.a1, p), a2 = mod(E.a2, p), a3 = mod(E.a3, p);
  const std::int64_t a4 = mod(E.a4, p), a6 = mod(E.a6, p);
  std::uint64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = mod(x * x * x + a2 * x * x + a4 * x + a6, p);
    for (std::int64_t y = 0; y < p; ++y)
      if (mod(y * y + a1 * x * y + a3 * y - rhs, p) == 0) ++n;
  }
  return n;
}

std::int64_t frobenius_trace(const WeierstrassCurve& E) {
  return static_cast<std::int64_t>(E.p) + 1 - static_cast<std::int64_t>(count_points(E));
}

FqElem hasse_invariant(const WeierstrassCurve& E) {
  if (E.p < 5) raise(ErrorKind::UnsupportedField, "Hasse invariant path needs p >= 5");
  if (!E.is_short()) raise(ErrorKind::UnsupportedShape, "Hasse invariant path needs a short form");
  require_nonsingular(E);
  const CoeffRing& k = CoeffRing::fq(E.p);
  const std::vector<std::pair<Monomial, Poly::Code>> terms{
      {Monomial{3}, k.one()}, {Monomial{1}, k.from_int(E.a4)}, {Monomial{0}, k.from_int(E.a6)}};
  const Poly cubic = Poly::from_terms(k, 1, terms);
  const Poly power = cubic.pow((E.p - 1) / 2);
  return FqElem(k, power.coefficient_of(Monomial{static_cast<int>(E.p) - 1}));
}

bool is_ordinary_curve(const WeierstrassCurve& E) {
  const bool by_count = mod(frobenius_trace(E), E.p) != 0;
  if (E.p >= 5 && E.is_short()) {
    const bool by_hasse = !hasse_invariant(E).is_zero();
    if (by_hasse != by_count)
      raise(ErrorKind::InvariantViolation, "Hasse invariant and point count disagree");
  }
  return by_count;
}

OrdinarityCensus ordinarity_census(std::uint32_t p) {
  if (p < 5) raise(ErrorKind::UnsupportedField, "census uses the Hasse invariant, p >= 5");
  OrdinarityCensus c;
  c.p = p;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      const auto E = WeierstrassCurve::short_form(p, a, b);
      if (discriminant(E) == 0) continue;
      ++c.nonsingular;
      const bool hasse_ss = hasse_invariant(E).is_zero();
      const bool count_ss = mod(frobenius_trace(E), p) == 0;
      c.supersingular_by_hasse += hasse_ss;
      c.supersingular_by_count += count_ss;
      c.mismatches += hasse_ss != count_ss;
    }
  }
  return c;
}

}  // namespace frobw2
