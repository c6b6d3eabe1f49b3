#include "frobw2/projline.hpp"

#include <numeric>

namespace frobw2 {

AffineChartLift fiber_chart_lift(const AffineChartLift& base, const Poly& fiber_correction) {
  const std::size_t n = base.nvars();
  std::vector<std::size_t> keep(n);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  std::vector<Poly> corrections;
  for (const auto& c : base.corrections()) corrections.push_back(remap_variables(c, n + 1, keep));
  corrections.push_back(fiber_correction);
  return make_lift(base.field(), n + 1, base.laurent_mask(), std::move(corrections));
}

Poly extend_chart(const AffineChartLift& base, const Poly& f) {
  const std::size_t n = base.nvars();
  if (&f.ring() != &base.field() || f.nvars() != n + 1)
    raise(ErrorKind::ShapeError, "fiber correction must be over F_q in base variables plus x");
  if (f.min_degree_in(n) < 0)
    raise(ErrorKind::ShapeError, "fiber correction must be polynomial in x");
  const int two_p = 2 * static_cast<int>(base.p());
  if (f.degree_in(n) > two_p)
    raise(ErrorKind::DegreeTooHigh, "deg_x f = " + std::to_string(f.degree_in(n)) +
                                        " exceeds 2p = " + std::to_string(two_p));
  const CoeffRing& k = base.field();
  std::vector<std::pair<Monomial, Poly::Code>> terms;
  for (const auto& [m, c] : f.terms()) {
    std::array<int, kMaxVars> e{};
    for (std::size_t j = 0; j < n; ++j) e[j] = m[j];
    e[n] = two_p - m[n];
    terms.emplace_back(Monomial(std::span<const int>(e.data(), n + 1)), k.neg(c));
  }
  return Poly::from_terms(k, n + 1, terms);
}

P1Check verify_p1_lift(const P1Lift& L) {
  const AffineChartLift& base = L.base;
  const std::size_t n = base.nvars();
  P1Check out;
  Poly g(base.field(), n + 1);
  try {
    g = extend_chart(base, L.f);
  } catch (const Error& e) {
    out.failing_chart = "y";
    out.detail = e.what();
    return out;
  }
  if (extend_chart(base, g) != L.f) {
    out.failing_chart = "round-trip";
    out.detail = "extending back from the y-chart gave " + to_string(extend_chart(base, g));
    return out;
  }

  const AffineChartLift Fx = fiber_chart_lift(base, L.f);
  const AffineChartLift Fy = fiber_chart_lift(base, g);
  const CoeffRing& w = base.witt();
  const int p = static_cast<int>(base.p());
  for (const auto* chart : {&Fx, &Fy}) {
    for (std::size_t i = 0; i <= n; ++i) {
      const Poly expected =
          Poly::monomial(base.field(), Monomial::variable(n + 1, i, p), base.field().one());
      if (reduce_mod_p(chart->image(i)) != expected) {
        out.failing_chart = chart == &Fx ? "x" : "y";
        out.detail = "image of variable " + std::to_string(i + 1) + " does not reduce to x^p";
        return out;
      }
    }
  }

  // Overlap in x-coordinates with x inverted; y = 1/x.
  const AffineChartLift Fx_loc = localize(Fx, 1u << n);
  std::vector<Poly> y_in_x;
  for (std::size_t j = 0; j < n; ++j) y_in_x.push_back(Poly::variable(w, n + 1, j));
  y_in_x.push_back(Poly::monomial(w, Monomial::variable(n + 1, n, -1), w.one()));
  for (std::size_t i = 0; i <= n; ++i) {
    const Poly transported = compose(Fy.image(i), y_in_x);
    const Poly direct = apply_lift(Fx_loc, y_in_x[i]);
    if (transported != direct) {
      out.failing_chart = "overlap";
      out.detail = "coordinate " + std::to_string(i + 1) + ": " + to_string(transported) +
                   " vs " + to_string(direct);
      return out;
    }
  }
  out.ok = true;
  return out;
}

int lift_space_dimension(std::uint32_t p) {
  const CoeffRing& k = CoeffRing::fq(p);
  const AffineChartLift point = standard_lift(k, 0);
  int count = 0;
  for (int d = 0; d <= 3 * static_cast<int>(p); ++d) {
    try {
      extend_chart(point, Poly::monomial(k, Monomial::variable(1, 0, d), k.one()));
      ++count;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeTooHigh) throw;
    }
  }
  return count;
}

}  // namespace frobw2
