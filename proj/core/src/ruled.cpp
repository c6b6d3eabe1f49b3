#include "frobw2/ruled.hpp"

#include <map>

namespace frobw2 {

std::string_view to_string(ToricBase b) {
  switch (b) {
    case ToricBase::A1: return "A1";
    case ToricBase::Gm: return "Gm";
    case ToricBase::P1: return "P1";
  }
  return "?";
}

ToricBase parse_toric_base(std::string_view s) {
  if (s == "A1") return ToricBase::A1;
  if (s == "Gm") return ToricBase::Gm;
  if (s == "P1") return ToricBase::P1;
  raise(ErrorKind::ParseError, "unknown base '" + std::string(s) + "' (expected A1, Gm or P1)");
}

namespace {

unsigned chart_mask(ToricBase base) { return base == ToricBase::Gm ? 1u : 0u; }

const std::size_t kKeepBase[] = {0};

Poly to_two_vars(const Poly& f) { return remap_variables(f, 2, kKeepBase); }

// Image of the U-coordinate u in V-coordinates, inside `ring` on nvars
// variables with the base variable first.
Poly u_in_v(ToricBase base, const CoeffRing& ring, std::size_t nvars) {
  const int e = base == ToricBase::P1 ? -1 : 1;
  return Poly::monomial(ring, Monomial::variable(nvars, 0, e), ring.one());
}

// Rewrites a polynomial in (u, fiber) as one in (v, fiber).
Poly base_to_v(ToricBase base, const Poly& f) {
  const std::vector<Poly> images{u_in_v(base, f.ring(), 2), Poly::variable(f.ring(), 2, 1)};
  return compose(f, images);
}

Poly var_power(const CoeffRing& ring, std::size_t nvars, std::size_t j, int e) {
  return Poly::monomial(ring, Monomial::variable(nvars, j, e), ring.one());
}

}  // namespace

TransitionData make_transition(ToricBase base, Poly a, Poly b, std::optional<Poly> glue) {
  const CoeffRing& k = a.ring();
  if (!k.is_field() || &b.ring() != &k || a.nvars() != 1 || b.nvars() != 1)
    raise(ErrorKind::ShapeError, "a and b must be polynomials over F_q in the base variable");
  if (!is_unit(a) || (base == ToricBase::A1 && !a.is_constant()))
    raise(ErrorKind::UnitError, "a = " + to_string(a) + " is not a unit on the overlap");
  if (base == ToricBase::A1 && b.min_degree_in(0) < 0)
    raise(ErrorKind::ShapeError, "b has a pole on the affine line");
  if (glue) {
    if (&glue->ring() != &k || glue->nvars() != 2 || glue->min_degree_in(1) < 0 ||
        (base == ToricBase::A1 && glue->min_degree_in(0) < 0))
      raise(ErrorKind::ShapeError, "glue correction must be a section of O(U∩V)[y]");
  }
  return TransitionData{base, std::move(a), std::move(b), std::move(glue)};
}

TransitionData hirzebruch(const CoeffRing& field, int n) {
  if (n < 0) raise(ErrorKind::RangeError, "Hirzebruch index must be >= 0");
  return make_transition(ToricBase::P1, var_power(field, 1, 0, n), Poly(field, 1));
}

BaseLift make_base_lift(ToricBase base, const CoeffRing& field, const Poly& c) {
  AffineChartLift U = make_lift(field, 1, chart_mask(base), {c});
  if (base != ToricBase::P1) return BaseLift{U, U};
  const Poly g = extend_chart(standard_lift(field, 0), c);
  return BaseLift{U, make_lift(field, 1, 0, {g})};
}

BaseLift standard_base_lift(ToricBase base, const CoeffRing& field) {
  return make_base_lift(base, field, Poly(field, 1));
}

RuledLift build_standard_lift(const TransitionData& T, const BaseLift& baseF) {
  const CoeffRing& k = T.a.ring();
  if (&baseF.U.field() != &k) raise(ErrorKind::RingMismatch, "base lift over another field");
  const CoeffRing& w = k.witt_ring();
  const int p = static_cast<int>(k.p());
  const AffineChartLift FC = localize(baseF.U, T.overlap_mask());

  const Poly a_t = teichmuller_lift(T.a);
  const Poly b_t = teichmuller_lift(T.b);
  const Poly Fa = to_two_vars(apply_lift(FC, a_t));
  const Poly Fb = to_two_vars(apply_lift(FC, b_t));
  if (!is_unit(Fa)) raise(ErrorKind::UnitError, "F_C(a) is not a unit");

  const Poly y = Poly::variable(w, 2, 1);
  Poly numerator = (to_two_vars(a_t) * y + to_two_vars(b_t)).pow(static_cast<unsigned>(p)) - Fb;
  if (T.glue)
    numerator -= times_p(var_power(k, 2, 1, 2 * p) * frobenius_power(*T.glue));
  const Poly Fy = numerator * invert_unit(Fa);
  Poly h_u(k, 2);
  try {
    h_u = divide_by_p(Fy - var_power(w, 2, 1, p));
  } catch (const Error&) {
    raise(ErrorKind::InvariantViolation, "F(y) does not reduce to y^p");
  }
  const Poly h = base_to_v(T.base, h_u);
  if (T.base != ToricBase::Gm && h.min_degree_in(0) < 0)
    raise(ErrorKind::NotRegular, "h = " + to_string(h) + " has a pole on V");

  const Poly zero(k, 2);
  RuledLift L{T,
              baseF,
              fiber_chart_lift(baseF.U, zero),
              fiber_chart_lift(baseF.U, extend_chart(baseF.U, zero)),
              fiber_chart_lift(baseF.V, h),
              fiber_chart_lift(baseF.V, extend_chart(baseF.V, h)),
              h};
  return L;
}

// ---------------------------------------------------------------- gluing --

namespace {

struct Fraction {
  Poly num;
  Poly den;
};

bool is_one(const Poly& f) { return f.is_constant() && !f.is_zero() && f.raw_terms()[0].coeff == 1; }

// Writes P(images) as N / Den with Den a product of powers of the
// denominators. Variables with denominator 1 may appear with negative
// exponents, provided their numerator is a unit.
std::pair<Poly, Poly> transport(const Poly& P, const std::vector<Fraction>& images) {
  const CoeffRing& r = P.ring();
  const std::size_t target_n = images.front().num.nvars();
  const std::size_t n = P.nvars();
  std::vector<int> D(n, 0);
  Poly Den = Poly::constant(r, target_n, r.one());
  for (std::size_t j = 0; j < n; ++j) {
    if (is_one(images[j].den)) continue;
    if (P.min_degree_in(j) < 0)
      raise(ErrorKind::UnitError, "inverted coordinate with a non-unit denominator");
    D[j] = std::max(0, P.degree_in(j));
    Den *= images[j].den.pow(static_cast<unsigned>(D[j]));
  }
  std::vector<std::map<int, Poly>> num_pow(n), den_pow(n);
  auto power = [&](std::map<int, Poly>& cache, const Poly& base, int e) -> const Poly& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Poly v = e >= 0 ? base.pow(static_cast<unsigned>(e))
                    : invert_unit(base).pow(static_cast<unsigned>(-e));
    return cache.emplace(e, std::move(v)).first->second;
  };
  Poly N(r, target_n);
  for (const auto& [m, c] : P.terms()) {
    Poly term = Poly::constant(r, target_n, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] != 0) term *= power(num_pow[j], images[j].num, m[j]);
      if (D[j] - m[j] != 0) term *= power(den_pow[j], images[j].den, D[j] - m[j]);
    }
    N += term;
  }
  return {N, Den};
}

void check_overlap(const std::string& name, const AffineChartLift& A,
                   const std::vector<std::string>& coord_names, const AffineChartLift& B,
                   const std::vector<Fraction>& images, std::vector<GlueFailure>& failures) {
  for (std::size_t i = 0; i < A.nvars(); ++i) {
    try {
      const auto [N, Den] = transport(A.image(i), images);
      const Poly lhs = apply_lift(B, images[i].num) * Den;
      const Poly rhs = N * apply_lift(B, images[i].den);
      if (lhs != rhs)
        failures.push_back({name, coord_names[i],
                            "F(" + coord_names[i] + ") transported: " + to_string(rhs) +
                                " vs " + to_string(lhs)});
    } catch (const Error& e) {
      failures.push_back({name, coord_names[i], e.what()});
    }
  }
}

Fraction whole(Poly f) {
  Poly one = Poly::constant(f.ring(), f.nvars(), f.ring().one());
  return {std::move(f), std::move(one)};
}

Fraction reciprocal(Poly f) {
  Poly one = Poly::constant(f.ring(), f.nvars(), f.ring().one());
  return {std::move(one), std::move(f)};
}

}  // namespace

std::vector<GlueFailure> verify_gluing(const RuledLift& L) {
  std::vector<GlueFailure> failures;
  const CoeffRing& k = L.T.a.ring();
  const CoeffRing& w = k.witt_ring();
  const int p = static_cast<int>(k.p());

  const struct {
    const AffineChartLift* chart;
    const char* name;
  } charts[] = {{&L.ux, "Ux"}, {&L.ut, "Ut"}, {&L.vy, "Vy"}, {&L.vs, "Vs"}};
  for (const auto& c : charts) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (reduce_mod_p(c.chart->image(i)) != var_power(k, 2, i, p))
        failures.push_back({c.name, std::to_string(i + 1), "image does not reduce to Frobenius"});
    }
  }

  // x in Vy-coordinates (v inverted where U∩V needs it), then in Vs-coordinates.
  Poly x_uy = to_two_vars(teichmuller_lift(L.T.a)) * Poly::variable(w, 2, 1) +
              to_two_vars(teichmuller_lift(L.T.b));
  if (L.T.glue) x_uy += times_p(var_power(k, 2, 1, 2) * *L.T.glue);
  const Poly x_vy = base_to_v(L.T.base, x_uy);
  const std::vector<Poly> y_to_s{Poly::variable(w, 2, 0), var_power(w, 2, 1, -1)};
  const Poly x_vs = compose(x_vy, y_to_s);
  const Poly u_v = u_in_v(L.T.base, w, 2);
  const unsigned vmask = L.T.overlap_mask();

  const AffineChartLift ux_x = localize(L.ux, 2u);
  const AffineChartLift vy_ov = localize(L.vy, vmask);
  const AffineChartLift vy_y = localize(L.vy, 2u);
  const AffineChartLift vs_ov = localize(L.vs, vmask | 2u);

  const Poly u = Poly::variable(w, 2, 0);
  const Poly x = Poly::variable(w, 2, 1);
  const Poly y = Poly::variable(w, 2, 1);

  check_overlap("Ut|Ux", L.ut, {"u", "t"}, ux_x, {whole(u), reciprocal(x)}, failures);
  check_overlap("Ux|Vy", L.ux, {"u", "x"}, vy_ov, {whole(u_v), whole(x_vy)}, failures);
  check_overlap("Ux|Vs", L.ux, {"u", "x"}, vs_ov, {whole(u_v), whole(x_vs)}, failures);
  check_overlap("Ut|Vy", L.ut, {"u", "t"}, vy_ov, {whole(u_v), reciprocal(x_vy)}, failures);
  check_overlap("Ut|Vs", L.ut, {"u", "t"}, vs_ov, {whole(u_v), reciprocal(x_vs)}, failures);
  check_overlap("Vs|Vy", L.vs, {"v", "s"}, vy_y, {whole(Poly::variable(w, 2, 0)), reciprocal(y)},
                failures);
  return failures;
}

// ------------------------------------------------------ base extraction --

BaseLiftExtraction extract_base_lift(const Poly& image_of_u, unsigned base_mask) {
  const CoeffRing& w = image_of_u.ring();
  if (w.is_field() || image_of_u.nvars() != 2)
    raise(ErrorKind::ShapeError, "expected a W2 polynomial in (u, fiber)");
  if (image_of_u.min_degree_in(1) < 0)
    raise(ErrorKind::ShapeError, "image must be polynomial in the fiber variable");
  const CoeffRing& k = w.residue_field();
  const int top = image_of_u.degree_in(1);
  std::vector<PolyBuilder> parts(static_cast<std::size_t>(top) + 1, PolyBuilder(w, 1));
  for (const auto& [m, c] : image_of_u.terms())
    parts[static_cast<std::size_t>(m[1])].add(Monomial{m[0]}.key(), c);

  const Poly F0 = parts[0].build();
  std::vector<Poly> tails;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    tails.push_back(parts[i].build());
    if (!reduce_mod_p(tails.back()).is_zero())
      raise(ErrorKind::InvariantViolation,
            "tail coefficient F_" + std::to_string(i) + " = " + to_string(tails.back()) +
                " is not killed by p");
  }
  Poly c(k, 1);
  try {
    c = divide_by_p(F0 - var_power(w, 1, 0, static_cast<int>(k.p())));
  } catch (const Error&) {
    raise(ErrorKind::InvariantViolation, "F0(u) = " + to_string(F0) + " does not lift u^p");
  }
  return BaseLiftExtraction{make_lift(k, 1, base_mask & 1u, {c}), std::move(tails)};
}

BaseLiftExtraction extract_base_lift(const AffineChartLift& chart) {
  if (chart.nvars() != 2) raise(ErrorKind::ShapeError, "expected a chart in (u, fiber)");
  return extract_base_lift(chart.image(0), chart.laurent_mask() & 1u);
}

BaseGlueReport base_glue_consistency(const RuledLift& L) {
  BaseGlueReport out{false, Poly(L.T.a.ring(), 1), Poly(L.T.a.ring(), 1), {}};
  const CoeffRing& k = L.T.a.ring();
  const CoeffRing& w = k.witt_ring();
  const unsigned ov = L.T.overlap_mask();
  try {
    const BaseLiftExtraction ex_u = extract_base_lift(L.ux);
    const BaseLiftExtraction ex_v = extract_base_lift(L.vy);

    // G0 evaluated at u, then rewritten in u-coordinates.
    const int e = L.T.base == ToricBase::P1 ? -1 : 1;
    const Poly u_as_v = var_power(w, 1, 0, e);
    const Poly G0_v = apply_lift(localize(ex_v.F0, ov), u_as_v);
    const Poly G0_u = compose(G0_v, std::vector<Poly>{var_power(w, 1, 0, e)});
    const Poly F0_u = ex_u.F0.image(0);
    out.eta_from_g0 = divide_by_p(G0_u - F0_u);

    const Poly b_t = teichmuller_lift(L.T.b);
    Poly tail_sum(w, 1);
    Poly b_pow = b_t;
    for (const auto& Fi : ex_u.tails) {
      tail_sum += Fi * b_pow;
      b_pow *= b_t;
    }
    out.eta_from_tails = divide_by_p(tail_sum);
    if (out.eta_from_g0 != out.eta_from_tails) {
      out.detail = "eta from G0 - F0 differs from eta from the tails";
      return out;
    }

    const AffineChartLift F0_ov = localize(ex_u.F0, ov);
    const AffineChartLift G0_ov =
        make_lift(k, 1, ov, {divide_by_p(G0_u - var_power(w, 1, 0, static_cast<int>(k.p())))});
    const EtaMap eta = lift_difference_eta(F0_ov, G0_ov);
    if (eta(Poly::variable(k, 1, 0)) != out.eta_from_g0) {
      out.detail = "difference map disagrees with eta(u)";
      return out;
    }
    std::vector<Poly> battery{Poly::constant(k, 1, k.one()), Poly::variable(k, 1, 0),
                              parse_poly("x1 + 1", k, 1), parse_poly("x1^2 + 2*x1", k, 1),
                              var_power(k, 1, 0, static_cast<int>(k.p()) + 1)};
    if (ov) {
      battery.push_back(var_power(k, 1, 0, -1));
      battery.push_back(parse_poly("x1^-2 + x1", k, 1));
    }
    for (const auto& a : battery)
      for (const auto& b : battery) {
        const EtaCheck chk = eta_axioms_check(eta, a, b);
        if (!chk.ok()) {
          out.detail = "eta axioms fail at (" + chk.witness->first + ", " +
                       chk.witness->second + ")";
          return out;
        }
      }
  } catch (const Error& e) {
    out.detail = e.what();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace frobw2
