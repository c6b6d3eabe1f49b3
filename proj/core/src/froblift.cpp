#include "frobw2/froblift.hpp"

namespace frobw2 {

namespace {

void require_chart_element(const Poly& f, const CoeffRing& ring, std::size_t nvars,
                           unsigned mask, const char* what) {
  if (&f.ring() != &ring || f.nvars() != nvars)
    raise(ErrorKind::ShapeError, std::string(what) + " is not in the chart ring");
  for (std::size_t j = 0; j < nvars; ++j)
    if (!((mask >> j) & 1u) && f.min_degree_in(j) < 0)
      raise(ErrorKind::ShapeError, std::string(what) + " inverts variable " +
                                       std::to_string(j + 1) + " outside the Laurent mask");
}

}  // namespace

AffineChartLift make_lift(const CoeffRing& field, std::size_t nvars, unsigned laurent_mask,
                          std::vector<Poly> corrections) {
  if (!field.is_field()) raise(ErrorKind::RingMismatch, "corrections live over F_q");
  if (nvars > kMaxVars) raise(ErrorKind::ShapeError, "too many chart variables");
  if (laurent_mask >> nvars) raise(ErrorKind::ShapeError, "Laurent mask names a missing variable");
  if (corrections.size() != nvars)
    raise(ErrorKind::ShapeError, "expected " + std::to_string(nvars) + " corrections, got " +
                                     std::to_string(corrections.size()));
  AffineChartLift F(field, nvars, laurent_mask);
  const CoeffRing& w = field.witt_ring();
  for (std::size_t i = 0; i < nvars; ++i) {
    require_chart_element(corrections[i], field, nvars, laurent_mask, "correction");
    F.images_.push_back(
        Poly::monomial(w, Monomial::variable(nvars, i, static_cast<int>(field.p())), w.one()) +
        times_p(corrections[i]));
  }
  F.corrections_ = std::move(corrections);
  return F;
}

AffineChartLift standard_lift(const CoeffRing& field, std::size_t nvars, unsigned laurent_mask) {
  return make_lift(field, nvars, laurent_mask, std::vector<Poly>(nvars, Poly(field, nvars)));
}

AffineChartLift localize(const AffineChartLift& F, unsigned extra_mask) {
  return make_lift(F.field(), F.nvars(), F.laurent_mask() | extra_mask, F.corrections());
}

Poly apply_lift(const AffineChartLift& F, const Poly& a) {
  require_chart_element(a, F.witt(), F.nvars(), F.laurent_mask(), "argument");
  return compose(a, F.images(), /*twist=*/true);
}

// ------------------------------------------------------------------- eta --

EtaFunction::EtaFunction(std::vector<Poly> generator_values) : values_(std::move(generator_values)) {
  for (const auto& v : values_) {
    if (!v.ring().is_field()) raise(ErrorKind::RingMismatch, "eta takes values over F_q");
    if (&v.ring() != &values_.front().ring() || v.nvars() != values_.size())
      raise(ErrorKind::ShapeError, "eta generator values must share one chart ring");
  }
}

bool EtaFunction::is_zero() const noexcept {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

Poly EtaFunction::operator()(const Poly& a) const {
  if (a.nvars() != values_.size()) raise(ErrorKind::ShapeError, "eta argument in another ring");
  Poly acc(a.ring(), a.nvars());
  if (values_.empty()) return acc;
  if (&a.ring() != &values_.front().ring()) raise(ErrorKind::RingMismatch, "eta over another field");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    acc += frobenius_power(partial_derivative(a, i)) * values_[i];
  }
  return acc;
}

EtaMap EtaFunction::as_map() const {
  return [self = *this](const Poly& a) { return self(a); };
}

EtaFunction eta_between(const AffineChartLift& F1, const AffineChartLift& F2) {
  if (&F1.field() != &F2.field() || F1.nvars() != F2.nvars())
    raise(ErrorKind::ShapeError, "lifts on different charts");
  std::vector<Poly> values;
  for (std::size_t i = 0; i < F1.nvars(); ++i)
    values.push_back(F2.corrections()[i] - F1.corrections()[i]);
  return EtaFunction(std::move(values));
}

EtaMap lift_difference_eta(const AffineChartLift& F1, const AffineChartLift& F2) {
  if (&F1.field() != &F2.field() || F1.nvars() != F2.nvars())
    raise(ErrorKind::ShapeError, "lifts on different charts");
  return [F1, F2](const Poly& a) {
    const Poly lifted = teichmuller_lift(a);
    return divide_by_p(apply_lift(F2, lifted) - apply_lift(F1, lifted));
  };
}

EtaCheck eta_axioms_check(const EtaMap& eta, const Poly& a, const Poly& b) {
  EtaCheck out;
  const Poly ea = eta(a);
  const Poly eb = eta(b);
  out.additive = eta(a + b) == ea + eb;
  out.leibniz = eta(a * b) == frobenius_power(a) * eb + frobenius_power(b) * ea;
  if (!out.ok()) out.witness = std::make_pair(to_string(a), to_string(b));
  return out;
}

// ------------------------------------------------------------------- phi --

Monomial phi_target_monomial(std::size_t nvars, std::uint32_t p) {
  std::array<int, kMaxVars> e{};
  for (std::size_t j = 0; j < nvars; ++j) e[j] = static_cast<int>(p) - 1;
  return Monomial(std::span<const int>(e.data(), nvars));
}

PolyMatrix phi_matrix(const AffineChartLift& F) {
  const std::size_t n = F.nvars();
  if (n == 0) raise(ErrorKind::ShapeError, "phi matrix of a zero-dimensional chart");
  const CoeffRing& k = F.field();
  std::vector<Poly> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly e = partial_derivative(F.corrections()[i], j);
      if (i == j)
        e += Poly::monomial(k, Monomial::variable(n, i, static_cast<int>(F.p()) - 1), k.one());
      entries.push_back(std::move(e));
    }
  }
  return PolyMatrix(n, n, std::move(entries));
}

Poly phi_det(const AffineChartLift& F) { return determinant(phi_matrix(F)); }

namespace {

std::int64_t integer_det(const std::vector<std::vector<int>>& K, std::size_t m) {
  if (m == 1) return K[0][0];
  if (m == 2) return std::int64_t{K[0][0]} * K[1][1] - std::int64_t{K[0][1]} * K[1][0];
  std::int64_t d = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
    d += std::int64_t{K[0][j]} * (std::int64_t{K[1][a]} * K[2][b] - std::int64_t{K[1][b]} * K[2][a]);
  }
  return d;
}

}  // namespace

MonomialLemmaResult monomial_lemma_check(const std::vector<std::vector<int>>& K,
                                         std::uint32_t p) {
  const CoeffRing& k = CoeffRing::fq(p);
  const std::size_t m = K.size();
  if (m == 0) raise(ErrorKind::ShapeError, "empty exponent matrix");
  const std::size_t n = K.front().size();
  if (n < m || n > 3) raise(ErrorKind::RangeError, "exponent matrix needs m <= n <= 3");
  for (const auto& row : K) {
    if (row.size() != n) raise(ErrorKind::ShapeError, "ragged exponent matrix");
    for (int e : row)
      if (e < 0 || e > static_cast<int>(p) - 1)
        raise(ErrorKind::RangeError, "exponent " + std::to_string(e) + " outside [0, p-1]");
  }

  std::vector<Poly> entries;
  for (std::size_t i = 0; i < m; ++i) {
    const Poly fi = Poly::monomial(k, Monomial(std::span<const int>(K[i].data(), n)), k.one());
    for (std::size_t j = 0; j < m; ++j) entries.push_back(partial_derivative(fi, j));
  }
  MonomialLemmaResult out{false, false, determinant(PolyMatrix(m, m, std::move(entries))),
                          Poly(k, n)};

  const auto dk = k.from_int(integer_det(K, m));
  if (dk != 0) {
    std::array<int, kMaxVars> s{};
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) s[j] += K[i][j];
      if (j < m) s[j] -= 1;
    }
    out.closed_form = Poly::monomial(k, Monomial(std::span<const int>(s.data(), n)), dk);
  }

  std::array<int, kMaxVars> target{};
  for (std::size_t j = 0; j < m; ++j) target[j] = static_cast<int>(p) - 1;
  out.coefficient_zero =
      out.expanded.coefficient_of(Monomial(std::span<const int>(target.data(), n))) == 0;
  out.closed_form_matches = out.expanded == out.closed_form;
  return out;
}

}  // namespace frobw2
