#include "frobw2/poly.hpp"

#include <algorithm>

namespace frobw2 {

namespace {

constexpr int kBias = 1 << 15;
constexpr unsigned shift_of(std::size_t j) { return static_cast<unsigned>((kMaxVars - 1 - j) * 16); }

int field_of(Monomial::Key key, std::size_t j) {
  return static_cast<int>((key >> shift_of(j)) & 0xFFFF) - kBias;
}

constexpr Monomial::Key kUnitKey = 0x8000800080008000ULL;

}  // namespace

// ---------------------------------------------------------------- Monomial --

Monomial::Monomial(std::span<const int> exponents) : n_(exponents.size()) {
  if (exponents.size() > kMaxVars)
    raise(ErrorKind::ShapeError, "at most " + std::to_string(kMaxVars) + " variables");
  for (std::size_t j = 0; j < n_; ++j) {
    if (exponents[j] > kMaxExponent || exponents[j] < -kMaxExponent)
      raise(ErrorKind::RangeError, "exponent " + std::to_string(exponents[j]) + " out of range");
    e_[j] = exponents[j];
  }
}

Monomial Monomial::one(std::size_t nvars) {
  std::array<int, kMaxVars> z{};
  if (nvars > kMaxVars) raise(ErrorKind::ShapeError, "too many variables");
  return Monomial(std::span<const int>(z.data(), nvars));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t j, int e) {
  if (j >= nvars) raise(ErrorKind::ShapeError, "variable index out of range");
  std::array<int, kMaxVars> z{};
  z[j] = e;
  return Monomial(std::span<const int>(z.data(), nvars));
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += e_[j];
  return d;
}

bool Monomial::has_negative() const noexcept {
  for (std::size_t j = 0; j < n_; ++j)
    if (e_[j] < 0) return true;
  return false;
}

Monomial::Key Monomial::key() const noexcept {
  Key k = kUnitKey;
  for (std::size_t j = 0; j < n_; ++j)
    k += static_cast<Key>(static_cast<std::int64_t>(e_[j])) << shift_of(j);
  return k;
}

Monomial Monomial::from_key(Key key, std::size_t nvars) noexcept {
  Monomial m;
  m.n_ = nvars;
  for (std::size_t j = 0; j < nvars; ++j) m.e_[j] = field_of(key, j);
  return m;
}

Monomial::Key Monomial::unit_key() noexcept { return kUnitKey; }

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) raise(ErrorKind::ShapeError, "monomials in different rings");
  std::array<int, kMaxVars> e{};
  for (std::size_t j = 0; j < a.n_; ++j) e[j] = a.e_[j] + b.e_[j];
  return Monomial(std::span<const int>(e.data(), a.n_));
}

// ------------------------------------------------------------- PolyBuilder --

PolyBuilder::PolyBuilder(const CoeffRing& ring, std::size_t nvars)
    : ring_(&ring), nvars_(nvars) {}

Poly PolyBuilder::build() {
  Poly out(*ring_, nvars_);
  std::sort(pending_.begin(), pending_.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.key < b.key; });
  auto& dst = out.terms_;
  dst.reserve(pending_.size());
  for (std::size_t i = 0; i < pending_.size();) {
    const auto key = pending_[i].key;
    Poly::Code c = 0;
    for (; i < pending_.size() && pending_[i].key == key; ++i) c = ring_->add(c, pending_[i].coeff);
    if (c == 0) continue;
    for (std::size_t j = 0; j < nvars_; ++j) {
      const int e = field_of(key, j);
      if (e > kMaxExponent || e < -kMaxExponent)
        raise(ErrorKind::RangeError, "exponent overflow in product");
    }
    dst.push_back({key, c});
  }
  pending_.clear();
  return out;
}

// -------------------------------------------------------------------- Poly --

Poly::Poly(const CoeffRing& ring, std::size_t nvars) : ring_(&ring), nvars_(nvars) {
  if (nvars > kMaxVars)
    raise(ErrorKind::ShapeError, "at most " + std::to_string(kMaxVars) + " variables");
}

Poly Poly::constant(const CoeffRing& ring, std::size_t nvars, Code c) {
  return monomial(ring, Monomial::one(nvars), c);
}

Poly Poly::variable(const CoeffRing& ring, std::size_t nvars, std::size_t j) {
  return monomial(ring, Monomial::variable(nvars, j), ring.one());
}

Poly Poly::monomial(const CoeffRing& ring, const Monomial& m, Code c) {
  if (!ring.valid(c)) raise(ErrorKind::RangeError, "coefficient code out of range");
  Poly out(ring, m.size());
  if (c != 0) out.terms_.push_back({m.key(), c});
  return out;
}

Poly Poly::from_terms(const CoeffRing& ring, std::size_t nvars,
                      std::span<const std::pair<Monomial, Code>> terms) {
  PolyBuilder b(ring, nvars);
  b.reserve(terms.size());
  for (const auto& [m, c] : terms) {
    if (m.size() != nvars) raise(ErrorKind::ShapeError, "monomial variable count mismatch");
    if (!ring.valid(c)) raise(ErrorKind::RangeError, "coefficient code out of range");
    b.add(m.key(), c);
  }
  return b.build();
}

std::vector<std::pair<Monomial, Poly::Code>> Poly::terms() const {
  std::vector<std::pair<Monomial, Code>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(Monomial::from_key(t.key, nvars_), t.coeff);
  return out;
}

Poly::Code Poly::coefficient_of(const Monomial& m) const {
  if (m.size() != nvars_) raise(ErrorKind::ShapeError, "monomial variable count mismatch");
  const auto key = m.key();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, Monomial::Key k) { return t.key < k; });
  return (it != terms_.end() && it->key == key) ? it->coeff : Code{0};
}

int Poly::degree_in(std::size_t j) const noexcept {
  if (terms_.empty()) return 0;
  int d = field_of(terms_.front().key, j);
  for (const auto& t : terms_) d = std::max(d, field_of(t.key, j));
  return d;
}

int Poly::min_degree_in(std::size_t j) const noexcept {
  if (terms_.empty()) return 0;
  int d = field_of(terms_.front().key, j);
  for (const auto& t : terms_) d = std::min(d, field_of(t.key, j));
  return d;
}

int Poly::total_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, Monomial::from_key(t.key, nvars_).total_degree());
  return d;
}

bool Poly::is_laurent() const noexcept {
  for (const auto& t : terms_)
    for (std::size_t j = 0; j < nvars_; ++j)
      if (field_of(t.key, j) < 0) return true;
  return false;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().key == kUnitKey);
}

void Poly::check_compatible(const Poly& other) const {
  if (ring_ != other.ring_)
    raise(ErrorKind::RingMismatch, "polynomials over different coefficient rings");
  if (nvars_ != other.nvars_)
    raise(ErrorKind::RingMismatch, "polynomials in different numbers of variables");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->key < a->key) {
      merged.push_back(*b++);
    } else {
      const Code c = ring_->add(a->coeff, b->coeff);
      if (c != 0) merged.push_back({a->key, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = ring_->neg(t.coeff);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  PolyBuilder out(*a.ring_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return out.build();
  out.reserve(a.terms_.size() * b.terms_.size());
  const CoeffRing& r = *a.ring_;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      out.add(s.key + t.key - kUnitKey, r.mul(s.coeff, t.coeff));
  return out.build();
}

Poly Poly::scaled(Code c) const {
  PolyBuilder out(*ring_, nvars_);
  for (const auto& t : terms_) out.add(t.key, ring_->mul(t.coeff, c));
  return out.build();
}

Poly Poly::times_monomial(const Monomial& m) const {
  if (m.size() != nvars_) raise(ErrorKind::ShapeError, "monomial variable count mismatch");
  PolyBuilder out(*ring_, nvars_);
  const auto mk = m.key();
  for (const auto& t : terms_) out.add(t.key + mk - kUnitKey, t.coeff);
  return out.build();
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(*ring_, nvars_, ring_->one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------- operations --

Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }

Poly partial_derivative(const Poly& f, std::size_t j) {
  if (j >= f.nvars()) raise(ErrorKind::ShapeError, "derivative variable out of range");
  const CoeffRing& r = f.ring();
  PolyBuilder out(r, f.nvars());
  const auto step = Monomial::Key{1} << shift_of(j);
  for (const auto& t : f.raw_terms()) {
    const int e = field_of(t.key, j);
    if (e == 0) continue;
    out.add(t.key - step, r.mul(t.coeff, r.from_int(e)));
  }
  return out.build();
}

Poly::Code coefficient_of(const Poly& f, const Monomial& m) { return f.coefficient_of(m); }

LowDecomposition low_decomposition(const Poly& f) {
  if (f.is_laurent())
    raise(ErrorKind::UnsupportedShape, "low decomposition needs nonnegative exponents");
  const CoeffRing& r = f.ring();
  const int p = static_cast<int>(r.p());
  const std::size_t n = f.nvars();
  PolyBuilder low(r, n);
  std::vector<PolyBuilder> g(n, PolyBuilder(r, n));
  for (const auto& t : f.raw_terms()) {
    std::size_t s = 0;
    while (s < n && field_of(t.key, s) < p) ++s;
    if (s == n) {
      low.add(t.key, t.coeff);
    } else {
      g[s].add(t.key - (static_cast<Monomial::Key>(p) << shift_of(s)), t.coeff);
    }
  }
  LowDecomposition out{low.build(), {}};
  for (auto& b : g) out.g.push_back(b.build());
  return out;
}

namespace {

template <typename Fn>
Poly map_coefficients(const Poly& f, const CoeffRing& target, Fn fn) {
  PolyBuilder out(target, f.nvars());
  out.reserve(f.num_terms());
  for (const auto& t : f.raw_terms()) out.add(t.key, fn(t.coeff));
  return out.build();
}

void require_kind(const Poly& f, RingKind kind, const char* what) {
  if (f.ring().kind() != kind)
    raise(ErrorKind::RingMismatch,
          std::string(what) + (kind == RingKind::W2 ? " expects a W2 polynomial"
                                                    : " expects an F_q polynomial"));
}

}  // namespace

Poly reduce_mod_p(const Poly& f) {
  require_kind(f, RingKind::W2, "reduce_mod_p");
  const CoeffRing& w = f.ring();
  return map_coefficients(f, w.residue_field(), [&](Poly::Code c) { return w.reduce(c); });
}

Poly teichmuller_lift(const Poly& f) {
  require_kind(f, RingKind::Fq, "teichmuller_lift");
  const CoeffRing& w = f.ring().witt_ring();
  return map_coefficients(f, w, [&](Poly::Code c) { return w.teichmuller(c); });
}

Poly times_p(const Poly& f) {
  require_kind(f, RingKind::Fq, "times_p");
  const CoeffRing& w = f.ring().witt_ring();
  return map_coefficients(f, w, [&](Poly::Code c) { return w.times_p(c); });
}

Poly divide_by_p(const Poly& f) {
  require_kind(f, RingKind::W2, "divide_by_p");
  const CoeffRing& w = f.ring();
  return map_coefficients(f, w.residue_field(), [&](Poly::Code c) {
    const auto d = w.divide_by_p(c);
    if (!d) raise(ErrorKind::NotDivisible, "coefficient " + w.format(c) + " is not divisible by p");
    return *d;
  });
}

Poly frobenius_coefficients(const Poly& f) {
  const CoeffRing& r = f.ring();
  return map_coefficients(f, r, [&](Poly::Code c) { return r.frobenius(c); });
}

Poly frobenius_power(const Poly& f) {
  require_kind(f, RingKind::Fq, "frobenius_power");
  const CoeffRing& r = f.ring();
  const int p = static_cast<int>(r.p());
  for (std::size_t j = 0; j < f.nvars(); ++j)
    if (f.degree_in(j) * p > kMaxExponent || f.min_degree_in(j) * p < -kMaxExponent)
      raise(ErrorKind::RangeError, "exponent overflow in p-th power");
  PolyBuilder out(r, f.nvars());
  for (const auto& t : f.raw_terms())
    out.add((t.key - kUnitKey) * static_cast<Monomial::Key>(p) + kUnitKey, r.frobenius(t.coeff));
  return out.build();
}

bool is_unit(const Poly& f) {
  const CoeffRing& r = f.ring();
  std::size_t leading = 0;
  for (const auto& t : f.raw_terms()) {
    const bool survives = r.is_field() ? true : r.reduce(t.coeff) != 0;
    if (survives) ++leading;
  }
  return leading == 1;
}

Poly invert_unit(const Poly& f) {
  if (!is_unit(f)) raise(ErrorKind::UnitError, "not a unit: " + to_string(f));
  const CoeffRing& r = f.ring();
  const std::size_t n = f.nvars();
  Poly::Term lead{};
  for (const auto& t : f.raw_terms())
    if (r.is_field() || r.reduce(t.coeff) != 0) lead = t;
  PolyBuilder b(r, n);
  b.add(2 * kUnitKey - lead.key, r.inv(lead.coeff));
  const Poly lead_inv = b.build();
  if (r.is_field()) return lead_inv;
  // f = L(1 + e) with e nilpotent of order two, so f^-1 = L^-1 - rest*L^-2.
  PolyBuilder rest(r, n);
  for (const auto& t : f.raw_terms())
    if (t.key != lead.key) rest.add(t.key, t.coeff);
  return lead_inv - rest.build() * lead_inv * lead_inv;
}

Poly compose(const Poly& f, std::span<const Poly> images, bool twist) {
  if (images.size() != f.nvars())
    raise(ErrorKind::ShapeError, "need one image per variable");
  const CoeffRing& r = f.ring();
  const std::size_t target_n = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (&img.ring() != &r) raise(ErrorKind::RingMismatch, "image over a different ring");
    if (img.nvars() != target_n) raise(ErrorKind::ShapeError, "images in different rings");
  }
  const std::size_t n = f.nvars();
  // powers[j][e - lo[j]] = images[j]^e
  std::vector<int> lo(n), hi(n);
  std::vector<std::vector<Poly>> powers(n);
  const Poly one = Poly::constant(r, target_n, r.one());
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = std::min(0, f.min_degree_in(j));
    hi[j] = std::max(0, f.degree_in(j));
    auto& row = powers[j];
    row.assign(static_cast<std::size_t>(hi[j] - lo[j] + 1), one);
    const std::size_t zero_at = static_cast<std::size_t>(-lo[j]);
    for (int e = 1; e <= hi[j]; ++e) row[zero_at + e] = row[zero_at + e - 1] * images[j];
    if (lo[j] < 0) {
      const Poly inv = invert_unit(images[j]);
      for (int e = 1; e <= -lo[j]; ++e) row[zero_at - e] = row[zero_at - e + 1] * inv;
    }
  }
  PolyBuilder out(r, target_n);
  for (const auto& t : f.raw_terms()) {
    const Poly::Code c = twist ? r.frobenius(t.coeff) : t.coeff;
    if (c == 0) continue;
    Poly term = Poly::constant(r, target_n, c);
    for (std::size_t j = 0; j < n; ++j) {
      const int e = field_of(t.key, j);
      if (e != 0) term = term * powers[j][static_cast<std::size_t>(e - lo[j])];
    }
    for (const auto& s : term.raw_terms()) out.add(s.key, s.coeff);
  }
  return out.build();
}

Poly remap_variables(const Poly& f, std::size_t new_nvars,
                     std::span<const std::size_t> var_map) {
  if (var_map.size() != f.nvars()) raise(ErrorKind::ShapeError, "var_map size mismatch");
  for (auto v : var_map)
    if (v >= new_nvars) raise(ErrorKind::ShapeError, "var_map target out of range");
  PolyBuilder out(f.ring(), new_nvars);
  for (const auto& t : f.raw_terms()) {
    std::array<int, kMaxVars> e{};
    for (std::size_t j = 0; j < f.nvars(); ++j) e[var_map[j]] += field_of(t.key, j);
    out.add(Monomial(std::span<const int>(e.data(), new_nvars)).key(), t.coeff);
  }
  return out.build();
}

}  // namespace frobw2
