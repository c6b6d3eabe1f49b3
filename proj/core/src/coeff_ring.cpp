#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "frobw2/witt2.hpp"

namespace frobw2 {

namespace {

// Conway polynomials, low-degree coefficient first, monic.
const std::vector<std::uint32_t>* conway_modulus(std::uint32_t p,
                                                 std::uint32_t m) {
  static const std::vector<std::uint32_t> f4 = {1, 1, 1};     // x^2+x+1
  static const std::vector<std::uint32_t> f8 = {1, 1, 0, 1};  // x^3+x+1
  static const std::vector<std::uint32_t> f9 = {2, 2, 1};     // x^2+2x+2
  if (p == 2 && m == 2) return &f4;
  if (p == 2 && m == 3) return &f8;
  if (p == 3 && m == 2) return &f9;
  return nullptr;
}

std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t p,
                                     std::uint32_t m) {
  std::vector<std::uint32_t> d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

struct RingRegistry {
  // Fields and their Witt rings are built together and linked both ways
  // before either becomes visible.
  static const CoeffRing& get(RingKind kind, std::uint32_t p, std::uint32_t m) {
    static std::mutex mu;
    static std::map<std::tuple<RingKind, std::uint32_t, std::uint32_t>,
                    std::unique_ptr<CoeffRing>>
        rings;
    std::lock_guard lock(mu);
    auto it = rings.find({kind, p, m});
    if (it != rings.end()) return *it->second;
    auto field = CoeffRing::build_fq(p, m);
    auto witt = CoeffRing::build_w2(*field);
    field->witt_ = witt.get();
    const CoeffRing& result = kind == RingKind::Fq ? *field : *witt;
    rings.emplace(std::tuple{RingKind::Fq, p, m}, std::move(field));
    rings.emplace(std::tuple{RingKind::W2, p, m}, std::move(witt));
    return result;
  }
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeChar::PrimeChar(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime)
    raise(ErrorKind::RangeError,
          "characteristic must be a prime <= " + std::to_string(kMaxPrime) +
              ", got " + std::to_string(p));
}

const CoeffRing& CoeffRing::fq(PrimeChar p, std::uint32_t m) {
  return RingRegistry::get(RingKind::Fq, p.value(), m);
}

const CoeffRing& CoeffRing::w2(PrimeChar p, std::uint32_t m) {
  return RingRegistry::get(RingKind::W2, p.value(), m);
}

std::unique_ptr<CoeffRing> CoeffRing::build_fq(std::uint32_t p, std::uint32_t m) {
  const std::vector<std::uint32_t>* modulus = nullptr;
  if (m == 0)
    raise(ErrorKind::UnsupportedField, "extension degree must be positive");
  if (m > 1) {
    modulus = conway_modulus(p, m);
    if (modulus == nullptr)
      raise(ErrorKind::UnsupportedField,
            "no modulus for F_" + std::to_string(p) + "^" + std::to_string(m) +
                " (supported: q = p, 4, 8, 9)");
  }
  std::unique_ptr<CoeffRing> r(new CoeffRing());
  r->kind_ = RingKind::Fq;
  r->p_ = p;
  r->m_ = m;
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  r->q_ = q;
  r->size_ = q;
  r->add_.resize(q * q);
  r->mul_.resize(q * q);
  r->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits_of(a, p, m);
    std::vector<std::uint32_t> dn(m);
    for (std::uint32_t i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    r->neg_[a] = static_cast<Code>(code_of(dn, p));
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits_of(b, p, m);
      std::vector<std::uint32_t> ds(m);
      for (std::uint32_t i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
      r->add_[a * q + b] = static_cast<Code>(code_of(ds, p));
      // Schoolbook product, then reduce by the monic modulus.
      std::vector<std::uint32_t> prod(2 * m - 1, 0);
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::uint32_t k = 2 * m - 1; k-- > m;) {
        const std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < m; ++i)
          prod[k - m + i] = (prod[k - m + i] + (p - c) * (*modulus)[i]) % p;
      }
      prod.resize(m);
      r->mul_[a * q + b] = static_cast<Code>(code_of(prod, p));
    }
  }
  r->fill_units_and_frobenius();
  r->residue_ = r.get();
  return r;
}

std::unique_ptr<CoeffRing> CoeffRing::build_w2(const CoeffRing& fq) {
  std::unique_ptr<CoeffRing> r(new CoeffRing());
  r->kind_ = RingKind::W2;
  r->p_ = fq.p_;
  r->m_ = fq.m_;
  r->q_ = fq.q_;
  const std::uint32_t q = fq.q_;
  const std::uint32_t n = q * q;
  r->size_ = n;
  r->residue_ = &fq;
  r->witt_ = r.get();
  r->add_.resize(n * n);
  r->mul_.resize(n * n);
  r->neg_.resize(n);
  auto pair_of = [&](std::uint32_t c) {
    return WittPair(FqElem(fq, c % q), FqElem(fq, c / q));
  };
  auto code_of_pair = [&](const WittPair& w) {
    return static_cast<Code>(w.a0.code() + q * w.a1.code());
  };
  std::vector<WittPair> pairs;
  pairs.reserve(n);
  for (std::uint32_t c = 0; c < n; ++c) pairs.push_back(pair_of(c));
  for (std::uint32_t a = 0; a < n; ++a) {
    r->neg_[a] = code_of_pair(witt_neg(pairs[a]));
    for (std::uint32_t b = 0; b < n; ++b) {
      r->add_[a * n + b] = code_of_pair(witt_add(pairs[a], pairs[b]));
      r->mul_[a * n + b] = code_of_pair(witt_mul(pairs[a], pairs[b]));
    }
  }
  r->fill_units_and_frobenius();
  r->frob_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a)
    r->frob_[a] = code_of_pair(witt_frobenius(pairs[a]));
  if (q == fq.p_) {
    const std::uint32_t p2 = q * q;
    r->to_residue_.resize(n);
    r->from_residue_.assign(p2, kNoCode);
    for (std::uint32_t a = 0; a < n; ++a) {
      const std::uint32_t res = witt_to_residue_ring(pairs[a]).rep();
      r->to_residue_[a] = res;
      r->from_residue_[res] = static_cast<Code>(a);
    }
  }
  return r;
}

void CoeffRing::fill_units_and_frobenius() {
  inv_.assign(size_, kNoCode);
  for (std::uint32_t a = 0; a < size_; ++a) {
    for (std::uint32_t b = 0; b < size_; ++b) {
      if (mul_[a * size_ + b] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }
    }
  }
  frob_.resize(size_);
  for (std::uint32_t a = 0; a < size_; ++a)
    frob_[a] = pow(static_cast<Code>(a), p_);
}

CoeffRing::Code CoeffRing::inv(Code a) const {
  if (!is_unit(a)) raise(ErrorKind::UnitError, format(a) + " is not a unit");
  return inv_[a];
}

CoeffRing::Code CoeffRing::pow(Code a, std::uint64_t e) const noexcept {
  Code result = one();
  Code base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

CoeffRing::Code CoeffRing::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = p_;
  if (kind_ == RingKind::Fq) return static_cast<Code>(((n % p) + p) % p);
  const std::int64_t p2 = p * p;
  const std::int64_t r = ((n % p2) + p2) % p2;
  const std::int64_t a0 = r % p;
  std::int64_t a0p = 1;
  for (std::uint32_t i = 0; i < p_; ++i) a0p = (a0p * a0) % p2;
  const std::int64_t a1 = (((r - a0p) % p2 + p2) % p2) / p;
  return static_cast<Code>(a0 + q_ * a1);
}

CoeffRing::Code CoeffRing::reduce(Code a) const {
  if (kind_ != RingKind::W2) raise(ErrorKind::RingMismatch, "reduce expects W2");
  return static_cast<Code>(a % q_);
}

CoeffRing::Code CoeffRing::teichmuller(Code c) const {
  if (kind_ != RingKind::W2) raise(ErrorKind::RingMismatch, "teichmuller expects W2");
  return c;
}

CoeffRing::Code CoeffRing::times_p(Code c) const {
  if (kind_ != RingKind::W2) raise(ErrorKind::RingMismatch, "times_p expects W2");
  return static_cast<Code>(q_ * residue_->frobenius(c));
}

std::optional<CoeffRing::Code> CoeffRing::divide_by_p(Code a) const {
  if (kind_ != RingKind::W2) raise(ErrorKind::RingMismatch, "divide_by_p expects W2");
  if (a % q_ != 0) return std::nullopt;
  // p-th root in F_q: x -> x^(q/p).
  return residue_->pow(static_cast<Code>(a / q_), q_ / p_);
}

std::string CoeffRing::format(Code a) const {
  if (kind_ == RingKind::Fq) return std::to_string(a);
  if (q_ == p_) return std::to_string(to_residue_[a]);
  return "(" + std::to_string(a % q_) + "," + std::to_string(a / q_) + ")";
}

CoeffRing::Code CoeffRing::parse(std::string_view text) const {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (kind_ != RingKind::W2 || text.back() != ')')
      raise(ErrorKind::ParseError, "unexpected Witt tuple '" + std::string(text) + "'");
    const auto inner = text.substr(1, text.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos)
      raise(ErrorKind::ParseError, "Witt tuple needs two entries");
    const std::int64_t a0 = parse_int(inner.substr(0, comma));
    const std::int64_t a1 = parse_int(inner.substr(comma + 1));
    if (a0 < 0 || a1 < 0 || a0 >= q_ || a1 >= q_)
      raise(ErrorKind::ParseError, "Witt coordinate out of range");
    return static_cast<Code>(a0 + q_ * a1);
  }
  const std::int64_t n = parse_int(text);
  if (n < 0) return neg(parse(std::to_string(-n)));
  if (kind_ == RingKind::Fq && n < q_) return static_cast<Code>(n);
  return from_int(n);
}

}  // namespace frobw2
