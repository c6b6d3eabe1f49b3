#include "frobw2/witt2.hpp"

#include <charconv>
#include <regex>

namespace frobw2 {

namespace {

void require_same_field(const CoeffRing& a, const CoeffRing& b) {
  if (&a != &b)
    raise(ErrorKind::CharMismatch,
          "operands over F_" + std::to_string(a.q()) + " and F_" +
              std::to_string(b.q()));
}

}  // namespace

// ---------------------------------------------------------------- FqElem --

FqElem::FqElem(const CoeffRing& field, std::uint32_t code)
    : field_(&field), code_(static_cast<CoeffRing::Code>(code)) {
  if (!field.is_field())
    raise(ErrorKind::RingMismatch, "FqElem needs a field model");
  if (!field.valid(code))
    raise(ErrorKind::RangeError, "code " + std::to_string(code) +
                                     " outside F_" + std::to_string(field.q()));
}

FqElem FqElem::from_int(const CoeffRing& field, std::int64_t n) {
  return FqElem(field, field.from_int(n));
}

FqElem FqElem::pow(std::uint64_t e) const {
  return FqElem(*field_, field_->pow(code_, e));
}

FqElem FqElem::inverse() const { return FqElem(*field_, field_->inv(code_)); }

FqElem operator+(const FqElem& a, const FqElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FqElem(*a.field_, a.field_->add(a.code_, b.code_));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FqElem(*a.field_, a.field_->sub(a.code_, b.code_));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FqElem(*a.field_, a.field_->mul(a.code_, b.code_));
}

FqElem operator/(const FqElem& a, const FqElem& b) {
  return a * b.inverse();
}

FqElem FqElem::operator-() const { return FqElem(*field_, field_->neg(code_)); }

// --------------------------------------------------------------- Zp2Elem --

Zp2Elem::Zp2Elem(PrimeChar p, std::int64_t n) : p_(p.value()) {
  const std::int64_t p2 = static_cast<std::int64_t>(p_) * p_;
  rep_ = static_cast<std::uint32_t>(((n % p2) + p2) % p2);
}

Zp2Elem operator+(Zp2Elem a, Zp2Elem b) {
  if (a.p_ != b.p_) raise(ErrorKind::CharMismatch, "Z/p^2 operands differ in p");
  return Zp2Elem(PrimeChar(a.p_), std::int64_t{a.rep_} + b.rep_);
}

Zp2Elem operator-(Zp2Elem a, Zp2Elem b) {
  if (a.p_ != b.p_) raise(ErrorKind::CharMismatch, "Z/p^2 operands differ in p");
  return Zp2Elem(PrimeChar(a.p_), std::int64_t{a.rep_} - b.rep_);
}

Zp2Elem operator*(Zp2Elem a, Zp2Elem b) {
  if (a.p_ != b.p_) raise(ErrorKind::CharMismatch, "Z/p^2 operands differ in p");
  return Zp2Elem(PrimeChar(a.p_), std::int64_t{a.rep_} * b.rep_);
}

// -------------------------------------------------------------- WittPair --

WittPair::WittPair(FqElem first, FqElem second) : a0(first), a1(second) {
  require_same_field(a0.field(), a1.field());
}

WittPair WittPair::zero(const CoeffRing& field) {
  return WittPair(FqElem(field, 0), FqElem(field, 0));
}

WittPair WittPair::one(const CoeffRing& field) {
  return WittPair(FqElem(field, 1), FqElem(field, 0));
}

std::uint64_t binomial_over_p(std::uint32_t p, std::uint32_t i) {
  if (i == 0 || i >= p) raise(ErrorKind::RangeError, "binomial index out of (0, p)");
  std::uint64_t c = 1;
  for (std::uint32_t k = 1; k <= i; ++k) c = c * (p - k + 1) / k;
  return c / p;
}

// Sum of Witt vectors of length two: the ghost-component identity
// (a0 + b0)^p + p*s1 = a0^p + b0^p + p*(a1 + b1) gives
// s1 = a1 + b1 - sum_{0<i<p} (C(p,i)/p) a0^i b0^(p-i).
WittPair witt_add(const WittPair& u, const WittPair& v) {
  require_same_field(u.field(), v.field());
  const CoeffRing& f = u.field();
  const std::uint32_t p = f.p();
  FqElem carry(f, 0);
  for (std::uint32_t i = 1; i < p; ++i) {
    const FqElem coeff = FqElem::from_int(f, static_cast<std::int64_t>(
                                                 binomial_over_p(p, i) % p));
    carry = carry + coeff * u.a0.pow(i) * v.a0.pow(p - i);
  }
  return WittPair(u.a0 + v.a0, u.a1 + v.a1 - carry);
}

WittPair witt_neg(const WittPair& u) {
  if (u.field().p() == 2) {
    // -(a0, a1) = (a0, a1 + a0^2) in characteristic 2.
    return WittPair(u.a0, u.a1 + u.a0 * u.a0);
  }
  return WittPair(-u.a0, -u.a1);
}

// The p*a1*b1 term of the product vanishes in W2 of a perfect field of
// characteristic p.
WittPair witt_mul(const WittPair& u, const WittPair& v) {
  require_same_field(u.field(), v.field());
  const std::uint32_t p = u.field().p();
  return WittPair(u.a0 * v.a0, u.a0.pow(p) * v.a1 + v.a0.pow(p) * u.a1);
}

WittPair witt_frobenius(const WittPair& u) {
  const std::uint32_t p = u.field().p();
  return WittPair(u.a0.pow(p), u.a1.pow(p));
}

Zp2Elem witt_to_residue_ring(const WittPair& u) {
  const CoeffRing& f = u.field();
  if (f.q() != f.p())
    raise(ErrorKind::UnsupportedField,
          "residue-ring model needs q = p, got q = " + std::to_string(f.q()));
  const PrimeChar p(f.p());
  Zp2Elem lead(p, 1);
  for (std::uint32_t i = 0; i < f.p(); ++i) lead = lead * Zp2Elem(p, u.a0.code());
  return lead + Zp2Elem(p, std::int64_t{f.p()} * u.a1.code());
}

WittPair residue_to_witt(const CoeffRing& field, Zp2Elem n) {
  if (field.q() != field.p() || !field.is_field())
    raise(ErrorKind::UnsupportedField, "residue-ring model needs q = p");
  if (n.p() != field.p()) raise(ErrorKind::CharMismatch, "residue p differs from field p");
  const PrimeChar p(field.p());
  const std::uint32_t a0 = n.rep() % field.p();
  Zp2Elem lead(p, 1);
  for (std::uint32_t i = 0; i < field.p(); ++i) lead = lead * Zp2Elem(p, a0);
  const std::uint32_t a1 = (n - lead).rep() / field.p();
  return WittPair(FqElem(field, a0), FqElem(field, a1));
}

WittPair to_witt(const CoeffRing& w2, CoeffRing::Code code) {
  if (w2.kind() != RingKind::W2) raise(ErrorKind::RingMismatch, "to_witt expects W2");
  const CoeffRing& f = w2.residue_field();
  return WittPair(FqElem(f, code % f.q()), FqElem(f, code / f.q()));
}

CoeffRing::Code from_witt(const CoeffRing& w2, const WittPair& u) {
  if (w2.kind() != RingKind::W2) raise(ErrorKind::RingMismatch, "from_witt expects W2");
  require_same_field(w2.residue_field(), u.field());
  return static_cast<CoeffRing::Code>(u.a0.code() + w2.q() * u.a1.code());
}

std::string to_string(const WittPair& u) {
  return "(" + std::to_string(u.a0.code()) + "," + std::to_string(u.a1.code()) +
         ")@" + std::to_string(u.field().p()) + "^" + std::to_string(u.field().m());
}

WittPair parse_witt_pair(std::string_view text) {
  static const std::regex re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*@\s*(\d+)\s*\^\s*(\d+)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    raise(ErrorKind::ParseError, "expected (a0,a1)@p^m, got '" + std::string(text) + "'");
  auto num = [&](int i) { return static_cast<std::uint32_t>(std::stoul(m[i].str())); };
  const CoeffRing& field = CoeffRing::fq(num(3), num(4));
  return WittPair(FqElem(field, num(1)), FqElem(field, num(2)));
}

}  // namespace frobw2
