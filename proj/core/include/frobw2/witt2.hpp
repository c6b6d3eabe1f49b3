#pragma once

// Exact arithmetic in F_q, Z/p^2 and the length-two Witt ring W2(F_q).
//
// Elements of a coefficient ring are small integer codes. For F_q with
// q = p^m the code of c_0 + c_1 w + ... + c_{m-1} w^{m-1} is sum c_i p^i,
// where w is a root of the fixed modulus for that q. For W2(F_q) the code of
// the Witt vector (a0, a1) is code(a0) + q * code(a1).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobw2/error.hpp"

namespace frobw2 {

inline constexpr std::uint32_t kMaxPrime = 17;

bool is_prime(std::uint64_t n) noexcept;

/// A prime characteristic 2 <= p <= 17.
class PrimeChar {
 public:
  explicit PrimeChar(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  friend bool operator==(PrimeChar, PrimeChar) = default;

 private:
  std::uint32_t p_;
};

enum class RingKind { Fq, W2 };

/// Immutable table-driven model of F_q or W2(F_q). Instances live for the
/// whole program and are shared; compare rings by address.
class CoeffRing {
 public:
  using Code = std::uint16_t;
  static constexpr Code kNoCode = 0xFFFF;

  static const CoeffRing& fq(PrimeChar p, std::uint32_t m = 1);
  static const CoeffRing& fq(std::uint32_t p, std::uint32_t m = 1) {
    return fq(PrimeChar(p), m);
  }
  static const CoeffRing& w2(PrimeChar p, std::uint32_t m = 1);
  static const CoeffRing& w2(std::uint32_t p, std::uint32_t m = 1) {
    return w2(PrimeChar(p), m);
  }

  CoeffRing(const CoeffRing&) = delete;
  CoeffRing& operator=(const CoeffRing&) = delete;

  RingKind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ == RingKind::Fq; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  /// Size of the residue field.
  std::uint32_t q() const noexcept { return q_; }
  /// Number of elements of this ring (q or q^2).
  std::uint32_t size() const noexcept { return size_; }

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code add(Code a, Code b) const noexcept { return add_[a * size_ + b]; }
  Code mul(Code a, Code b) const noexcept { return mul_[a * size_ + b]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  bool is_unit(Code a) const noexcept { return inv_[a] != kNoCode; }
  /// Throws UnitError on non-units.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const noexcept;
  /// x -> x^p on F_q, (a0, a1) -> (a0^p, a1^p) on W2(F_q).
  Code frobenius(Code a) const noexcept { return frob_[a]; }
  /// Image of an integer under Z -> ring.
  Code from_int(std::int64_t n) const noexcept;
  bool valid(std::uint32_t code) const noexcept { return code < size_; }

  const CoeffRing& residue_field() const noexcept { return *residue_; }
  const CoeffRing& witt_ring() const noexcept { return *witt_; }

  // Maps between W2(F_q) and F_q. Arguments are codes of the ring named in
  // the function; calling them on the wrong kind throws RingMismatch.
  Code reduce(Code w2_code) const;           // (a0, a1) -> a0
  Code teichmuller(Code fq_code) const;      // c -> (c, 0)
  Code times_p(Code fq_code) const;          // c -> p * [c] = (0, c^p)
  std::optional<Code> divide_by_p(Code w2_code) const;  // inverse of times_p

  /// Canonical text: integers for F_p, Z/p^2 residues and field codes; a
  /// Witt tuple "(a0,a1)" for W2(F_q) with q > p.
  std::string format(Code a) const;
  /// Accepts everything format() produces plus signed integers.
  Code parse(std::string_view text) const;

 private:
  CoeffRing() = default;
  friend struct RingRegistry;

  static std::unique_ptr<CoeffRing> build_fq(std::uint32_t p, std::uint32_t m);
  static std::unique_ptr<CoeffRing> build_w2(const CoeffRing& fq);
  void fill_units_and_frobenius();

  RingKind kind_ = RingKind::Fq;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t size_ = 0;
  std::vector<Code> add_, mul_, neg_, inv_, frob_;
  // W2 only: residue-ring view for q == p.
  std::vector<std::uint32_t> to_residue_;
  std::vector<Code> from_residue_;
  const CoeffRing* residue_ = nullptr;
  const CoeffRing* witt_ = nullptr;
};

/// Element of F_q.
class FqElem {
 public:
  FqElem(const CoeffRing& field, std::uint32_t code);
  static FqElem from_int(const CoeffRing& field, std::int64_t n);

  const CoeffRing& field() const noexcept { return *field_; }
  CoeffRing::Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  FqElem pow(std::uint64_t e) const;
  FqElem inverse() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  friend bool operator==(const FqElem& a, const FqElem& b) noexcept {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  const CoeffRing* field_;
  CoeffRing::Code code_;
};

/// Residue in Z/p^2, kept in [0, p^2).
class Zp2Elem {
 public:
  Zp2Elem(PrimeChar p, std::int64_t n);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t rep() const noexcept { return rep_; }

  friend Zp2Elem operator+(Zp2Elem a, Zp2Elem b);
  friend Zp2Elem operator-(Zp2Elem a, Zp2Elem b);
  friend Zp2Elem operator*(Zp2Elem a, Zp2Elem b);
  friend bool operator==(Zp2Elem, Zp2Elem) = default;

 private:
  std::uint32_t p_;
  std::uint32_t rep_;
};

/// Element of W2(F_q) in Witt coordinates.
struct WittPair {
  FqElem a0;
  FqElem a1;

  WittPair(FqElem first, FqElem second);
  static WittPair zero(const CoeffRing& field);
  static WittPair one(const CoeffRing& field);

  const CoeffRing& field() const noexcept { return a0.field(); }
  friend bool operator==(const WittPair&, const WittPair&) = default;
};

WittPair witt_add(const WittPair& u, const WittPair& v);
WittPair witt_neg(const WittPair& u);
WittPair witt_mul(const WittPair& u, const WittPair& v);
WittPair witt_frobenius(const WittPair& u);
/// (a0, a1) -> a0^p + p*a1 in Z/p^2. Requires q == p.
Zp2Elem witt_to_residue_ring(const WittPair& u);
/// Inverse of witt_to_residue_ring.
WittPair residue_to_witt(const CoeffRing& field, Zp2Elem n);

/// Integer quotient C(p, i) / p for 0 < i < p.
std::uint64_t binomial_over_p(std::uint32_t p, std::uint32_t i);

/// Code conversion between a W2 ring and Witt pairs over its residue field.
WittPair to_witt(const CoeffRing& w2, CoeffRing::Code code);
CoeffRing::Code from_witt(const CoeffRing& w2, const WittPair& u);

/// "(a0,a1)@p^m".
std::string to_string(const WittPair& u);
WittPair parse_witt_pair(std::string_view text);

}  // namespace frobw2
