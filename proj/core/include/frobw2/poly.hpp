#pragma once

// Sparse multivariate Laurent polynomials over a CoeffRing.
//
// Up to kMaxVars variables. Exponents are packed into one 64-bit key, 16
// biased bits per variable with variable 0 in the most significant field, so
// key order is lexicographic order on exponent vectors and monomial
// multiplication is integer addition of keys.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobw2/witt2.hpp"

namespace frobw2 {

inline constexpr std::size_t kMaxVars = 4;
inline constexpr int kMaxExponent = 16000;

class Monomial {
 public:
  using Key = std::uint64_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}
  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t j, int e = 1);

  std::size_t size() const noexcept { return n_; }
  int operator[](std::size_t j) const noexcept { return e_[j]; }
  int total_degree() const noexcept;
  bool has_negative() const noexcept;

  Key key() const noexcept;
  static Monomial from_key(Key key, std::size_t nvars) noexcept;
  static Key unit_key() noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<int, kMaxVars> e_{};
  std::size_t n_ = 0;
};

class Poly {
 public:
  using Code = CoeffRing::Code;
  struct Term {
    Monomial::Key key;
    Code coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero polynomial.
  Poly(const CoeffRing& ring, std::size_t nvars);

  static Poly constant(const CoeffRing& ring, std::size_t nvars, Code c);
  static Poly variable(const CoeffRing& ring, std::size_t nvars, std::size_t j);
  static Poly monomial(const CoeffRing& ring, const Monomial& m, Code c);
  /// Combines repeated monomials and drops zero coefficients.
  static Poly from_terms(const CoeffRing& ring, std::size_t nvars,
                         std::span<const std::pair<Monomial, Code>> terms);

  const CoeffRing& ring() const noexcept { return *ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  /// Sorted by increasing key; never contains a zero coefficient.
  std::span<const Term> raw_terms() const noexcept { return terms_; }
  std::vector<std::pair<Monomial, Code>> terms() const;

  Code coefficient_of(const Monomial& m) const;
  /// Highest / lowest exponent of variable j; 0 for the zero polynomial.
  int degree_in(std::size_t j) const noexcept;
  int min_degree_in(std::size_t j) const noexcept;
  int total_degree() const noexcept;
  bool is_laurent() const noexcept;
  bool is_constant() const noexcept;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly scaled(Code c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  friend class PolyBuilder;
  void check_compatible(const Poly& other) const;

  const CoeffRing* ring_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Accumulates terms and normalizes once; the workhorse behind products.
class PolyBuilder {
 public:
  PolyBuilder(const CoeffRing& ring, std::size_t nvars);
  void reserve(std::size_t n) { pending_.reserve(n); }
  void add(Monomial::Key key, Poly::Code c) {
    if (c != 0) pending_.push_back({key, c});
  }
  Poly build();

 private:
  const CoeffRing* ring_;
  std::size_t nvars_;
  std::vector<Poly::Term> pending_;
};

Poly poly_mul(const Poly& f, const Poly& g);
Poly partial_derivative(const Poly& f, std::size_t j);
Poly::Code coefficient_of(const Poly& f, const Monomial& m);

/// f = low + sum_s t_s^p * g[s] with every exponent of `low` in [0, p-1].
/// A monomial divisible by several t_s^p goes to the lowest such s.
struct LowDecomposition {
  Poly low;
  std::vector<Poly> g;
};
LowDecomposition low_decomposition(const Poly& f);

// Coefficientwise maps between W2(F_q)[x] and F_q[x].
Poly reduce_mod_p(const Poly& f);      // W2 -> F_q
Poly teichmuller_lift(const Poly& f);  // F_q -> W2, c -> (c, 0)
Poly times_p(const Poly& f);           // F_q -> W2, g -> p*g
Poly divide_by_p(const Poly& f);       // W2 -> F_q, throws NotDivisible
/// Applies the ring Frobenius to every coefficient.
Poly frobenius_coefficients(const Poly& f);
/// f^p over F_q, computed termwise (coefficients and exponents).
Poly frobenius_power(const Poly& f);

/// Units of a Laurent ring over F_q or W2(F_q): reduction mod p is a single
/// term with unit coefficient.
bool is_unit(const Poly& f);
Poly invert_unit(const Poly& f);

/// Ring homomorphism x_i -> images[i]; negative exponents use the inverse
/// of the image, which must then be a unit. With `twist` the coefficients
/// are passed through the ring Frobenius first.
Poly compose(const Poly& f, std::span<const Poly> images, bool twist = false);

/// Moves variable i of f to variable var_map[i] of a ring with new_nvars
/// variables.
Poly remap_variables(const Poly& f, std::size_t new_nvars,
                     std::span<const std::size_t> var_map);

std::vector<std::string> default_names(std::size_t nvars);
/// Terms `c*x1^e1*x2^-3`, highest key first, joined by " + ".
std::string to_string(const Poly& f, std::span<const std::string> names = {});
/// Inverse of to_string. Also accepts '-' between terms and omitted '*'.
Poly parse_poly(std::string_view text, const CoeffRing& ring,
                std::span<const std::string> names);
Poly parse_poly(std::string_view text, const CoeffRing& ring, std::size_t nvars);

/// Rectangular grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const Poly& fill);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  Poly& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  PolyMatrix transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Cofactor expansion; square matrices up to 4x4.
Poly determinant(const PolyMatrix& m);

}  // namespace frobw2
