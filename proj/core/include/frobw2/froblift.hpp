#pragma once

// Frobenius lifts on affine (Laurent) charts over W2(F_q), the eta calculus
// of differences between two lifts, and the dF/p matrix with its determinant.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frobw2/poly.hpp"

namespace frobw2 {

/// F(x_i) = x_i^p + p*f_i on F_q[x_1^(+-1), ..., x_n^(+-1)], where variable i
/// may carry negative exponents only if bit i of laurent_mask is set.
class AffineChartLift {
 public:
  const CoeffRing& field() const noexcept { return *field_; }
  const CoeffRing& witt() const noexcept { return field_->witt_ring(); }
  std::uint32_t p() const noexcept { return field_->p(); }
  std::size_t nvars() const noexcept { return nvars_; }
  unsigned laurent_mask() const noexcept { return mask_; }
  bool is_laurent(std::size_t j) const noexcept { return (mask_ >> j) & 1u; }
  const std::vector<Poly>& corrections() const noexcept { return corrections_; }
  /// x_i^p + p*f_i over W2(F_q).
  const std::vector<Poly>& images() const noexcept { return images_; }
  const Poly& image(std::size_t i) const { return images_.at(i); }

  friend AffineChartLift make_lift(const CoeffRing&, std::size_t, unsigned, std::vector<Poly>);

 private:
  AffineChartLift(const CoeffRing& field, std::size_t nvars, unsigned mask)
      : field_(&field), nvars_(nvars), mask_(mask) {}

  const CoeffRing* field_;
  std::size_t nvars_;
  unsigned mask_;
  std::vector<Poly> corrections_;
  std::vector<Poly> images_;
};

/// Validates the shape and precomputes the images. `field` must be an F_q
/// model; corrections must live in its polynomial ring on nvars variables.
AffineChartLift make_lift(const CoeffRing& field, std::size_t nvars, unsigned laurent_mask,
                          std::vector<Poly> corrections);
/// F(x_i) = x_i^p.
AffineChartLift standard_lift(const CoeffRing& field, std::size_t nvars,
                              unsigned laurent_mask = 0);
/// Same corrections, more inverted variables.
AffineChartLift localize(const AffineChartLift& F, unsigned extra_mask);

/// The W2-algebra endomorphism determined by F: coefficients go through the
/// Witt Frobenius, variables to their images.
Poly apply_lift(const AffineChartLift& F, const Poly& a);

/// Any candidate eta: F_q polynomial in, F_q polynomial out.
using EtaMap = std::function<Poly(const Poly&)>;

/// eta stored by its values on the generators and extended by additivity and
/// the twisted Leibniz rule: eta(a) = sum_i (d a / d x_i)^p * eta(x_i).
class EtaFunction {
 public:
  explicit EtaFunction(std::vector<Poly> generator_values);

  const std::vector<Poly>& generator_values() const noexcept { return values_; }
  bool is_zero() const noexcept;
  Poly operator()(const Poly& a) const;
  EtaMap as_map() const;

 private:
  std::vector<Poly> values_;
};

EtaFunction eta_between(const AffineChartLift& F1, const AffineChartLift& F2);

/// eta(a) = (F2(a~) - F1(a~)) / p with a~ the Teichmuller lift of a. Computed
/// from the two substitution homomorphisms, independently of EtaFunction.
EtaMap lift_difference_eta(const AffineChartLift& F1, const AffineChartLift& F2);

struct EtaCheck {
  bool additive = true;
  bool leibniz = true;
  bool ok() const noexcept { return additive && leibniz; }
  /// "a" and "b" of the failing pair, printed, when !ok().
  std::optional<std::pair<std::string, std::string>> witness;
};

/// eta(a+b) == eta(a)+eta(b) and eta(ab) == a^p eta(b) + b^p eta(a).
EtaCheck eta_axioms_check(const EtaMap& eta, const Poly& a, const Poly& b);

/// Diag(x_i^(p-1)) + (d f_i / d x_j), row i, column j, over F_q.
PolyMatrix phi_matrix(const AffineChartLift& F);
Poly phi_det(const AffineChartLift& F);
/// prod_i x_i^(p-1) in n variables.
Monomial phi_target_monomial(std::size_t nvars, std::uint32_t p);

struct MonomialLemmaResult {
  bool coefficient_zero = false;   // brute-force coefficient at the target is 0
  bool closed_form_matches = false;
  bool ok() const noexcept { return coefficient_zero && closed_form_matches; }
  Poly expanded;                   // det(d f_i / d t_j), i, j < m
  Poly closed_form;                // det(K) * prod t_j^(s_j)
};

/// K is m x n (row-major, m <= n <= 3, entries in [0, p-1]);
/// f_i = prod_j t_j^(K[i][j]); the determinant is taken over j < m.
MonomialLemmaResult monomial_lemma_check(const std::vector<std::vector<int>>& K,
                                         std::uint32_t p);

}  // namespace frobw2
