// Desk-scale acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "frobw2/classify.hpp"
#include "frobw2/curves.hpp"
#include "frobw2/projline.hpp"
#include "frobw2/random.hpp"
#include "frobw2/ruled.hpp"

using namespace frobw2;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string note;
  void expect(bool ok) {
    ++checked;
    if (!ok) ++failures;
  }
};

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<Tally()> run;
};

std::mt19937_64 engine(std::uint64_t stream, std::uint64_t index) {
  return trial_engine(trial_seed(kSeed, stream), index);
}

Tally witt_oracle() {
  Tally o;
  auto check = [&](std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    const CoeffRing& k = CoeffRing::fq(p);
    const WittPair u(FqElem(k, a % p), FqElem(k, a / p));
    const WittPair v(FqElem(k, b % p), FqElem(k, b / p));
    const Zp2Elem ru = witt_to_residue_ring(u), rv = witt_to_residue_ring(v);
    const std::int64_t nu = oracle::witt_value(p, a % p, a / p);
    const std::int64_t nv = oracle::witt_value(p, b % p, b / p);
    const std::int64_t pp = static_cast<std::int64_t>(p) * p;
    o.expect(ru.rep() == nu && rv.rep() == nv);
    o.expect(witt_to_residue_ring(witt_add(u, v)) == ru + rv &&
             witt_to_residue_ring(witt_add(u, v)).rep() == oracle::mod(nu + nv, pp));
    o.expect(witt_to_residue_ring(witt_mul(u, v)) == ru * rv &&
             witt_to_residue_ring(witt_mul(u, v)).rep() == oracle::mod(nu * nv, pp));
  };
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t a = 0; a < p * p; ++a)
      for (std::uint32_t b = 0; b < p * p; ++b) check(p, a, b);
  for (std::uint32_t p : {5u, 7u})
    for (std::uint64_t t = 0; t < 10000; ++t) {
      auto rng = engine(p, t);
      std::uniform_int_distribution<std::uint32_t> d(0, p * p - 1);
      const std::uint32_t a = d(rng);
      check(p, a, d(rng));
    }
  o.note = "pairs: exhaustive p=2,3; 10^4 random p=5,7";
  return o;
}

Tally determinant_core() {
  Tally o;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t t = 0; t < 500; ++t) {
        auto rng = engine(100 + p * 4 + n, t);
        const AffineChartLift F =
            random_lift(rng, CoeffRing::fq(p), n, RandomPolyShape{static_cast<int>(p), 8, 0, true});
        const Poly det = phi_det(F);
        o.expect(det.coefficient_of(phi_target_monomial(n, p)) == 1 && !det.is_zero());
      }
  o.note = "500 lifts per (p, n), p in {2,3,5}, n in {1,2,3}";
  return o;
}

Tally monomial_lemma() {
  Tally o;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint64_t t = 0; t < 1200; ++t) {
      auto rng = engine(200 + p, t);
      const std::size_t m = 1 + t % 3;
      const std::size_t n = m + (t / 3) % (4 - m);
      std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1);
      std::vector<std::vector<int>> K(m, std::vector<int>(n));
      for (auto& row : K)
        for (auto& e : row) e = d(rng);
      const auto r = monomial_lemma_check(K, p);
      o.expect(r.coefficient_zero && r.closed_form_matches);
    }
  o.note = "1200 exponent matrices per p, shapes 1x1 .. 3x3";
  return o;
}

Tally eta_calculus() {
  Tally o;
  for (std::uint64_t t = 0; t < 120; ++t) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[t % 3];
    const std::size_t n = 1 + t % 2;
    const CoeffRing& k = CoeffRing::fq(p);
    auto rng = engine(300, t);
    const unsigned mask = t % 4 == 3 ? 1u : 0u;
    const RandomPolyShape lift_shape{static_cast<int>(p), 4, mask, true};
    const AffineChartLift F1 = random_lift(rng, k, n, lift_shape);
    const AffineChartLift F2 = random_lift(rng, k, n, lift_shape);
    const EtaMap eta = lift_difference_eta(F1, F2);
    for (int s = 0; s < 100; ++s) {
      const RandomPolyShape el{3, 3, mask, true};
      const Poly a = random_poly(rng, k, n, el);
      const Poly b = random_poly(rng, k, n, el);
      o.expect(eta_axioms_check(eta, a, b).ok());
    }
  }
  o.note = "120 lift pairs x 100 element pairs";
  return o;
}

Tally p1_bound() {
  Tally o;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const CoeffRing& k = CoeffRing::fq(p);
    for (int d = 0; d <= 3 * static_cast<int>(p); ++d) {
      bool extended = true;
      try {
        extend_chart(standard_lift(k, 0), Poly::monomial(k, Monomial::variable(1, 0, d), 1));
      } catch (const Error& e) {
        extended = e.kind() != ErrorKind::DegreeTooHigh;
      }
      o.expect(extended == (d <= 2 * static_cast<int>(p)));
    }
    o.expect(lift_space_dimension(p) == 2 * static_cast<int>(p) + 1);
  }
  o.note = "x^d for d <= 3p, p in {2,3,5}, plus dimension counts";
  return o;
}

Tally ruled_lifts() {
  Tally o;
  std::ostringstream bad;
  for (std::uint32_t p : {2u, 3u}) {
    const CoeffRing& k = CoeffRing::fq(p);
    const std::vector<std::string> u{"u"};
    std::vector<std::pair<std::string, TransitionData>> cases;
    for (int n : {0, 2, 3}) cases.emplace_back("F" + std::to_string(n), hirzebruch(k, n));
    cases.emplace_back("A1", make_transition(ToricBase::A1, parse_poly("1", k, u), parse_poly("u", k, u)));
    cases.emplace_back("Gm", make_transition(ToricBase::Gm, parse_poly("u^2", k, u),
                                             parse_poly("u + u^-1", k, u)));
    for (const auto& [label, T] : cases) {
      const RuledLift L = build_standard_lift(T, standard_base_lift(T.base, k));
      const bool glued = verify_gluing(L).empty();
      const bool degree = L.h.degree_in(1) <= static_cast<int>(p);
      bool tails = true;
      for (const auto* chart : {&L.ux, &L.vy}) {
        for (const auto& tail : extract_base_lift(*chart).tails)
          tails = tails && tail.scaled(k.witt_ring().from_int(p)).is_zero();
      }
      const bool base = base_glue_consistency(L).ok;
      o.expect(glued && degree && tails && base);
      if (!(glued && degree && tails && base)) bad << " " << label << "@p=" << p;
    }
  }
  o.note = "F0, F2, F3, A1 (a=1, b=u), Gm (a=u^2, b=u+1/u) at p=2,3" + bad.str();
  return o;
}

Tally classification() {
  Tally o;
  // Table cells: type x {char 2, char 3, other}, each with all flags set.
  std::set<std::pair<char, int>> cells;
  for (const auto& row : golden_table()) {
    o.expect(classify_surface(row.descriptor) == row.expected);
    const auto& d = row.descriptor;
    if (d.cls == SurfaceClass::Hyperelliptic && *d.e0_ordinary && *d.e1_ordinary && *d.omega_trivial)
      cells.emplace(*d.type, d.p == 2 ? 0 : d.p == 3 ? 1 : 2);
  }
  o.expect(golden_table().size() >= 16);
  o.expect(cells.size() == 12);
  o.note = std::to_string(golden_table().size()) + " golden rows, " + std::to_string(cells.size()) +
           " of 12 hyperelliptic table cells";
  return o;
}

Tally ordinarity() {
  Tally o;
  std::uint64_t curves = 0;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto c = ordinarity_census(p);
    curves += c.nonsingular;
    o.checked += c.nonsingular;
    o.failures += c.mismatches;
  }
  o.note = std::to_string(curves) + " nonsingular short curves over F_5, F_7, F_11, F_13";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Witt ring matches Z/p^2", 2.0, witt_oracle},
      {2, "phi_F determinant: top coefficient 1, nonzero", 60.0, determinant_core},
      {3, "monomial determinant lemma", 60.0, monomial_lemma},
      {4, "eta additivity and twisted Leibniz", std::nullopt, eta_calculus},
      {5, "P^1 extension iff degree <= 2p", std::nullopt, p1_bound},
      {6, "ruled surface lifts glue", 30.0, ruled_lifts},
      {7, "classification golden table", std::nullopt, classification},
      {8, "Hasse invariant vs point count", 30.0, ordinarity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = !c.limit_seconds || secs < *c.limit_seconds;
    const bool pass = error.empty() && o.failures == 0 && o.checked > 0 && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s | %llu checks, %llu failures | %.3f s", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), static_cast<unsigned long long>(o.checked),
                static_cast<unsigned long long>(o.failures), secs);
    if (c.limit_seconds) std::printf(" (limit %.0f s)", *c.limit_seconds);
    if (!error.empty()) std::printf(" | error: %s", error.c_str());
    else std::printf(" | %s", o.note.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
