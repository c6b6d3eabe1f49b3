#include "doctest.h"

#include "../oracles.hpp"
#include "frobw2/random.hpp"
#include "frobw2/witt2.hpp"

using namespace frobw2;

namespace {

WittPair wp(const CoeffRing& k, std::uint32_t a0, std::uint32_t a1) {
  return WittPair(FqElem(k, a0), FqElem(k, a1));
}

}  // namespace

TEST_SUITE("witt2") {
  TEST_CASE("addition examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    const CoeffRing& f3 = CoeffRing::fq(3);
    CHECK(witt_add(wp(f2, 1, 0), wp(f2, 1, 0)) == wp(f2, 0, 1));
    CHECK(witt_add(wp(f3, 1, 0), wp(f3, 2, 0)) == wp(f3, 0, 0));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (std::uint32_t a0 = 0; a0 < p; ++a0)
        for (std::uint32_t a1 = 0; a1 < p; ++a1) {
          const WittPair u = wp(k, a0, a1);
          CHECK(witt_add(WittPair::zero(k), u) == u);
          CHECK(witt_mul(WittPair::one(k), u) == u);
        }
    }
  }

  TEST_CASE("multiplication examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    const CoeffRing& f3 = CoeffRing::fq(3);
    CHECK(witt_mul(wp(f2, 1, 1), wp(f2, 1, 1)) == wp(f2, 1, 0));
    CHECK(witt_mul(wp(f3, 2, 0), wp(f3, 2, 0)) == wp(f3, 1, 0));
  }

  TEST_CASE("frobenius examples") {
    const CoeffRing& f5 = CoeffRing::fq(5);
    for (std::uint32_t a0 = 0; a0 < 5; ++a0)
      for (std::uint32_t a1 = 0; a1 < 5; ++a1)
        CHECK(witt_frobenius(wp(f5, a0, a1)) == wp(f5, a0, a1));
    const CoeffRing& f4 = CoeffRing::fq(2, 2);
    // omega has code 2; the only quadratic over F_2 gives omega^2 = omega + 1.
    CHECK(witt_frobenius(wp(f4, 2, 0)) == wp(f4, 3, 0));
    CHECK(witt_frobenius(wp(f4, 0, 0)) == wp(f4, 0, 0));
  }

  TEST_CASE("residue map examples") {
    CHECK(witt_to_residue_ring(wp(CoeffRing::fq(2), 0, 1)).rep() == 2);
    CHECK(witt_to_residue_ring(wp(CoeffRing::fq(3), 1, 0)).rep() == 1);
    CHECK(witt_to_residue_ring(wp(CoeffRing::fq(5), 2, 3)).rep() == 22);
  }

  TEST_CASE("witt arithmetic agrees with integers mod p^2") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      const std::int64_t pp = static_cast<std::int64_t>(p) * p;
      for (std::uint32_t a = 0; a < p * p; a += (p > 7 ? 3 : 1))
        for (std::uint32_t b = 0; b < p * p; b += (p > 7 ? 5 : 1)) {
          const WittPair u = wp(k, a % p, a / p), v = wp(k, b % p, b / p);
          const std::int64_t nu = oracle::witt_value(p, a % p, a / p);
          const std::int64_t nv = oracle::witt_value(p, b % p, b / p);
          const auto s = oracle::witt_coords(p, nu + nv);
          const auto m = oracle::witt_coords(p, nu * nv);
          CHECK(witt_add(u, v) == wp(k, s.first, s.second));
          CHECK(witt_mul(u, v) == wp(k, m.first, m.second));
          CHECK(static_cast<std::int64_t>(witt_to_residue_ring(u).rep()) == oracle::mod(nu, pp));
        }
    }
  }

  TEST_CASE("residue map round trip") {
    for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (std::int64_t n = 0; n < static_cast<std::int64_t>(p) * p; ++n) {
        const Zp2Elem z(PrimeChar(p), n);
        CHECK(witt_to_residue_ring(residue_to_witt(k, z)) == z);
      }
    }
  }

  TEST_CASE("ring axioms over F_4, F_8, F_9") {
    for (auto [p, m] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
      const CoeffRing& k = CoeffRing::fq(p, m);
      const CoeffRing& w = k.witt_ring();
      for (std::uint64_t t = 0; t < 300; ++t) {
        auto rng = trial_engine(99 + p * 10 + m, t);
        std::uniform_int_distribution<std::uint32_t> d(0, w.size() - 1);
        const WittPair a = to_witt(w, d(rng)), b = to_witt(w, d(rng)), c = to_witt(w, d(rng));
        CHECK(witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c)));
        CHECK(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)));
        CHECK(witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)));
        CHECK(witt_frobenius(witt_mul(a, b)) == witt_mul(witt_frobenius(a), witt_frobenius(b)));
        CHECK(witt_frobenius(witt_add(a, b)) == witt_add(witt_frobenius(a), witt_frobenius(b)));
        CHECK(from_witt(w, a) < w.size());
      }
    }
  }

  TEST_CASE("coefficient ring tables match witt pairs") {
    const CoeffRing& w = CoeffRing::w2(3, 2);
    for (CoeffRing::Code a = 0; a < w.size(); a += 7)
      for (CoeffRing::Code b = 0; b < w.size(); b += 5) {
        CHECK(to_witt(w, w.add(a, b)) == witt_add(to_witt(w, a), to_witt(w, b)));
        CHECK(to_witt(w, w.mul(a, b)) == witt_mul(to_witt(w, a), to_witt(w, b)));
      }
  }

  TEST_CASE("p-torsion maps") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      const CoeffRing& w = k.witt_ring();
      for (CoeffRing::Code c = 0; c < k.size(); ++c) {
        const auto tp = w.times_p(c);
        CHECK(w.divide_by_p(tp) == std::optional<CoeffRing::Code>(c));
        CHECK(w.reduce(tp) == 0);
        CHECK(w.reduce(w.teichmuller(c)) == c);
        CHECK(w.mul(w.from_int(p), w.teichmuller(c)) == tp);
      }
      CHECK_FALSE(w.divide_by_p(w.one()).has_value());
    }
  }

  TEST_CASE("binomials over p") {
    CHECK(binomial_over_p(5, 1) == 1);
    CHECK(binomial_over_p(5, 2) == 2);
    CHECK(binomial_over_p(7, 3) == 5);
  }

  TEST_CASE("format and parse") {
    const CoeffRing& w = CoeffRing::w2(2, 2);
    for (CoeffRing::Code c = 0; c < w.size(); ++c) CHECK(w.parse(w.format(c)) == c);
    const CoeffRing& z9 = CoeffRing::w2(3);
    CHECK(z9.parse("-1") == z9.from_int(8));
    CHECK(z9.format(z9.from_int(7)) == "7");
    CHECK(parse_witt_pair(to_string(wp(CoeffRing::fq(3, 2), 4, 7))) == wp(CoeffRing::fq(3, 2), 4, 7));
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(PrimeChar(4), Error);
    CHECK_THROWS_AS(PrimeChar(19), Error);
    CHECK_THROWS_AS(CoeffRing::fq(5, 2), Error);
    CHECK_THROWS_AS(FqElem(CoeffRing::fq(3), 3), Error);
    CHECK_THROWS_AS(witt_add(wp(CoeffRing::fq(2), 0, 0), wp(CoeffRing::fq(3), 0, 0)), Error);
    CHECK_THROWS_AS(witt_to_residue_ring(wp(CoeffRing::fq(2, 2), 1, 0)), Error);
    CHECK_THROWS_AS(FqElem(CoeffRing::fq(3), 0).inverse(), Error);
    try {
      CoeffRing::fq(7, 2);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedField);
    }
  }
}
