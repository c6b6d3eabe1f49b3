#include "doctest.h"

#include "../oracles.hpp"
#include "frobw2/projline.hpp"
#include "frobw2/random.hpp"

using namespace frobw2;

namespace {

Poly P(std::string_view s, const CoeffRing& r, std::size_t n) { return parse_poly(s, r, n); }

}  // namespace

TEST_SUITE("projline") {
  TEST_CASE("extension examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    const AffineChartLift point = standard_lift(f2, 0);
    CHECK(extend_chart(point, Poly(f2, 1)).is_zero());
    const Poly g = extend_chart(point, P("x1^4", f2, 1));
    CHECK(P("x1^2", f2.witt_ring(), 1) + times_p(g) == P("x1^2 + 2", f2.witt_ring(), 1));
    try {
      extend_chart(point, P("x1^5", f2, 1));
      FAIL("expected DegreeTooHigh");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegreeTooHigh);
    }
  }

  TEST_CASE("extension over a point matches coefficient reversal") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (std::uint64_t t = 0; t < 50; ++t) {
        auto rng = trial_engine(1600 + p, t);
        const Poly f = random_poly(rng, k, 1, RandomPolyShape{2 * static_cast<int>(p), 6, 0, false});
        const Poly g = extend_chart(standard_lift(k, 0), f);
        PolyBuilder expect(k, 1);
        for (const auto& [m, c] : f.terms())
          expect.add(Monomial::variable(1, 0, 2 * static_cast<int>(p) - m[0]).key(), k.neg(c));
        CHECK(g == expect.build());
      }
    }
  }

  TEST_CASE("verify examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    CHECK(verify_p1_lift(P1Lift{standard_lift(f2, 0), Poly(f2, 1)}).ok);
    CHECK(verify_p1_lift(P1Lift{standard_lift(f2, 0), P("x1^4", f2, 1)}).ok);
  }

  TEST_CASE("random corrections of degree at most 2p verify") {
    const CoeffRing& k = CoeffRing::fq(3);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_engine(1700, t);
      const Poly f = random_poly(rng, k, 1, RandomPolyShape{6, 5, 0, false});
      const P1Check chk = verify_p1_lift(P1Lift{standard_lift(k, 0), f});
      CHECK_MESSAGE(chk.ok, to_string(f) << " " << chk.failing_chart << " " << chk.detail);
    }
  }

  TEST_CASE("random lifts over a one-dimensional base verify") {
    for (std::uint32_t p : {2u, 3u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (std::uint64_t t = 0; t < 40; ++t) {
        auto rng = trial_engine(1800 + p, t);
        const unsigned mask = t % 2;
        const AffineChartLift base = random_lift(rng, k, 1, RandomPolyShape{static_cast<int>(p), 3, mask, false});
        PolyBuilder fb(k, 2);
        std::uniform_int_distribution<int> dx(0, 2 * static_cast<int>(p)), du(mask ? -2 : 0, 2);
        for (int i = 0; i < 4; ++i) fb.add(Monomial{du(rng), dx(rng)}.key(), 1);
        const P1Lift L{base, fb.build()};
        const P1Check chk = verify_p1_lift(L);
        CHECK_MESSAGE(chk.ok, to_string(L.f) << " " << chk.failing_chart << " " << chk.detail);
      }
    }
  }

  TEST_CASE("fiber chart lift keeps the base") {
    const CoeffRing& k = CoeffRing::fq(3);
    const AffineChartLift base = make_lift(k, 1, 0, {P("x1^2", k, 1)});
    const AffineChartLift F = fiber_chart_lift(base, P("x1*x2", k, 2));
    CHECK(F.nvars() == 2);
    CHECK(F.corrections()[0] == P("x1^2", k, 2));
    CHECK(F.corrections()[1] == P("x1*x2", k, 2));
  }

  TEST_CASE("degree bound in both directions") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (int d = 0; d <= 3 * static_cast<int>(p); ++d) {
        const Poly f = Poly::monomial(k, Monomial::variable(1, 0, d), 1);
        if (d <= 2 * static_cast<int>(p)) {
          CHECK_NOTHROW(extend_chart(standard_lift(k, 0), f));
        } else {
          CHECK_THROWS_AS(extend_chart(standard_lift(k, 0), f), Error);
        }
      }
    }
    CHECK(lift_space_dimension(2) == 5);
    CHECK(lift_space_dimension(3) == 7);
    CHECK(lift_space_dimension(5) == 11);
  }

  TEST_CASE("base variables may have high degree") {
    const CoeffRing& k = CoeffRing::fq(2);
    const AffineChartLift base = standard_lift(k, 1);
    CHECK_NOTHROW(extend_chart(base, P("x1^9*x2^4", k, 2)));
    CHECK_THROWS_AS(extend_chart(base, P("x1*x2^5", k, 2)), Error);
  }
}
