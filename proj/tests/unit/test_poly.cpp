#include "doctest.h"

#include "../oracles.hpp"
#include "frobw2/random.hpp"

using namespace frobw2;

namespace {

Poly P(std::string_view s, const CoeffRing& r, std::size_t n) { return parse_poly(s, r, n); }

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("multiplication examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    CHECK(P("x1 + 1", f2, 1) * P("x1 + 1", f2, 1) == P("x1^2 + 1", f2, 1));
    const Poly f = P("x1^2*x2 + x2^3 + 1", f2, 2);
    CHECK(f * Poly::constant(f2, 2, 1) == f);
    CHECK(P("x1", f2, 1) * P("x1^-1", f2, 1) == Poly::constant(f2, 1, 1));
  }

  TEST_CASE("multiplication agrees with dense integer oracle") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const CoeffRing& w = CoeffRing::w2(p);
      const std::int64_t m = static_cast<std::int64_t>(p) * p;
      for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = trial_engine(1234 + p, t);
        const RandomPolyShape shape{4, 8, 0b01, false};
        const Poly f = random_poly(rng, w, 2, shape);
        const Poly g = random_poly(rng, w, 2, shape);
        CHECK(oracle::dense_of(f * g) == oracle::dense_mul(oracle::dense_of(f), oracle::dense_of(g), m));
        CHECK(oracle::dense_of(f - g) == oracle::dense_add(oracle::dense_of(f), oracle::dense_of(g), m, -1));
      }
    }
  }

  TEST_CASE("ring laws on random polynomials") {
    const CoeffRing& w = CoeffRing::w2(3, 2);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_engine(77, t);
      const RandomPolyShape shape{3, 5, 0b10, false};
      const Poly a = random_poly(rng, w, 2, shape), b = random_poly(rng, w, 2, shape),
                 c = random_poly(rng, w, 2, shape);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == Poly(w, 2));
      CHECK(a.pow(3) == a * a * a);
    }
  }

  TEST_CASE("partial derivative examples") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      CHECK(partial_derivative(Poly::monomial(k, Monomial::variable(1, 0, p), 1), 0).is_zero());
    }
    const CoeffRing& f3 = CoeffRing::fq(3);
    CHECK(partial_derivative(P("x1^2*x2", f3, 2), 0) == P("2*x1*x2", f3, 2));
    CHECK(partial_derivative(P("x1^-1", f3, 1), 0) == P("2*x1^-2", f3, 1));
  }

  TEST_CASE("determinant examples") {
    const CoeffRing& f3 = CoeffRing::fq(3);
    const PolyMatrix M(2, 2, {P("2*x1*x2", f3, 2), P("x1^2", f3, 2), P("x2^2", f3, 2), P("2*x1*x2", f3, 2)});
    CHECK(determinant(M).is_zero());
    const CoeffRing& f2 = CoeffRing::fq(2);
    const PolyMatrix I(3, 3, {P("1", f2, 3), P("0", f2, 3), P("0", f2, 3), P("0", f2, 3), P("1", f2, 3),
                              P("0", f2, 3), P("0", f2, 3), P("0", f2, 3), P("1", f2, 3)});
    CHECK(determinant(I) == Poly::constant(f2, 3, 1));
    const PolyMatrix D(2, 2, {P("x1^2", f3, 2), P("0", f3, 2), P("0", f3, 2), P("x2^2", f3, 2)});
    CHECK(determinant(D) == P("x1^2*x2^2", f3, 2));
    const PolyMatrix E(2, 2, {P("x1", f2, 2), P("1", f2, 2), P("1", f2, 2), P("x2", f2, 2)});
    const Poly e = determinant(E);
    CHECK(e.coefficient_of(Monomial{1, 1}) == 1);
    CHECK(e == P("x1*x2 + 1", f2, 2));
  }

  TEST_CASE("determinant agrees with Leibniz formula") {
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const CoeffRing& w = CoeffRing::w2(p);
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t t = 0; t < 30; ++t) {
          auto rng = trial_engine(555 + p * 7 + n, t);
          std::vector<Poly> entries;
          for (std::size_t i = 0; i < n * n; ++i)
            entries.push_back(random_poly(rng, w, 2, RandomPolyShape{2, 3, 0b01, false}));
          const PolyMatrix M(n, n, entries);
          CHECK(determinant(M) == oracle::leibniz_det(M));
          CHECK(determinant(M.transposed()) == determinant(M));
        }
    }
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, Poly(CoeffRing::fq(2), 1))), Error);
    CHECK_THROWS_AS(determinant(PolyMatrix(5, 5, Poly(CoeffRing::fq(2), 1))), Error);
  }

  TEST_CASE("coefficient extraction") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    CHECK(P("x1 + 1", f2, 1).coefficient_of(Monomial{1}) == 1);
    CHECK(P("x1^2 + x2^2", f2, 2).coefficient_of(Monomial{1, 1}) == 0);
  }

  TEST_CASE("low decomposition examples") {
    const CoeffRing& f2 = CoeffRing::fq(2);
    auto d = low_decomposition(P("x1^3", f2, 1));
    CHECK(d.low.is_zero());
    CHECK(d.g[0] == P("x1", f2, 1));
    d = low_decomposition(P("x1^2*x2^2", f2, 2));
    CHECK(d.low.is_zero());
    CHECK(d.g[0] == P("x2^2", f2, 2));
    CHECK(d.g[1].is_zero());
    const CoeffRing& f5 = CoeffRing::fq(5);
    const Poly f = P("x1^4*x2^3 + 2*x1 + x3^4", f5, 3);
    d = low_decomposition(f);
    CHECK(d.low == f);
    for (const auto& g : d.g) CHECK(g.is_zero());
  }

  TEST_CASE("low decomposition reassembles") {
    const CoeffRing& k = CoeffRing::fq(3);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_engine(31, t);
      const Poly f = random_poly(rng, k, 3, RandomPolyShape{7, 8, 0, false});
      const auto d = low_decomposition(f);
      Poly sum = d.low;
      for (std::size_t s = 0; s < 3; ++s) {
        sum += d.g[s].times_monomial(Monomial::variable(3, s, 3));
      }
      CHECK(sum == f);
      for (const auto& [m, c] : d.low.terms())
        for (std::size_t j = 0; j < 3; ++j) CHECK(m[j] < 3);
    }
  }

  TEST_CASE("reduction and division by p") {
    const CoeffRing& z4 = CoeffRing::w2(2);
    const CoeffRing& f2 = CoeffRing::fq(2);
    CHECK(reduce_mod_p(P("3*x1 + 2", z4, 1)) == P("x1", f2, 1));
    CHECK(reduce_mod_p(Poly(z4, 1)) == Poly(f2, 1));
    CHECK(reduce_mod_p(P("9*x1^5", CoeffRing::w2(3), 1)).is_zero());
    CHECK(divide_by_p(P("2 + 2*x1", z4, 1)) == P("1 + x1", f2, 1));
    CHECK(divide_by_p(Poly(z4, 1)).is_zero());
    try {
      divide_by_p(P("1 + 2*x1", z4, 1));
      FAIL("expected NotDivisible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDivisible);
    }
  }

  TEST_CASE("p-torsion identities on random polynomials") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const CoeffRing& k = CoeffRing::fq(p);
      for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = trial_engine(8080 + p, t);
        const Poly g = random_poly(rng, k, 2, RandomPolyShape{4, 6, 0b11, false});
        CHECK(divide_by_p(times_p(g)) == g);
        CHECK(reduce_mod_p(teichmuller_lift(g)) == g);
        CHECK(reduce_mod_p(times_p(g)).is_zero());
        const Poly G = random_poly(rng, k.witt_ring(), 2, RandomPolyShape{4, 6, 0, false});
        CHECK(divide_by_p(G.scaled(k.witt_ring().from_int(p))) == reduce_mod_p(G));
        CHECK(frobenius_power(g) == g.pow(p));
      }
    }
  }

  TEST_CASE("unit inversion") {
    const CoeffRing& w = CoeffRing::w2(3);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_engine(4242, t);
      const Poly rest = random_poly(rng, w, 2, RandomPolyShape{3, 4, 0b11, false});
      const Poly lead = P("2*x1^2*x2^-1", w, 2);
      const Poly f = lead + times_p(reduce_mod_p(rest));
      REQUIRE(is_unit(f));
      CHECK(f * invert_unit(f) == Poly::constant(w, 2, 1));
    }
    CHECK_FALSE(is_unit(P("x1 + 1", w, 1)));
    CHECK_THROWS_AS(invert_unit(P("x1 + 1", w, 1)), Error);
    CHECK_FALSE(is_unit(P("3*x1", w, 1)));
  }

  TEST_CASE("composition is a ring homomorphism") {
    const CoeffRing& w = CoeffRing::w2(2);
    for (std::uint64_t t = 0; t < 60; ++t) {
      auto rng = trial_engine(9, t);
      const RandomPolyShape shape{3, 4, 0, false};
      const Poly a = random_poly(rng, w, 2, shape), b = random_poly(rng, w, 2, shape);
      const std::vector<Poly> images{random_poly(rng, w, 2, shape), random_poly(rng, w, 2, shape)};
      for (bool twist : {false, true}) {
        CHECK(compose(a * b, images, twist) == compose(a, images, twist) * compose(b, images, twist));
        CHECK(compose(a + b, images, twist) == compose(a, images, twist) + compose(b, images, twist));
      }
    }
  }

  TEST_CASE("remap variables") {
    const CoeffRing& k = CoeffRing::fq(5);
    const std::vector<std::size_t> map{2, 0};
    CHECK(remap_variables(P("x1^2*x2", k, 2), 3, map) == P("x1*x3^2", k, 3));
  }

  TEST_CASE("text round trip") {
    for (auto [p, m] : {std::pair{2u, 1u}, std::pair{3u, 2u}, std::pair{7u, 1u}}) {
      const CoeffRing& w = CoeffRing::w2(p, m);
      for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = trial_engine(101, t);
        const Poly f = random_poly(rng, w, 3, RandomPolyShape{4, 6, 0b101, false});
        CHECK(parse_poly(to_string(f), w, 3) == f);
      }
    }
    const CoeffRing& k = CoeffRing::fq(3);
    const std::vector<std::string> names{"u", "x"};
    CHECK(to_string(P("2*x1^2*x2 + x1 + 1", k, 2), names) == "2*u^2*x + u + 1");
    CHECK(parse_poly("(u + x)^2 - x^2", k, names) == P("x1^2 + 2*x1*x2", k, 2));
    CHECK(parse_poly("2u x", k, names) == P("2*x1*x2", k, 2));
    CHECK(to_string(Poly(k, 2)) == "0");
    CHECK_THROWS_AS(parse_poly("x +", k, names), Error);
    CHECK_THROWS_AS(parse_poly("z", k, names), Error);
  }

  TEST_CASE("shape and range errors") {
    const CoeffRing& k = CoeffRing::fq(3);
    CHECK_THROWS_AS(P("x1", k, 1) + P("x1", k, 2), Error);
    CHECK_THROWS_AS(P("x1", k, 1) + P("x1", CoeffRing::fq(5), 1), Error);
    CHECK_THROWS_AS(Monomial({1, 2, 3, 4, 5}), Error);
    CHECK_THROWS_AS(Monomial::variable(1, 0, 20000), Error);
    CHECK_THROWS_AS(low_decomposition(P("x1^-1", k, 1)), Error);
  }
}
