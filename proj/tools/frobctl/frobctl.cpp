#include "frobctl.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobw2/classify.hpp"
#include "frobw2/curves.hpp"
#include "frobw2/froblift.hpp"
#include "frobw2/projline.hpp"
#include "frobw2/random.hpp"
#include "frobw2/ruled.hpp"
#include "frobw2/serialize.hpp"
#include "json.hpp"

namespace frobctl {

using json = nlohmann::ordered_json;
using namespace frobw2;

namespace {

constexpr std::size_t kMaxWitnesses = 5;

struct Property {
  std::string name;
  std::string citation;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  json witnesses = json::array();

  template <typename WitnessFn>
  void record(bool ok, WitnessFn&& witness) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
  }
  void record(bool ok) {
    record(ok, [] { return json(nullptr); });
  }
};

class Report {
 public:
  Report(std::string command, std::uint64_t seed) {
    root_["schema"] = 1;
    root_["command"] = std::move(command);
    root_["seed"] = seed;
  }

  json& root() { return root_; }

  Property& property(const std::string& name, const std::string& citation) {
    for (auto& p : props_)
      if (p.name == name) return p;
    props_.push_back(Property{name, citation});
    return props_.back();
  }

  void fail(const std::string& name, const std::string& citation, json witness) {
    property(name, citation).record(false, [&] { return witness; });
  }

  bool all_pass() const {
    for (const auto& p : props_)
      if (p.failed) return false;
    return !forced_failure_;
  }

  void force_failure() { forced_failure_ = true; }

  json to_json() const {
    json out = root_;
    json props = json::array();
    for (const auto& p : props_) {
      json j;
      j["name"] = p.name;
      j["citation"] = p.citation;
      j["passed"] = p.passed;
      j["failed"] = p.failed;
      if (!p.witnesses.empty()) j["witnesses"] = p.witnesses;
      props.push_back(std::move(j));
    }
    out["properties"] = std::move(props);
    out["all_pass"] = all_pass();
    return out;
  }

  std::string summary() const {
    std::ostringstream s;
    for (const auto& p : props_)
      s << (p.failed ? "FAIL " : "ok   ") << p.name << ": " << p.passed << " passed, "
        << p.failed << " failed\n";
    s << (all_pass() ? "all properties hold" : "some property failed") << "\n";
    return s.str();
  }

 private:
  json root_;
  std::deque<Property> props_;
  bool forced_failure_ = false;
};

std::mt19937_64 engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return std::mt19937_64(trial_seed(trial_seed(seed, stream), index));
}

std::uint64_t stream_id(std::string_view tag, std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(h ^ (a << 32) ^ b);
}

Poly monomial(const CoeffRing& r, std::size_t n, std::size_t j, int e) {
  return Poly::monomial(r, Monomial::variable(n, j, e), r.one());
}

// ------------------------------------------------------------ witt2 ----

void witt_sweep(Report& rep, const std::vector<std::uint32_t>& ps, std::uint32_t m,
                std::uint64_t trials, std::uint64_t seed) {
  for (std::uint32_t p : ps) {
    const CoeffRing& k = CoeffRing::fq(p, m);
    const CoeffRing& w = k.witt_ring();
    auto pair_of = [&](std::uint32_t code) { return to_witt(w, static_cast<CoeffRing::Code>(code)); };

    if (m == 1) {
      auto& add = rep.property("witt_residue_oracle_add", "W2(F_p) is Z/p^2 via a0^p + p*a1");
      auto& mul = rep.property("witt_residue_oracle_mul", "W2(F_p) is Z/p^2 via a0^p + p*a1");
      auto check = [&](std::uint32_t a, std::uint32_t b) {
        const WittPair u = pair_of(a), v = pair_of(b);
        const Zp2Elem ru = witt_to_residue_ring(u), rv = witt_to_residue_ring(v);
        auto wit = [&] { return json{{"p", p}, {"u", to_string(u)}, {"v", to_string(v)}}; };
        add.record(witt_to_residue_ring(witt_add(u, v)) == ru + rv, wit);
        mul.record(witt_to_residue_ring(witt_mul(u, v)) == ru * rv, wit);
      };
      if (p <= 3) {
        for (std::uint32_t a = 0; a < w.size(); ++a)
          for (std::uint32_t b = 0; b < w.size(); ++b) check(a, b);
      } else {
        for (std::uint64_t t = 0; t < trials; ++t) {
          auto rng = engine(seed, stream_id("witt-oracle", p), t);
          std::uniform_int_distribution<std::uint32_t> d(0, w.size() - 1);
          const std::uint32_t a = d(rng);
          check(a, d(rng));
        }
      }
      std::vector<bool> seen(static_cast<std::size_t>(p) * p, false);
      bool bijective = true;
      for (std::uint32_t a = 0; a < w.size(); ++a) {
        const auto r = witt_to_residue_ring(pair_of(a)).rep();
        bijective = bijective && !seen[r];
        seen[r] = true;
      }
      rep.property("witt_residue_bijection", "W2(F_p) is Z/p^2 via a0^p + p*a1")
          .record(bijective, [&] { return json{{"p", p}}; });
    }

    auto& axioms = rep.property("witt_ring_axioms", "W2(F_q) is a commutative ring");
    auto& frob = rep.property("witt_frobenius_endomorphism",
                              "componentwise p-th power is a ring endomorphism lifting x^p");
    auto& divp = rep.property("divide_by_p_after_times_p",
                              "multiplication by p identifies M/pM with pM for flat M");
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto rng = engine(seed, stream_id("witt-axioms", p, m), t);
      std::uniform_int_distribution<std::uint32_t> d(0, w.size() - 1);
      const WittPair a = pair_of(d(rng)), b = pair_of(d(rng)), c = pair_of(d(rng));
      auto wit = [&] {
        return json{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
      };
      const bool ok =
          witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)) &&
          witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)) &&
          witt_add(a, b) == witt_add(b, a) && witt_mul(a, b) == witt_mul(b, a) &&
          witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c)) &&
          witt_add(a, witt_neg(a)) == WittPair::zero(k) && witt_mul(WittPair::one(k), a) == a;
      axioms.record(ok, wit);
      const bool fok = witt_frobenius(witt_add(a, b)) == witt_add(witt_frobenius(a), witt_frobenius(b)) &&
                       witt_frobenius(witt_mul(a, b)) == witt_mul(witt_frobenius(a), witt_frobenius(b)) &&
                       witt_frobenius(a).a0 == a.a0.pow(p);
      frob.record(fok, wit);
      if (t % 10 == 0) {
        const Poly g = random_poly(rng, w, 2, RandomPolyShape{3, 6, 0, false});
        divp.record(divide_by_p(g.scaled(w.from_int(p))) == reduce_mod_p(g),
                    [&] { return json{{"g", to_string(g)}}; });
      }
    }
  }
}

// ------------------------------------------------------- froblift -----

std::vector<std::vector<int>> random_matrix(std::mt19937_64& rng, std::size_t rows,
                                            std::size_t cols, std::uint32_t p) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1);
  std::vector<std::vector<int>> K(rows, std::vector<int>(cols));
  for (auto& row : K)
    for (auto& e : row) e = d(rng);
  return K;
}

void lemma_sweep(Report& rep, std::uint32_t p, std::size_t rows, std::size_t cols,
                 std::uint64_t trials, std::uint64_t seed) {
  auto& prop = rep.property("monomial_lemma",
                            "for monomial f_i the top coefficient of det(df_i/dt_j) is 0 and "
                            "det equals det(K) prod t_j^(s_j)");
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = engine(seed, stream_id("lemma", p, rows * 8 + cols), t);
    const auto K = random_matrix(rng, rows, cols, p);
    const auto res = monomial_lemma_check(K, p);
    prop.record(res.ok(), [&] { return json{{"p", p}, {"K", K}, {"det", to_string(res.expanded)}}; });
  }
}

void phi_sweep(Report& rep, std::uint32_t p, std::size_t n, std::uint64_t trials, int degree,
               std::uint64_t seed) {
  const CoeffRing& k = CoeffRing::fq(p);
  const Monomial target = phi_target_monomial(n, p);
  auto& coeff = rep.property("phi_det_target_coefficient_is_one",
                             "coefficient of prod x_i^(p-1) in det(phi_F) is 1");
  auto& nonzero = rep.property("phi_det_nonzero", "phi_F is generically bijective");
  auto& transpose = rep.property("phi_det_transpose_invariant",
                                 "det(d f_i/d x_j) = det(d f_j/d x_i)");
  auto& low = rep.property("phi_det_high_part_no_contribution",
                           "terms divisible by some x_s^p do not reach the top coefficient");
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = engine(seed, stream_id("phi", p, n), t);
    const AffineChartLift F = random_lift(rng, k, n, RandomPolyShape{degree, 6, 0, true});
    const PolyMatrix M = phi_matrix(F);
    const Poly det = determinant(M);
    auto wit = [&] { return json::parse(lift_to_json(F)); };
    coeff.record(det.coefficient_of(target) == 1, wit);
    nonzero.record(!det.is_zero(), wit);
    transpose.record(determinant(M.transposed()) == det, wit);
    std::vector<Poly> lows;
    for (const auto& f : F.corrections()) lows.push_back(low_decomposition(f).low);
    const Poly det_low = phi_det(make_lift(k, n, 0, lows));
    low.record(det_low.coefficient_of(target) == det.coefficient_of(target), wit);
  }
}

void eta_sweep(Report& rep, std::uint32_t p, std::size_t n, std::uint64_t lifts,
               std::uint64_t pairs, std::uint64_t seed) {
  const CoeffRing& k = CoeffRing::fq(p);
  auto& axioms = rep.property("eta_axioms", "eta between two lifts is additive and twisted-Leibniz");
  auto& agree = rep.property("eta_generator_extension",
                             "eta is determined by its values on the generators");
  for (std::uint64_t t = 0; t < lifts; ++t) {
    auto rng = engine(seed, stream_id("eta", p, n), t);
    const RandomPolyShape lift_shape{static_cast<int>(p), 4, 0, true};
    const AffineChartLift F1 = random_lift(rng, k, n, lift_shape);
    const AffineChartLift F2 = random_lift(rng, k, n, lift_shape);
    const EtaMap eta = lift_difference_eta(F1, F2);
    const EtaFunction ext = eta_between(F1, F2);
    for (std::uint64_t s = 0; s < pairs; ++s) {
      const RandomPolyShape el{3, 4, 0, true};
      const Poly a = random_poly(rng, k, n, el);
      const Poly b = random_poly(rng, k, n, el);
      const EtaCheck chk = eta_axioms_check(eta, a, b);
      axioms.record(chk.ok(), [&] {
        return json{{"F1", json::parse(lift_to_json(F1))}, {"F2", json::parse(lift_to_json(F2))},
                    {"a", to_string(a)}, {"b", to_string(b)}};
      });
      agree.record(eta(a) == ext(a), [&] { return json{{"a", to_string(a)}}; });
    }
  }
}

// ------------------------------------------------------- projline -----

void p1_sweep(Report& rep, const std::vector<std::uint32_t>& ps, std::uint64_t trials,
              std::uint64_t seed) {
  auto& bound = rep.property("p1_extension_iff_degree_le_2p",
                             "lifts on P^1_A are a base lift plus a correction of degree <= 2p");
  auto& dim = rep.property("p1_lift_space_dimension", "extensions form a space of dimension 2p+1");
  auto& round = rep.property("p1_round_trip", "extending to the y-chart and back is exact");
  for (std::uint32_t p : ps) {
    const CoeffRing& k = CoeffRing::fq(p);
    const AffineChartLift point = standard_lift(k, 0);
    for (int d = 0; d <= 3 * static_cast<int>(p); ++d) {
      for (std::uint32_t c = 1; c < k.q(); ++c) {
        bool extended = true;
        try {
          extend_chart(point, Poly::monomial(k, Monomial::variable(1, 0, d), static_cast<Poly::Code>(c)));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegreeTooHigh) throw;
          extended = false;
        }
        bound.record(extended == (d <= 2 * static_cast<int>(p)),
                     [&] { return json{{"p", p}, {"d", d}, {"c", c}}; });
      }
    }
    const int got = lift_space_dimension(p);
    dim.record(got == 2 * static_cast<int>(p) + 1, [&] { return json{{"p", p}, {"dimension", got}}; });
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto rng = engine(seed, stream_id("p1", p), t);
      const std::size_t nbase = t % 2;
      const AffineChartLift base =
          random_lift(rng, k, nbase, RandomPolyShape{static_cast<int>(p), 3, 0, true});
      std::vector<std::pair<Monomial, Poly::Code>> terms;
      std::uniform_int_distribution<int> deg(0, 2 * static_cast<int>(p));
      std::uniform_int_distribution<int> bdeg(0, 2);
      std::uniform_int_distribution<std::uint32_t> co(1, k.q() - 1);
      for (int i = 0; i < 4; ++i) {
        std::array<int, kMaxVars> e{};
        if (nbase) e[0] = bdeg(rng);
        e[nbase] = deg(rng);
        terms.emplace_back(Monomial(std::span<const int>(e.data(), nbase + 1)),
                           static_cast<Poly::Code>(co(rng)));
      }
      const P1Lift L{base, Poly::from_terms(k, nbase + 1, terms)};
      const P1Check chk = verify_p1_lift(L);
      round.record(chk.ok, [&] {
        return json{{"p", p}, {"f", to_string(L.f)}, {"chart", chk.failing_chart}, {"detail", chk.detail}};
      });
    }
  }
}

// ---------------------------------------------------------- ruled -----

json chart_json(const AffineChartLift& F, const std::vector<std::string>& names) {
  json j;
  for (std::size_t i = 0; i < F.nvars(); ++i) j[names[i]] = to_string(F.image(i), names);
  return j;
}

void ruled_check(Report& rep, const TransitionData& T, const std::string& label, json* details) {
  const CoeffRing& k = T.a.ring();
  const std::uint32_t p = k.p();
  auto& glue = rep.property("ruled_gluing", "charts glued by tx = sy = 1, x = ay + b agree");
  auto& degree = rep.property("ruled_h_degree_le_p", "F(y) = y^p + p*h with deg_y h <= p");
  auto& tails = rep.property("ruled_tails_killed_by_p",
                             "fiber-degree >= 1 parts of a base coordinate's image are killed by p");
  auto& base = rep.property("ruled_base_glue_consistency",
                            "base lifts read off the two fiber charts differ by p*eta");
  RuledLift L = build_standard_lift(T, standard_base_lift(T.base, k));
  const auto failures = verify_gluing(L);
  glue.record(failures.empty(), [&] {
    json w = json::array();
    for (const auto& f : failures) w.push_back({{"overlap", f.overlap}, {"coordinate", f.coordinate}, {"detail", f.detail}});
    return json{{"case", label}, {"failures", w}};
  });
  const int dh = L.h.is_zero() ? 0 : L.h.degree_in(1);
  degree.record(dh <= static_cast<int>(p), [&] { return json{{"case", label}, {"deg_y_h", dh}}; });
  for (const auto* chart : {&L.ux, &L.vy}) {
    bool ok = true;
    std::string detail;
    try {
      extract_base_lift(*chart);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    tails.record(ok, [&] { return json{{"case", label}, {"detail", detail}}; });
  }
  const BaseGlueReport bg = base_glue_consistency(L);
  base.record(bg.ok, [&] { return json{{"case", label}, {"detail", bg.detail}}; });
  if (details) {
    json& d = *details;
    d["charts"] = {{"Ux", chart_json(L.ux, {"u", "x"})},
                   {"Ut", chart_json(L.ut, {"u", "t"})},
                   {"Vy", chart_json(L.vy, {"v", "y"})},
                   {"Vs", chart_json(L.vs, {"v", "s"})}};
    const std::vector<std::string> vy_names{"v", "y"};
    d["h"] = to_string(L.h, vy_names);
    d["deg_y_h"] = dh;
    d["eta"] = to_string(bg.eta_from_g0, std::vector<std::string>{"u"});
  }
}

std::vector<std::pair<std::string, TransitionData>> standard_ruled_cases(std::uint32_t p) {
  const CoeffRing& k = CoeffRing::fq(p);
  const std::vector<std::string> u{"u"};
  std::vector<std::pair<std::string, TransitionData>> cases;
  for (int n : {0, 2, 3}) cases.emplace_back("F" + std::to_string(n), hirzebruch(k, n));
  cases.emplace_back("A1, a=1, b=u", make_transition(ToricBase::A1, parse_poly("1", k, u),
                                                     parse_poly("u", k, u)));
  cases.emplace_back("Gm, a=u^2, b=u+u^-1",
                     make_transition(ToricBase::Gm, parse_poly("u^2", k, u),
                                     parse_poly("u + u^-1", k, u)));
  return cases;
}

// ------------------------------------------------------- classify -----

void golden_check(Report& rep) {
  auto& prop = rep.property("golden_table", "classification clauses and the hyperelliptic table");
  auto& round = rep.property("descriptor_json_round_trip", "descriptor serialization is lossless");
  for (const auto& row : golden_table()) {
    const Verdict v = classify_surface(row.descriptor);
    prop.record(v == row.expected, [&] {
      return json{{"row", row.label}, {"got", json::parse(verdict_to_json(v))},
                  {"expected", json::parse(verdict_to_json(row.expected))}};
    });
    round.record(descriptor_from_json(descriptor_to_json(row.descriptor)) == row.descriptor,
                 [&] { return json{{"row", row.label}}; });
  }
}

void hasse_census(Report& rep, const std::vector<std::uint32_t>& ps, json* out) {
  auto& prop = rep.property("hasse_matches_point_count",
                            "nonzero Hasse invariant iff a_p != 0 mod p");
  for (std::uint32_t p : ps) {
    const OrdinarityCensus c = ordinarity_census(p);
    prop.passed += c.nonsingular - c.mismatches;
    prop.failed += c.mismatches;
    if (c.mismatches && prop.witnesses.size() < kMaxWitnesses)
      prop.witnesses.push_back({{"p", p}, {"mismatches", c.mismatches}});
    if (out)
      out->push_back({{"p", p}, {"nonsingular", c.nonsingular},
                      {"supersingular_by_hasse", c.supersingular_by_hasse},
                      {"supersingular_by_count", c.supersingular_by_count}});
  }
}

// ------------------------------------------------------------ CLI -----

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegreeTooHigh:
    case ErrorKind::NotRegular:
    case ErrorKind::InvariantViolation:
    case ErrorKind::NotDivisible:
      return false;
    default:
      return true;
  }
}

std::optional<std::uint64_t> env_seed(std::string& problem) {
  const char* s = std::getenv("FROBCTL_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    problem = std::string("FROBCTL_SEED is not an unsigned integer: ") + s;
    return std::nullopt;
  }
}

void check_primes(const std::vector<std::uint32_t>& ps) {
  for (auto p : ps)
    if (p > kMaxPrime || !is_prime(p))
      raise(ErrorKind::RangeError, std::to_string(p) + " is not a prime <= 17");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for W2 Frobenius lifts on charts, ruled surfaces and surface classes",
               "frobctl"};
  app.require_subcommand(1);

  std::string seed_problem;
  const std::uint64_t default_seed = env_seed(seed_problem).value_or(1);
  std::uint64_t seed = default_seed;
  std::string output;
  bool summary = false;
  std::uint64_t trials = 0;

  auto common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--seed", seed, "PRNG seed (default: $FROBCTL_SEED or 1)");
    sub->add_option("--output", output, "write the JSON report here instead of stdout");
    sub->add_flag("--summary", summary, "print a human summary on stderr");
    if (randomized)
      sub->add_option("--trials", trials, "number of random trials")->check(CLI::PositiveNumber);
  };

  std::vector<std::uint32_t> p_list;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::size_t n = 2;
  std::size_t cols = 0;
  int degree = -1;
  std::string lift_json, f_text, base_name = "P1", b_text = "0", json_text;
  bool golden = false, census = false;
  std::int64_t a = 0, b = 0, a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  auto* witt = app.add_subcommand("witt-check", "Witt ring oracle, axioms and division by p");
  common(witt, true);
  witt->add_option("--p", p_list, "primes (default 2 3 5 7)");
  witt->add_option("--m", m, "residue field degree, q = p^m (oracle needs m = 1)");

  auto* lemma = app.add_subcommand("verify-lemma", "monomial determinant lemma on random exponent matrices");
  common(lemma, true);
  lemma->add_option("--p", p, "prime")->required();
  lemma->add_option("--n", n, "matrix rows m (and columns unless --cols)")->check(CLI::Range(1, 3));
  lemma->add_option("--cols", cols, "number of variables, m <= cols <= 3");

  auto* phi = app.add_subcommand("phi-det", "determinant of dF/p for random or given lifts");
  common(phi, true);
  phi->add_option("--p", p, "prime");
  phi->add_option("--n", n, "chart dimension")->check(CLI::Range(1, 3));
  phi->add_option("--degree", degree, "total degree bound for corrections (default p)");
  phi->add_option("--lift", lift_json, "lift as JSON; prints its determinant instead of sweeping");

  auto* p1 = app.add_subcommand("p1-lift", "extend a fiber correction over P^1 to the second chart");
  common(p1, false);
  p1->add_option("--p", p, "prime")->required();
  p1->add_option("--f", f_text, "correction f(x) on the x-chart")->required();

  auto* ruled = app.add_subcommand("ruled-lift", "standard lift on a ruled surface over A1, Gm or P1");
  common(ruled, false);
  ruled->add_option("--base", base_name, "A1, Gm or P1")->check(CLI::IsMember({"A1", "Gm", "P1"}));
  ruled->add_option("--n", n, "a = u^n");
  ruled->add_option("--p", p, "prime")->required();
  ruled->add_option("--b", b_text, "b(u) in x = a*y + b");

  auto* cls = app.add_subcommand("classify", "decide W2 Frobenius liftability of a minimal surface");
  common(cls, false);
  auto* json_opt = cls->add_option("--json", json_text, "surface descriptor");
  auto* golden_opt = cls->add_flag("--golden", golden, "run the built-in golden table");
  json_opt->excludes(golden_opt);

  auto* hasse = app.add_subcommand("hasse", "Hasse invariant and ordinarity of an elliptic curve");
  common(hasse, false);
  hasse->add_option("--p", p, "prime")->required();
  hasse->add_option("--a", a, "short form y^2 = x^3 + a x + b");
  hasse->add_option("--b", b, "short form y^2 = x^3 + a x + b");
  hasse->add_option("--a1", a1, "long form coefficient");
  hasse->add_option("--a2", a2, "long form coefficient");
  hasse->add_option("--a3", a3, "long form coefficient");
  hasse->add_option("--a4", a4, "long form coefficient");
  hasse->add_option("--a6", a6, "long form coefficient");
  hasse->add_flag("--census", census, "compare Hasse and point count on every short curve over F_p");

  auto* sweep = app.add_subcommand("sweep-all", "every property at desk scale");
  common(sweep, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsageError;
  }
  if (!seed_problem.empty() && seed == default_seed) {
    err << seed_problem << "\n";
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Report rep(command, seed);
  json& root = rep.root();
  const auto started = std::chrono::steady_clock::now();

  try {
    if (chosen == witt) {
      if (p_list.empty()) p_list = {2, 3, 5, 7};
      check_primes(p_list);
      if (!trials) trials = 10000;
      root["params"] = {{"p", p_list}, {"m", m}, {"trials", trials}};
      witt_sweep(rep, p_list, m, trials, seed);
    } else if (chosen == lemma) {
      check_primes({p});
      if (!cols) cols = n;
      if (cols < n || cols > 3) raise(ErrorKind::RangeError, "need n <= cols <= 3");
      if (!trials) trials = 1000;
      root["params"] = {{"p", p}, {"rows", n}, {"cols", cols}, {"trials", trials}};
      lemma_sweep(rep, p, n, cols, trials, seed);
    } else if (chosen == phi) {
      if (!lift_json.empty()) {
        const AffineChartLift F = lift_from_json(lift_json);
        const Poly det = phi_det(F);
        const auto coeff = det.coefficient_of(phi_target_monomial(F.nvars(), F.p()));
        root["lift"] = json::parse(lift_to_json(F));
        root["phi_det"] = to_string(det);
        root["target_coefficient"] = F.field().format(coeff);
        rep.property("phi_det_nonzero", "phi_F is generically bijective").record(!det.is_zero());
        if (!F.laurent_mask())
          rep.property("phi_det_target_coefficient_is_one",
                       "coefficient of prod x_i^(p-1) in det(phi_F) is 1")
              .record(coeff == 1);
      } else {
        check_primes({p});
        if (!trials) trials = 500;
        if (degree < 0) degree = static_cast<int>(p);
        root["params"] = {{"p", p}, {"n", n}, {"degree", degree}, {"trials", trials}};
        phi_sweep(rep, p, n, trials, degree, seed);
      }
    } else if (chosen == p1) {
      check_primes({p});
      const CoeffRing& k = CoeffRing::fq(p);
      const std::vector<std::string> xs{"x"}, ys{"y"};
      const Poly f = parse_poly(f_text, k, xs);
      root["params"] = {{"p", p}, {"f", to_string(f, xs)}};
      const AffineChartLift point = standard_lift(k, 0);
      try {
        const Poly g = extend_chart(point, f);
        const Poly image = monomial(k.witt_ring(), 1, 0, static_cast<int>(p)) + times_p(g);
        root["y_correction"] = to_string(g, ys);
        root["y_image"] = to_string(image, ys);
        const P1Check chk = verify_p1_lift(P1Lift{point, f});
        rep.property("p1_round_trip", "extending to the y-chart and back is exact")
            .record(chk.ok, [&] { return json{{"chart", chk.failing_chart}, {"detail", chk.detail}}; });
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegreeTooHigh) throw;
        root["diagnosis"] = {{"kind", "DegreeTooHigh"}, {"message", e.what()}};
        rep.fail("p1_extension_iff_degree_le_2p",
                 "lifts on P^1_A are a base lift plus a correction of degree <= 2p",
                 json{{"deg_x_f", f.degree_in(0)}, {"bound", 2 * p}});
      }
    } else if (chosen == ruled) {
      check_primes({p});
      const CoeffRing& k = CoeffRing::fq(p);
      const std::vector<std::string> us{"u"};
      const ToricBase base = parse_toric_base(base_name);
      const int nn = static_cast<int>(n);
      const TransitionData T = make_transition(
          base, Poly::monomial(k, Monomial::variable(1, 0, nn), k.one()), parse_poly(b_text, k, us));
      root["params"] = {{"base", base_name}, {"n", nn}, {"p", p}, {"b", to_string(T.b, us)}};
      if (base == ToricBase::P1 && nn == 1) root["non_minimal"] = true;
      json details;
      try {
        ruled_check(rep, T, base_name, &details);
        for (auto& [key, value] : details.items()) root[key] = value;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRegular) throw;
        root["diagnosis"] = {{"kind", "NotRegular"}, {"message", e.what()}};
        rep.force_failure();
      }
    } else if (chosen == cls) {
      if (golden) {
        golden_check(rep);
      } else {
        if (json_text.empty()) raise(ErrorKind::DescriptorError, "pass --json or --golden");
        const SurfaceDescriptor d = descriptor_from_json(json_text);
        const Verdict v = classify_surface(d);
        root["descriptor"] = json::parse(descriptor_to_json(d));
        const json verdict = json::parse(verdict_to_json(v));
        for (auto& [key, value] : verdict.items()) root[key] = value;
      }
    } else if (chosen == hasse) {
      check_primes({p});
      if (census) {
        json rows = json::array();
        hasse_census(rep, {p}, &rows);
        root["census"] = rows;
      } else {
        WeierstrassCurve E;
        E.p = p;
        const bool long_form = hasse->count("--a1") || hasse->count("--a2") ||
                               hasse->count("--a3") || hasse->count("--a4") || hasse->count("--a6");
        if (long_form && (hasse->count("--a") || hasse->count("--b")))
          raise(ErrorKind::ShapeError, "give either --a/--b or the long-form coefficients");
        if (long_form) {
          E.a1 = a1, E.a2 = a2, E.a3 = a3, E.a4 = a4, E.a6 = a6;
        } else {
          E = WeierstrassCurve::short_form(p, a, b);
        }
        require_nonsingular(E);
        root["curve"] = {{"a1", E.a1}, {"a2", E.a2}, {"a3", E.a3}, {"a4", E.a4}, {"a6", E.a6}};
        if (p >= 5 && E.is_short()) root["invariant"] = hasse_invariant(E).code();
        else root["invariant"] = nullptr;
        root["points"] = count_points(E);
        root["trace"] = frobenius_trace(E);
        bool ordinary = false;
        bool agree = true;
        try {
          ordinary = is_ordinary_curve(E);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InvariantViolation) throw;
          agree = false;
        }
        root["ordinary"] = ordinary;
        rep.property("hasse_matches_point_count", "nonzero Hasse invariant iff a_p != 0 mod p")
            .record(agree);
      }
    } else if (chosen == sweep) {
      if (!trials) trials = 100;
      root["params"] = {{"trials", trials}};
      witt_sweep(rep, {2, 3, 5, 7}, 1, trials * 10, seed);
      witt_sweep(rep, {2, 3}, 2, trials, seed);
      for (std::uint32_t q : {2u, 3u, 5u}) {
        for (std::size_t s = 1; s <= 3; ++s) {
          lemma_sweep(rep, q, s, 3, trials, seed);
          phi_sweep(rep, q, s, trials, static_cast<int>(q), seed);
        }
        eta_sweep(rep, q, 2, std::max<std::uint64_t>(1, trials / 10), 10, seed);
      }
      p1_sweep(rep, {2, 3, 5}, trials, seed);
      for (std::uint32_t q : {2u, 3u, 5u})
        for (const auto& [label, T] : standard_ruled_cases(q))
          ruled_check(rep, T, label + ", p=" + std::to_string(q), nullptr);
      golden_check(rep);
      hasse_census(rep, {5, 7, 11, 13}, nullptr);
    }
  } catch (const Error& e) {
    err << "frobctl " << command << ": " << e.what() << "\n";
    if (usage_kind(e.kind())) return kUsageError;
    root["diagnosis"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    rep.force_failure();
  }

  const std::string text = rep.to_json().dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "cannot write " << output << "\n";
      return kUsageError;
    }
    file << text;
  }
  if (summary) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    err << rep.summary() << command << " finished in " << ms << " ms\n";
  }
  return rep.all_pass() ? kAllPass : kPropertyViolated;
}

}  // namespace frobctl
