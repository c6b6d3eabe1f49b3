#include "frobw2/classify.hpp"

namespace frobw2 {

namespace {

constexpr const char* kKappaPositive =
    "Kodaira dimension >= 1: Frobenius cannot be lifted to W2(k)";
constexpr const char* kTorsionCanonical =
    "K3, Enriques and quasi-hyperelliptic surfaces: Frobenius cannot be lifted to W2(k)";
constexpr const char* kAbelian = "kappa = 0, clause (a): ordinary abelian surfaces";
constexpr const char* kP2 = "kappa = -1, clause (a): P^2";
constexpr const char* kFn = "kappa = -1, clause (a): P(O + O(n)), n >= 0, n != 1";
constexpr const char* kRuledP1 =
    "kappa = -1, clause (a): a minimal ruled surface over P^1 is P(O + O(n)), toric";
constexpr const char* kRuledElliptic =
    "kappa = -1, clause (b): ruled surfaces over an ordinary elliptic curve";
constexpr const char* kRuledBase =
    "ruled surfaces: a lift for X induces one for the base C, so C is P^1 or an ordinary "
    "elliptic curve";
constexpr const char* kOmegaNote = "omega^(p-1) = O_X is required for every hyperelliptic type";

std::string hyperelliptic_citation(char type, std::uint32_t p) {
  const char* column = p == 2 ? "char = 2" : p == 3 ? "char = 3" : "char != 2,3";
  return std::string("kappa = 0, clause (b); hyperelliptic table, row ") + type + ", " + column;
}

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::DescriptorError, what); }

}  // namespace

std::string_view to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::RationalP2: return "rational_P2";
    case SurfaceClass::RationalFn: return "rational_Fn";
    case SurfaceClass::Ruled: return "ruled";
    case SurfaceClass::Abelian: return "abelian";
    case SurfaceClass::K3: return "K3";
    case SurfaceClass::Enriques: return "enriques";
    case SurfaceClass::Hyperelliptic: return "hyperelliptic";
    case SurfaceClass::QuasiHyperelliptic: return "quasi_hyperelliptic";
    case SurfaceClass::ProperlyElliptic: return "properly_elliptic";
    case SurfaceClass::GeneralType: return "general_type";
  }
  return "?";
}

SurfaceClass parse_surface_class(std::string_view s) {
  for (auto c : {SurfaceClass::RationalP2, SurfaceClass::RationalFn, SurfaceClass::Ruled,
                 SurfaceClass::Abelian, SurfaceClass::K3, SurfaceClass::Enriques,
                 SurfaceClass::Hyperelliptic, SurfaceClass::QuasiHyperelliptic,
                 SurfaceClass::ProperlyElliptic, SurfaceClass::GeneralType})
    if (to_string(c) == s) return c;
  bad("unknown surface class '" + std::string(s) + "'");
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Liftable: return "Liftable";
    case Outcome::NotLiftable: return "NotLiftable";
    case Outcome::OutOfScope: return "OutOfScope";
  }
  return "?";
}

Outcome parse_outcome(std::string_view s) {
  for (auto o : {Outcome::Liftable, Outcome::NotLiftable, Outcome::OutOfScope})
    if (to_string(o) == s) return o;
  raise(ErrorKind::ParseError, "unknown outcome '" + std::string(s) + "'");
}

void validate(const SurfaceDescriptor& d) {
  if (d.p < 2 || d.p > kMaxPrime || !is_prime(d.p))
    bad("p = " + std::to_string(d.p) + " is not a prime <= " + std::to_string(kMaxPrime));
  const bool uses_n = d.cls == SurfaceClass::RationalFn;
  const bool uses_ruled = d.cls == SurfaceClass::Ruled;
  const bool uses_abelian = d.cls == SurfaceClass::Abelian;
  const bool uses_variant = d.cls == SurfaceClass::Enriques;
  const bool uses_hyper = d.cls == SurfaceClass::Hyperelliptic;
  const std::string cls(to_string(d.cls));
  if (!uses_n && d.n) bad("field n does not apply to " + cls);
  if (!uses_ruled && (d.base_genus || d.base_is_ordinary))
    bad("base curve fields do not apply to " + cls);
  if (!uses_abelian && d.is_ordinary) bad("is_ordinary does not apply to " + cls);
  if (!uses_variant && d.variant) bad("variant does not apply to " + cls);
  if (!uses_hyper && (d.type || d.e0_ordinary || d.e1_ordinary || d.omega_trivial))
    bad("hyperelliptic fields do not apply to " + cls);

  switch (d.cls) {
    case SurfaceClass::RationalFn:
      if (!d.n) bad("rational_Fn needs n");
      if (*d.n < 0) bad("rational_Fn needs n >= 0");
      break;
    case SurfaceClass::Ruled:
      if (!d.base_genus) bad("ruled needs base_genus");
      if (*d.base_genus < 0) bad("base_genus must be >= 0");
      if (*d.base_genus == 1 && !d.base_is_ordinary)
        bad("ruled over an elliptic curve needs base_is_ordinary");
      if (*d.base_genus != 1 && d.base_is_ordinary)
        bad("base_is_ordinary only applies to an elliptic base");
      break;
    case SurfaceClass::Abelian:
      if (!d.is_ordinary) bad("abelian needs is_ordinary");
      break;
    case SurfaceClass::Enriques:
      if (!d.variant) bad("enriques needs variant");
      if (*d.variant != "classical" && *d.variant != "supersingular" && *d.variant != "singular")
        bad("enriques variant must be classical, supersingular or singular");
      if (*d.variant != "classical" && d.p != 2)
        bad(*d.variant + " Enriques surfaces only occur in characteristic 2");
      break;
    case SurfaceClass::Hyperelliptic:
      if (!d.type || *d.type < 'a' || *d.type > 'd') bad("hyperelliptic needs type a, b, c or d");
      if (!d.e0_ordinary || !d.e1_ordinary || !d.omega_trivial)
        bad("hyperelliptic needs E0_ordinary, E1_ordinary and omega_pow_p_minus_1_trivial");
      break;
    case SurfaceClass::QuasiHyperelliptic:
      if (d.p != 2 && d.p != 3) bad("quasi-hyperelliptic surfaces only occur for p = 2, 3");
      break;
    default:
      break;
  }
}

Verdict classify_surface(const SurfaceDescriptor& d) {
  validate(d);
  switch (d.cls) {
    case SurfaceClass::ProperlyElliptic:
    case SurfaceClass::GeneralType:
      return {Outcome::NotLiftable, kKappaPositive, ""};
    case SurfaceClass::K3:
    case SurfaceClass::Enriques:
    case SurfaceClass::QuasiHyperelliptic:
      return {Outcome::NotLiftable, kTorsionCanonical, ""};
    case SurfaceClass::Abelian:
      if (*d.is_ordinary) return {Outcome::Liftable, kAbelian, ""};
      return {Outcome::NotLiftable, kAbelian, "abelian surface is not ordinary"};
    case SurfaceClass::Hyperelliptic: {
      const std::string cite = hyperelliptic_citation(*d.type, d.p);
      if (*d.type != 'a' && (d.p == 2 || d.p == 3))
        return {Outcome::NotLiftable, cite,
                "types b-d in characteristic 2 or 3 have a supersingular elliptic factor"};
      std::string missing;
      if (!*d.e0_ordinary) missing += " E0 not ordinary;";
      if (!*d.e1_ordinary) missing += " E1 not ordinary;";
      if (!*d.omega_trivial) missing += " omega^(p-1) not trivial;";
      if (!missing.empty()) return {Outcome::NotLiftable, cite, missing.substr(1) + " " + kOmegaNote};
      return {Outcome::Liftable, cite, kOmegaNote};
    }
    case SurfaceClass::RationalP2:
      return {Outcome::Liftable, kP2, ""};
    case SurfaceClass::RationalFn:
      if (*d.n == 1) return {Outcome::OutOfScope, kFn, "non-minimal, excluded by n ≠ 1"};
      return {Outcome::Liftable, kFn, ""};
    case SurfaceClass::Ruled:
      if (*d.base_genus == 0) return {Outcome::Liftable, kRuledP1, ""};
      if (*d.base_genus == 1) {
        if (*d.base_is_ordinary) return {Outcome::Liftable, kRuledElliptic, ""};
        return {Outcome::NotLiftable, kRuledBase, "elliptic base curve is supersingular"};
      }
      return {Outcome::NotLiftable, kRuledBase, "base curve has genus >= 2"};
  }
  bad("unhandled surface class");
}

// ------------------------------------------------------------ golden rows --

namespace {

SurfaceDescriptor plain(SurfaceClass c, std::uint32_t p) {
  SurfaceDescriptor d;
  d.cls = c;
  d.p = p;
  return d;
}

SurfaceDescriptor hyper(char type, std::uint32_t p, bool e0 = true, bool e1 = true,
                        bool omega = true) {
  SurfaceDescriptor d = plain(SurfaceClass::Hyperelliptic, p);
  d.type = type;
  d.e0_ordinary = e0;
  d.e1_ordinary = e1;
  d.omega_trivial = omega;
  return d;
}

SurfaceDescriptor fn(int n, std::uint32_t p) {
  SurfaceDescriptor d = plain(SurfaceClass::RationalFn, p);
  d.n = n;
  return d;
}

SurfaceDescriptor ruled(int genus, std::uint32_t p, std::optional<bool> ordinary = {}) {
  SurfaceDescriptor d = plain(SurfaceClass::Ruled, p);
  d.base_genus = genus;
  d.base_is_ordinary = ordinary;
  return d;
}

SurfaceDescriptor abelian(bool ordinary, std::uint32_t p) {
  SurfaceDescriptor d = plain(SurfaceClass::Abelian, p);
  d.is_ordinary = ordinary;
  return d;
}

SurfaceDescriptor enriques(const char* variant, std::uint32_t p) {
  SurfaceDescriptor d = plain(SurfaceClass::Enriques, p);
  d.variant = variant;
  return d;
}

std::vector<GoldenRow> build_golden() {
  const Outcome Y = Outcome::Liftable;
  const Outcome N = Outcome::NotLiftable;
  const std::string omega = kOmegaNote;
  const std::string ss = "types b-d in characteristic 2 or 3 have a supersingular elliptic factor";
  std::vector<GoldenRow> rows = {
      // Hyperelliptic table, all twelve cells (ordinary factors, omega flag set).
      {"hyper a, p=5", hyper('a', 5), {Y, "kappa = 0, clause (b); hyperelliptic table, row a, char != 2,3", omega}},
      {"hyper a, p=3", hyper('a', 3), {Y, "kappa = 0, clause (b); hyperelliptic table, row a, char = 3", omega}},
      {"hyper a, p=2", hyper('a', 2), {Y, "kappa = 0, clause (b); hyperelliptic table, row a, char = 2", omega}},
      {"hyper b, p=5", hyper('b', 5), {Y, "kappa = 0, clause (b); hyperelliptic table, row b, char != 2,3", omega}},
      {"hyper b, p=3", hyper('b', 3), {N, "kappa = 0, clause (b); hyperelliptic table, row b, char = 3", ss}},
      {"hyper b, p=2", hyper('b', 2), {N, "kappa = 0, clause (b); hyperelliptic table, row b, char = 2", ss}},
      {"hyper c, p=7", hyper('c', 7), {Y, "kappa = 0, clause (b); hyperelliptic table, row c, char != 2,3", omega}},
      {"hyper c, p=3", hyper('c', 3), {N, "kappa = 0, clause (b); hyperelliptic table, row c, char = 3", ss}},
      {"hyper c, p=2", hyper('c', 2), {N, "kappa = 0, clause (b); hyperelliptic table, row c, char = 2", ss}},
      {"hyper d, p=13", hyper('d', 13), {Y, "kappa = 0, clause (b); hyperelliptic table, row d, char != 2,3", omega}},
      {"hyper d, p=3", hyper('d', 3), {N, "kappa = 0, clause (b); hyperelliptic table, row d, char = 3", ss}},
      {"hyper d, p=2", hyper('d', 2), {N, "kappa = 0, clause (b); hyperelliptic table, row d, char = 2", ss}},
      // Conditions inside a check-marked cell.
      {"hyper b, p=5, E0 supersingular", hyper('b', 5, false, true, true),
       {N, "kappa = 0, clause (b); hyperelliptic table, row b, char != 2,3", "E0 not ordinary; " + omega}},
      {"hyper a, p=2, E1 supersingular", hyper('a', 2, true, false, true),
       {N, "kappa = 0, clause (b); hyperelliptic table, row a, char = 2", "E1 not ordinary; " + omega}},
      {"hyper d, p=5, omega flag unset", hyper('d', 5, true, true, false),
       {N, "kappa = 0, clause (b); hyperelliptic table, row d, char != 2,3", "omega^(p-1) not trivial; " + omega}},
      {"hyper b, p=3, flags ignored", hyper('b', 3, false, false, false),
       {N, "kappa = 0, clause (b); hyperelliptic table, row b, char = 3", ss}},
      // kappa = 0, abelian.
      {"abelian ordinary", abelian(true, 5), {Y, kAbelian, ""}},
      {"abelian non-ordinary", abelian(false, 5), {N, kAbelian, "abelian surface is not ordinary"}},
      // kappa = 0, torsion canonical bundle.
      {"K3, p=5", plain(SurfaceClass::K3, 5), {N, kTorsionCanonical, ""}},
      {"K3, p=2", plain(SurfaceClass::K3, 2), {N, kTorsionCanonical, ""}},
      {"Enriques classical, p=3", enriques("classical", 3), {N, kTorsionCanonical, ""}},
      {"Enriques singular, p=2", enriques("singular", 2), {N, kTorsionCanonical, ""}},
      {"Enriques supersingular, p=2", enriques("supersingular", 2), {N, kTorsionCanonical, ""}},
      {"quasi-hyperelliptic, p=3", plain(SurfaceClass::QuasiHyperelliptic, 3), {N, kTorsionCanonical, ""}},
      // kappa >= 1.
      {"properly elliptic", plain(SurfaceClass::ProperlyElliptic, 7), {N, kKappaPositive, ""}},
      {"general type", plain(SurfaceClass::GeneralType, 2), {N, kKappaPositive, ""}},
      // kappa = -1, rational.
      {"P2", plain(SurfaceClass::RationalP2, 11), {Y, kP2, ""}},
      {"F0", fn(0, 2), {Y, kFn, ""}},
      {"F1", fn(1, 3), {Outcome::OutOfScope, kFn, "non-minimal, excluded by n ≠ 1"}},
      {"F2", fn(2, 3), {Y, kFn, ""}},
      {"F7", fn(7, 17), {Y, kFn, ""}},
      // kappa = -1, ruled.
      {"ruled over P1", ruled(0, 5), {Y, kRuledP1, ""}},
      {"ruled over ordinary E", ruled(1, 5, true), {Y, kRuledElliptic, ""}},
      {"ruled over supersingular E", ruled(1, 5, false),
       {N, kRuledBase, "elliptic base curve is supersingular"}},
      {"ruled over genus 2", ruled(2, 3), {N, kRuledBase, "base curve has genus >= 2"}},
  };
  return rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_table() {
  static const std::vector<GoldenRow> rows = build_golden();
  return rows;
}

}  // namespace frobw2
