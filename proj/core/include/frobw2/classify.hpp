#pragma once

// Decision procedure: does a smooth projective minimal surface over an
// algebraically closed field of characteristic p admit a Frobenius lift over
// W2(k)? Verdicts are read off descriptor flags only.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobw2/curves.hpp"

namespace frobw2 {

enum class SurfaceClass {
  RationalP2,
  RationalFn,
  Ruled,
  Abelian,
  K3,
  Enriques,
  Hyperelliptic,
  QuasiHyperelliptic,
  ProperlyElliptic,
  GeneralType,
};

std::string_view to_string(SurfaceClass c);
SurfaceClass parse_surface_class(std::string_view s);  // DescriptorError

struct SurfaceDescriptor {
  std::uint32_t p = 0;
  SurfaceClass cls = SurfaceClass::RationalP2;
  std::optional<int> n;                     // rational_Fn
  std::optional<int> base_genus;            // ruled
  std::optional<bool> base_is_ordinary;     // ruled, genus 1
  std::optional<bool> is_ordinary;          // abelian
  std::optional<std::string> variant;       // enriques: classical | supersingular | singular
  std::optional<char> type;                 // hyperelliptic: 'a'..'d'
  std::optional<bool> e0_ordinary;          // hyperelliptic
  std::optional<bool> e1_ordinary;          // hyperelliptic
  std::optional<bool> omega_trivial;        // hyperelliptic: omega^(p-1) = O_X

  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

/// Throws DescriptorError on missing, extra-invalid or inconsistent fields.
void validate(const SurfaceDescriptor& d);

enum class Outcome { Liftable, NotLiftable, OutOfScope };
std::string_view to_string(Outcome o);
Outcome parse_outcome(std::string_view s);

struct Verdict {
  Outcome outcome = Outcome::OutOfScope;
  std::string citation;
  std::string note;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict classify_surface(const SurfaceDescriptor& d);

struct GoldenRow {
  std::string label;
  SurfaceDescriptor descriptor;
  Verdict expected;
};

/// Every clause of the classification plus all twelve hyperelliptic table
/// cells, with expected verdicts written out literally.
const std::vector<GoldenRow>& golden_table();

}  // namespace frobw2
