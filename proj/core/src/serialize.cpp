#include "frobw2/serialize.hpp"

#include <algorithm>

#include "json.hpp"

namespace frobw2 {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::uint32_t field_order(std::uint32_t p, std::uint32_t q) {
  std::uint32_t m = 1;
  for (std::uint64_t r = p; r < q; r *= p) ++m;
  std::uint64_t check = 1;
  for (std::uint32_t i = 0; i < m; ++i) check *= p;
  if (check != q) raise(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " is not a power of p");
  return m;
}

}  // namespace

std::string lift_to_json(const AffineChartLift& F) {
  json j;
  j["p"] = F.p();
  j["q"] = F.field().q();
  j["nvars"] = F.nvars();
  json mask = json::array();
  for (std::size_t i = 0; i < F.nvars(); ++i) mask.push_back(F.is_laurent(i));
  j["laurent_mask"] = mask;
  json corr = json::array();
  for (const auto& c : F.corrections()) corr.push_back(to_string(c));
  j["corrections"] = corr;
  return j.dump();
}

AffineChartLift lift_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto q = j.contains("q") ? j.at("q").get<std::uint32_t>() : p;
    const auto nvars = j.at("nvars").get<std::size_t>();
    if (nvars > kMaxVars) raise(ErrorKind::ShapeError, "too many variables");
    const CoeffRing& k = CoeffRing::fq(p, field_order(p, q));
    unsigned mask = 0;
    if (j.contains("laurent_mask")) {
      const json& m = j.at("laurent_mask");
      if (m.is_number_unsigned()) {
        mask = m.get<unsigned>();
      } else {
        if (m.size() != nvars) raise(ErrorKind::ShapeError, "laurent_mask length differs from nvars");
        for (std::size_t i = 0; i < nvars; ++i)
          if (m.at(i).get<bool>()) mask |= 1u << i;
      }
    }
    std::vector<Poly> corrections;
    for (const auto& c : j.at("corrections")) {
      if (c.is_number()) corrections.push_back(Poly::constant(k, nvars, k.from_int(c.get<std::int64_t>())));
      else corrections.push_back(parse_poly(c.get<std::string>(), k, nvars));
    }
    return make_lift(k, nvars, mask, std::move(corrections));
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, std::string("bad lift JSON: ") + e.what());
  }
}

std::string descriptor_to_json(const SurfaceDescriptor& d) {
  json j;
  j["class"] = std::string(to_string(d.cls));
  j["p"] = d.p;
  if (d.n) j["n"] = *d.n;
  if (d.base_genus) j["base_genus"] = *d.base_genus;
  if (d.base_is_ordinary) j["base_is_ordinary"] = *d.base_is_ordinary;
  if (d.is_ordinary) j["is_ordinary"] = *d.is_ordinary;
  if (d.variant) j["variant"] = *d.variant;
  if (d.type) j["type"] = std::string(1, *d.type);
  if (d.e0_ordinary) j["E0_ordinary"] = *d.e0_ordinary;
  if (d.e1_ordinary) j["E1_ordinary"] = *d.e1_ordinary;
  if (d.omega_trivial) j["omega_pow_p_minus_1_trivial"] = *d.omega_trivial;
  return j.dump();
}

SurfaceDescriptor descriptor_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) raise(ErrorKind::DescriptorError, "descriptor must be a JSON object");
  SurfaceDescriptor d;
  auto get_bool = [&](const std::string& key) -> std::optional<bool> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_boolean()) raise(ErrorKind::DescriptorError, key + " must be a boolean");
    return j[key].get<bool>();
  };
  auto get_int = [&](const std::string& key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) raise(ErrorKind::DescriptorError, key + " must be an integer");
    return j[key].get<int>();
  };
  for (const auto& [key, _] : j.items()) {
    static const char* known[] = {"class", "p", "n", "base_genus", "base_is_ordinary",
                                  "is_ordinary", "variant", "type", "E0_ordinary",
                                  "E1_ordinary", "omega_pow_p_minus_1_trivial"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      raise(ErrorKind::DescriptorError, "unknown descriptor field '" + key + "'");
  }
  if (!j.contains("class") || !j["class"].is_string())
    raise(ErrorKind::DescriptorError, "descriptor needs a string 'class'");
  d.cls = parse_surface_class(j["class"].get<std::string>());
  const auto p = get_int("p");
  if (!p) raise(ErrorKind::DescriptorError, "descriptor needs 'p'");
  if (*p < 0) raise(ErrorKind::DescriptorError, "p must be positive");
  d.p = static_cast<std::uint32_t>(*p);
  d.n = get_int("n");
  d.base_genus = get_int("base_genus");
  d.base_is_ordinary = get_bool("base_is_ordinary");
  d.is_ordinary = get_bool("is_ordinary");
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) raise(ErrorKind::DescriptorError, "variant must be a string");
    d.variant = j["variant"].get<std::string>();
  }
  if (j.contains("type")) {
    if (!j["type"].is_string() || j["type"].get<std::string>().size() != 1)
      raise(ErrorKind::DescriptorError, "type must be one of \"a\", \"b\", \"c\", \"d\"");
    d.type = j["type"].get<std::string>()[0];
  }
  d.e0_ordinary = get_bool("E0_ordinary");
  d.e1_ordinary = get_bool("E1_ordinary");
  d.omega_trivial = get_bool("omega_pow_p_minus_1_trivial");
  validate(d);
  return d;
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["citation"] = v.citation;
  if (!v.note.empty()) j["note"] = v.note;
  return j.dump();
}

}  // namespace frobw2
