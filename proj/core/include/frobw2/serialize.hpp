#pragma once

// JSON text formats for lifts, surface descriptors and verdicts.
//   lift:       {"p", "q", "nvars", "laurent_mask": [bool...], "corrections": [poly...]}
//   descriptor: {"class", "p", ...class-specific fields}
//   verdict:    {"outcome", "citation", "note"?}

#include <string>
#include <string_view>

#include "frobw2/classify.hpp"
#include "frobw2/froblift.hpp"

namespace frobw2 {

std::string lift_to_json(const AffineChartLift& F);
/// ParseError on malformed JSON, ShapeError / UnsupportedField on bad data.
AffineChartLift lift_from_json(std::string_view text);

std::string descriptor_to_json(const SurfaceDescriptor& d);
/// ParseError on malformed JSON, DescriptorError on bad fields.
SurfaceDescriptor descriptor_from_json(std::string_view text);

std::string verdict_to_json(const Verdict& v);

}  // namespace frobw2
