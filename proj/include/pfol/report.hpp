#pragma once

#include "json.hpp"
#include "pfol/document.hpp"
#include "pfol/holonomy.hpp"
#include "pfol/surfaces.hpp"

namespace pfol {

// stable-key JSON: insertion order is preserved and deterministic
using Json = nlohmann::ordered_json;

std::string emit_report(const Json& j);

Json to_json(const CurvatureData& c);
Json to_json(const NiReport& r);
Json to_json(const DeltaInvarianceReport& r);
Json to_json(const RiccatiPencil& r);
Json to_json(const HolonomyPresentation& h);
Json to_json(const IpClassification& c);
Json to_json(const SideConditionsReport& r);
Json to_json(const HopfSectionMeets& m);

}  // namespace pfol
