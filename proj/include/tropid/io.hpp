#pragma once

#include <string>

#include "json.hpp"
#include "tropid/minmax.hpp"
#include "tropid/signature.hpp"

namespace tropid {

inline constexpr const char* kSignatureSchema = "tropid.signature/1";

nlohmann::json polytope_json(const LatticePolytope& p);
nlohmann::json degree_json(const DegreeSignature& s);
/// {"schema", "m", "n", "degrees": [{"d", "entries": [{"u", "polytope"}]}]}
nlohmann::json signature_json(const UTnSignature& s);

/// Compact canonical serialisation; byte equality iff signature equality.
std::string signature_key(const UTnSignature& s);
std::string degree_key(const DegreeSignature& s);

/// Planar staircase picture of up to two words with their degree-1 polygons.
std::string plot_svg(const std::vector<Word>& words, bool shade_a, bool shade_b, bool chain_boxes);

}  // namespace tropid
