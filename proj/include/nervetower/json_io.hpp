#pragma once

#include "nervetower/steenrod.hpp"

#include <json.hpp>

namespace nervetower::io {

using json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json group_to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const json& j);

json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

json cover_to_json(const Cover& c);
Cover cover_from_json(const json& j);

json group_tower_to_json(const GroupTower& t);
GroupTower group_tower_from_json(const json& j);

json nerve_tower_to_json(const NerveTower& t);
NerveTower nerve_tower_from_json(const json& j);

json analysis_to_json(const TowerAnalysis& a);
json colim_to_json(const ColimResult& c);
json steenrod_to_json(const SteenrodEntry& e);

/// Deterministic serialization: 2-space indent, trailing newline.
std::string dump(const json& j);

} // namespace nervetower::io
