#pragma once

#include "nervetower/simplicial.hpp"

namespace nervetower {

/// Simplicial mapping cone C_f of f : K -> L, built on the simplicial
/// mapping cylinder (source vertices ordered so that f is monotone) with a
/// cone point over the source copy. Vertex names are prefixed "s:" (source
/// copy) and "t:" (target copy); the cone point is "*".
struct MappingCone {
    SimplicialComplex complex;
    SimplicialMap target_inclusion; // L -> C_f
};

MappingCone mapping_cone(const SimplicialMap& f);

} // namespace nervetower
