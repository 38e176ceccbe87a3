#pragma once

#include "nervetower/abelian.hpp"

namespace nervetower {

/// Homomorphism between finitely generated abelian groups in normal form.
/// The matrix maps source generator coordinates to target generator
/// coordinates (rows = target generators, cols = source generators) and
/// must respect the torsion relations of both sides.
struct Homomorphism {
    FGAbelianGroup source;
    FGAbelianGroup target;
    IntMatrix matrix;

    Homomorphism() = default;
    Homomorphism(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m, bool check = true);

    static Homomorphism identity(const FGAbelianGroup& g) {
        return Homomorphism(g, g, IntMatrix::identity(g.num_generators()), false);
    }
    static Homomorphism zero(const FGAbelianGroup& src, const FGAbelianGroup& tgt) {
        return Homomorphism(src, tgt, IntMatrix::zero(tgt.num_generators(), src.num_generators()),
                            false);
    }

    /// Does the matrix send every source relation into the target relation
    /// lattice?
    bool respects_relations() const;

    bool is_zero() const;
    /// Same map modulo target relations?
    bool same_map_as(const Homomorphism& o) const;

    bool is_surjective() const;
    bool is_injective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Composite this∘other (other first).
    Homomorphism compose(const Homomorphism& other) const;

    /// Image lattice of the map inside the target presentation Z^n:
    /// spanned by the matrix columns together with the target relations.
    IntMatrix image_lattice_gens() const;
};

FGAbelianGroup hom_kernel(const Homomorphism& h);
FGAbelianGroup hom_image(const Homomorphism& h);
FGAbelianGroup hom_cokernel(const Homomorphism& h);

} // namespace nervetower
