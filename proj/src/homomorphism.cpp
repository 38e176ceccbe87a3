#include "nervetower/homomorphism.hpp"

namespace nervetower {

Homomorphism::Homomorphism(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m, bool check)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators())
        throw ValidationError("Homomorphism: matrix shape does not match presentations");
    if (check && !respects_relations())
        throw ValidationError("Homomorphism: matrix violates torsion relations");
}

bool Homomorphism::respects_relations() const {
    IntMatrix rt = target.relations();
    for (std::size_t i = 0; i < source.torsion.size(); ++i) {
        std::vector<Int> img = matrix.col(i);
        for (auto& e : img) e *= source.torsion[i];
        if (rt.cols() == 0) {
            for (const auto& e : img)
                if (e != 0) return false;
        } else if (!lattice_contains(rt, img)) {
            return false;
        }
    }
    return true;
}

bool Homomorphism::is_zero() const {
    return same_map_as(zero(source, target));
}

bool Homomorphism::same_map_as(const Homomorphism& o) const {
    if (source != o.source || target != o.target) return false;
    IntMatrix diff = matrix - o.matrix;
    IntMatrix rt = target.relations();
    for (std::size_t j = 0; j < diff.cols(); ++j) {
        std::vector<Int> c = diff.col(j);
        if (rt.cols() == 0) {
            for (const auto& e : c)
                if (e != 0) return false;
        } else if (!lattice_contains(rt, c)) {
            return false;
        }
    }
    return true;
}

IntMatrix Homomorphism::image_lattice_gens() const {
    return IntMatrix::hstack(matrix, target.relations());
}

bool Homomorphism::is_surjective() const { return hom_cokernel(*this).is_trivial(); }
bool Homomorphism::is_injective() const { return hom_kernel(*this).is_trivial(); }

Homomorphism Homomorphism::compose(const Homomorphism& other) const {
    if (other.target != source)
        throw ValidationError("Homomorphism: composition source/target mismatch");
    return Homomorphism(other.source, target, matrix * other.matrix, false);
}

FGAbelianGroup hom_kernel(const Homomorphism& h) {
    if (!h.respects_relations()) throw ValidationError("hom_kernel: malformed homomorphism");
    std::size_t m = h.source.num_generators();
    IntMatrix block = IntMatrix::hstack(h.matrix, h.target.relations());
    IntMatrix ker = integer_kernel(block);
    // project onto the source coordinates
    IntMatrix proj = ker.row_slice(0, m);
    IntMatrix super = IntMatrix::hstack(proj, h.source.relations());
    return lattice_quotient(super, h.source.relations());
}

FGAbelianGroup hom_image(const Homomorphism& h) {
    if (!h.respects_relations()) throw ValidationError("hom_image: malformed homomorphism");
    return lattice_quotient(h.image_lattice_gens(), h.target.relations());
}

FGAbelianGroup hom_cokernel(const Homomorphism& h) {
    if (!h.respects_relations()) throw ValidationError("hom_cokernel: malformed homomorphism");
    return cokernel(h.image_lattice_gens());
}

} // namespace nervetower
