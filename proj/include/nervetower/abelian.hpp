#pragma once

#include "nervetower/smith.hpp"

#include <string>
#include <vector>

namespace nervetower {

/// Finitely generated abelian group in invariant normal form:
/// Z^free_rank + Z/t1 + ... + Z/tk with 2 <= t1 | t2 | ... | tk.
/// Two values are isomorphic groups iff they compare equal.
///
/// A value also fixes a generator basis: torsion generators first
/// (orders t1..tk), then free generators. Homomorphism matrices act
/// on this basis.
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    FGAbelianGroup() = default;
    FGAbelianGroup(std::size_t rank, std::vector<Int> tors)
        : free_rank(rank), torsion(std::move(tors)) {
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw ValidationError("FGAbelianGroup: torsion entry < 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw ValidationError("FGAbelianGroup: torsion divisibility chain broken");
        }
    }

    static FGAbelianGroup trivial() { return FGAbelianGroup(); }
    static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
    static FGAbelianGroup cyclic(const Int& n) {
        if (n == 0) return free(1);
        return FGAbelianGroup(0, {abs(Int(n))});
    }

    /// Invariant normal form of an arbitrary list of cyclic orders
    /// (0 meaning an infinite cyclic summand), plus extra free rank.
    static FGAbelianGroup from_cyclic_orders(std::vector<Int> orders, std::size_t extra_rank = 0);

    std::size_t num_generators() const { return torsion.size() + free_rank; }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const { // only meaningful when finite
        Int o = 1;
        for (const auto& t : torsion) o *= t;
        return o;
    }
    /// Order of generator i (0 for infinite order).
    Int generator_order(std::size_t i) const { return i < torsion.size() ? torsion[i] : Int(0); }

    /// Relation matrix: columns t_i * e_i over the generator basis.
    IntMatrix relations() const {
        IntMatrix r(num_generators(), torsion.size());
        for (std::size_t i = 0; i < torsion.size(); ++i) r(i, i) = torsion[i];
        return r;
    }

    bool operator==(const FGAbelianGroup& o) const = default;

    std::string to_string() const;
};

/// Cokernel Z^rows / im(A), in normal form.
FGAbelianGroup cokernel(const IntMatrix& a);

/// Quotient of the column lattice of `super_gens` by the column lattice of
/// `sub_gens` (both in the same ambient Z^n; sub must be contained in super).
FGAbelianGroup lattice_quotient(const IntMatrix& super_gens, const IntMatrix& sub_gens);

} // namespace nervetower
