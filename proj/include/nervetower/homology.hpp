#pragma once

#include "nervetower/homomorphism.hpp"
#include "nervetower/simplicial.hpp"

namespace nervetower {

/// Boundary matrix of degree n (C_n -> C_{n-1}) over the fixed vertex
/// order, alternating signs. Degree 0 yields a 0 x #vertices matrix.
IntMatrix boundary_matrix(const SimplicialComplex& k, int n);

/// Augmentation row (1 x #vertices, all ones).
IntMatrix augmentation_row(const SimplicialComplex& k);

/// Chain map matrix in degree n induced by f (degenerate images go to 0).
IntMatrix chain_map_matrix(const SimplicialMap& f, int n);

/// H_n(K; Z) or H_n(K; Z/m) as an abstract group (m = 0 means Z; m = 1 is
/// rejected). Mod-m values come from the integer machinery via universal
/// coefficients.
FGAbelianGroup homology(const SimplicialComplex& k, int n, const Int& m = 0, bool reduced = false);

/// H^n via the transposed boundary matrices.
FGAbelianGroup cohomology(const SimplicialComplex& k, int n, const Int& m = 0,
                          bool reduced = false);

/// H_0 .. H_max_degree in one pass, decomposing each boundary matrix once.
std::vector<FGAbelianGroup> homology_table(const SimplicialComplex& k, int max_degree,
                                           const Int& m = 0, bool reduced = false);

/// One table per requested coefficient modulus, sharing a single integral
/// decomposition of the boundary matrices.
std::vector<std::vector<FGAbelianGroup>> homology_tables(const SimplicialComplex& k,
                                                         int max_degree,
                                                         const std::vector<Int>& moduli,
                                                         bool reduced = false);

/// A homology (or cohomology) group together with generator representatives
/// and a way to express classes in those generators, so induced maps can be
/// computed. Complexes of dimension <= 1 and degree 0 in general use a
/// spanning-forest fast path; otherwise exact lattice algebra over the
/// chain groups.
class HomologyBasis {
  public:
    static HomologyBasis homology(const SimplicialComplex& k, int n, const Int& m, bool reduced);
    static HomologyBasis cohomology(const SimplicialComplex& k, int n, const Int& m, bool reduced);

    const FGAbelianGroup& group() const { return group_; }
    int degree() const { return degree_; }
    const Int& modulus() const { return modulus_; }
    bool reduced() const { return reduced_; }
    bool dual() const { return dual_; }

    /// Representative chain (cochain) of generator g, as a coefficient
    /// vector over the degree-n simplices.
    std::vector<Int> generator_chain(std::size_t g) const;

    /// Coordinates of a cycle (cocycle) class in the generator basis.
    /// Torsion coordinates are normalized into [0, t_i).
    std::vector<Int> coordinates(const std::vector<Int>& chain) const;

    std::size_t chain_length() const { return chain_length_; }

  private:
    static HomologyBasis build(const SimplicialComplex& k, int n, const Int& m, bool reduced,
                               bool dual);
    void build_graph_degree0(const SimplicialComplex& k);
    void build_graph_degree1(const SimplicialComplex& k);
    void build_general(const IntMatrix& d_in, const IntMatrix& d_out);
    std::vector<Int> normalize(std::vector<Int> coords) const;

    FGAbelianGroup group_;
    int degree_ = 0;
    Int modulus_ = 0;
    bool reduced_ = false;
    bool dual_ = false;
    std::size_t chain_length_ = 0;

    enum class Path { trivial, graph0, graph1, general } path_ = Path::trivial;

    // graph paths
    std::vector<int> component_of_;          // per vertex
    std::vector<std::size_t> comp_rep_;      // representative vertex per component
    std::vector<std::size_t> gen_component_; // per generator (degree 0)
    std::size_t base_component_ = 0;         // reduced degree 0
    IntMatrix fundamental_cycles_;           // E x g (degree 1)
    std::vector<std::size_t> nontree_edge_;  // per generator (degree 1)

    // general path
    IntMatrix gen_chains_; // chain_length x g
    IntMatrix expr_;       // [gen_chains | kill lattice gens]
};

/// Induced map on homology H_n(source) -> H_n(target) of a simplicial map.
Homomorphism induced_hom(const SimplicialMap& f, int n, const Int& m = 0, bool reduced = false);

/// Induced map on cohomology H^n(target) -> H^n(source) (contravariant).
Homomorphism induced_cohom(const SimplicialMap& f, int n, const Int& m = 0, bool reduced = false);

/// Induced map between precomputed bases (must match f's degree/flags).
Homomorphism induced_map(const SimplicialMap& f, const HomologyBasis& source_basis,
                         const HomologyBasis& target_basis);

} // namespace nervetower
