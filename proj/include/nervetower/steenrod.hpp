#pragma once

#include "nervetower/nerve.hpp"
#include "nervetower/tower.hpp"

#include <functional>

namespace nervetower {

/// How the nerve tower continues beyond its last listed stage.
enum class TailPolicy {
    none,              // unknown continuation
    identity,          // homology stabilized: bonds are isomorphisms from here on
    repeat_last_bond,  // the last induced bond repeats as an endomorphism
    surjective_bonds,  // all bonds induce surjections in homology, forever
};

/// Tower of nerves K_0 <- K_1 <- ... with simplicial bonds[i] : K_{i+1} -> K_i,
/// presenting a compact metric space as an inverse limit of finite covers.
struct NerveTower {
    std::vector<SimplicialComplex> complexes;
    std::vector<SimplicialMap> bonds;
    TailPolicy tail = TailPolicy::none;

    void validate() const;
};

/// Degree-n homology tower of the nerves, with the tail policy translated
/// into tower tail data. `repeat_last_bond` requires the last two stages to
/// have equal homology normal forms.
GroupTower homology_tower(const NerveTower& t, int n, const Int& m = 0, bool reduced = true);

/// Degree-n cohomology directed system (contravariant along the bonds).
DirectedSystem cohomology_system(const NerveTower& t, int n, const Int& m = 0,
                                 bool reduced = true);

/// One degree of the Milnor sequence
///   0 -> lim^1 H_{n+1}(K_i) -> H^st_n(X) -> lim H_n(K_i) -> 0.
struct SteenrodEntry {
    enum class Status {
        exact,                // lim^1 vanishes and lim is known: the group below
        truncated,            // lim^1 vanishes but lim is only windowed
        extension_unresolved, // lim^1 uncountable: no closed form
        inconclusive,
    };
    int degree = 0;
    Status status = Status::inconclusive;
    FGAbelianGroup group;     // exact only
    TowerAnalysis lim_term;   // degree n tower
    TowerAnalysis lim1_term;  // degree n+1 tower
};

SteenrodEntry steenrod_homology(const NerveTower& t, int n, const Int& m = 0,
                                bool reduced = true, std::size_t window = 8);

/// Cech cohomology in degree n as a direct limit.
ColimResult cech_cohomology(const NerveTower& t, int n, const Int& m = 0, bool reduced = true);

/// Movability proxy: the degree-wise Mittag-Leffler condition up to
/// max_degree. When it holds, every lim^1 term vanishes and Steenrod
/// homology agrees with the naive limit of Cech homology.
bool movability_proxy(const NerveTower& t, int max_degree, const Int& m = 0,
                      bool reduced = true, std::size_t window = 8);

/// Built-in towers. Names and parameters:
///   point                      one-vertex constant tower
///   circle_constant [depth]    constant 4-cycle tower, identity bonds
///   circle_lemma_tower [depth] arc covers lambda_1..lambda_depth of the
///                              circle on a shared carrier, preceded by the
///                              trivial cover; nerves C_4, C_8, ...
///   solenoid <p> [depth]       cycles C_{4p^i}, winding bonds, p-adic tail
///   cantor [depth]             discrete 2^k-point stages, halving bonds
NerveTower builtin_space(const std::string& name, const std::vector<Int>& params = {});

/// Names accepted by builtin_space.
std::vector<std::string> builtin_space_names();

/// Run fn(i) for i in [0, n) on up to NERVETOWER_THREADS workers
/// (default: hardware concurrency).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace nervetower
