#pragma once

#include "nervetower/homomorphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nervetower {

/// What is known about the tower beyond its last listed stage.
enum class TailKind {
    none,               // nothing; results beyond a window are truncations
    periodic,           // the last stage repeats with a fixed endomorphism
    surjective_promise, // all bonds, listed and future, are surjective
};

/// Inverse tower of finitely generated abelian groups
///   G_0 <- G_1 <- ... <- G_N,   bonds[i] : G_{i+1} -> G_i.
struct GroupTower {
    std::vector<FGAbelianGroup> stages;
    std::vector<Homomorphism> bonds;
    TailKind tail = TailKind::none;
    std::optional<Homomorphism> tail_endo; // periodic only: G_N -> G_N

    void validate() const;
    std::size_t depth() const { return stages.size(); }
};

enum class MLStatus { holds, fails, inconclusive };
enum class Lim1Class { zero, nonzero_uncountable, unknown };

/// Inverse limit, as far as it is determined. `exact` carries the limit
/// group itself; `truncated` carries only the image of the last listed
/// stage in the stage `window` steps back, which every deeper tower
/// extension factors through.
struct LimResult {
    enum class Kind { exact, truncated } kind = Kind::truncated;
    FGAbelianGroup group;
    std::size_t window = 0; // truncated only
};

struct TowerAnalysis {
    MLStatus ml = MLStatus::inconclusive;
    std::size_t ml_stable_at = 0; // tail iterations until image stabilized
    std::string ml_reason;
    Lim1Class lim1 = Lim1Class::unknown;
    LimResult limit;
};

/// Mittag-Leffler decision, lim, and lim^1 class for the tower. For
/// towers of finitely generated abelian groups lim^1 is either zero
/// (exactly when Mittag-Leffler holds) or uncountable.
TowerAnalysis analyze_tower(const GroupTower& t, std::size_t window = 8);

/// Directed system G_0 -> G_1 -> ... -> G_N, bonds[i] : G_i -> G_{i+1}.
struct DirectedSystem {
    std::vector<FGAbelianGroup> stages;
    std::vector<Homomorphism> bonds;
    TailKind tail = TailKind::none;
    std::optional<Homomorphism> tail_endo; // periodic only

    void validate() const;
};

/// Direct limit. `localized` encodes Z[1/d]^rank + torsion_part, which is
/// not finitely generated and so cannot live in an FGAbelianGroup.
struct ColimResult {
    enum class Kind { exact, localized, truncated } kind = Kind::truncated;
    FGAbelianGroup group; // exact: the colimit; truncated: last stage
    std::size_t local_rank = 0;
    Int local_denominator = 0;
    FGAbelianGroup torsion_part;
};

ColimResult direct_limit(const DirectedSystem& s);

} // namespace nervetower
