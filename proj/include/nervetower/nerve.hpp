#pragma once

#include "nervetower/simplicial.hpp"

#include <optional>
#include <vector>

namespace nervetower {

/// Finite open cover of a finite point carrier. Points are indices
/// 0..num_points-1; each cover set is a sorted list of member points.
struct Cover {
    std::size_t num_points = 0;
    std::vector<std::string> set_names;
    std::vector<std::vector<std::size_t>> members;

    /// Throws ValidationError on out-of-range points, duplicate or empty
    /// set names, unsorted/duplicated members, or uncovered points.
    void validate() const;
};

/// Finite metric space given by a symmetric rational distance matrix.
struct MetricSpace {
    std::vector<std::string> point_names;
    std::vector<std::vector<Rat>> dist;

    void validate() const;
};

/// Cech nerve: one vertex per cover set, a simplex per family of sets with
/// a common point, up to dimension dim_cap.
SimplicialComplex cech_nerve(const Cover& c, int dim_cap = 4);

/// Vietoris complex: one vertex per point, a simplex per point set lying in
/// a common cover set, up to dimension dim_cap. Dowker duality pairs its
/// homology with the Cech nerve's.
SimplicialComplex vietoris_nerve(const Cover& c, int dim_cap = 4);

/// For each fine set, the smallest-index coarse superset; throws
/// ValidationError unless `fine` refines `coarse` (same carrier).
std::vector<std::size_t> refinement_assignment(const Cover& fine, const Cover& coarse);

/// Simplicial projection between Cech nerves induced by the refinement.
SimplicialMap refinement_projection(const Cover& fine, const Cover& coarse,
                                    const SimplicialComplex& fine_nerve,
                                    const SimplicialComplex& coarse_nerve);
SimplicialMap refinement_projection(const Cover& fine, const Cover& coarse, int dim_cap = 4);

/// Open-ball cover of a finite metric space: one ball of the given radius
/// around each point.
Cover ball_cover(const MetricSpace& ms, const Rat& radius);

/// Circle machinery. Points live on the circle R/Z, measured in turns.
/// The cover lambda_m consists of the 4m open arcs
///   U(i,m) = ((i-1)/(4m) + 1/(16m), (i+1)/(4m) + 1/(16m)),  i = 0..4m-1,
/// whose nerve is the 4m-cycle.
bool circle_arc_contains(const Rat& t, std::size_t i, std::size_t m);

/// Restrict lambda_m to a finite carrier; throws if the nerve would not be
/// the 4m-cycle (empty arc or missing/extra overlap).
Cover circle_cover(const std::vector<Rat>& carrier, std::size_t m);

/// Standalone carrier for a single level: a uniform half-offset grid fine
/// enough that the nerve of lambda_m is exactly C_{4m}.
Cover circle_cover(std::size_t m);

/// Shared carrier supporting lambda_1 .. lambda_max_m simultaneously, with
/// every lambda_{m+1} refining lambda_m on the carrier. Points are chosen
/// inside the arc overlaps while avoiding the slivers of fine arcs that
/// stick out of their best-fitting coarse arc (the literal arcs are not
/// nested, so a uniform grid does not work).
std::vector<Rat> circle_tower_carrier(std::size_t max_m);

} // namespace nervetower
