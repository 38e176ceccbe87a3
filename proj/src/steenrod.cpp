#include "nervetower/steenrod.hpp"

#include "nervetower/homology.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace nervetower {

namespace {

std::size_t worker_count() {
    if (const char* env = std::getenv("NERVETOWER_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertices() != b.vertices() || a.dimension() != b.dimension()) return false;
    for (int n = 0; n <= a.dimension(); ++n)
        if (a.simplices(n) != b.simplices(n)) return false;
    return true;
}

} // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void NerveTower::validate() const {
    if (complexes.empty()) throw ValidationError("nerve tower: no stages");
    if (bonds.size() + 1 != complexes.size())
        throw ValidationError("nerve tower: need one bond per consecutive stage pair");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (!same_complex(bonds[i].source(), complexes[i + 1]) ||
            !same_complex(bonds[i].target(), complexes[i]))
            throw ValidationError("nerve tower: bond " + std::to_string(i) +
                                  " endpoints mismatch");
    }
    if (tail == TailPolicy::repeat_last_bond && complexes.size() < 2)
        throw ValidationError("nerve tower: repeat_last_bond needs at least two stages");
}

GroupTower homology_tower(const NerveTower& t, int n, const Int& m, bool reduced) {
    t.validate();
    std::size_t stages = t.complexes.size();
    std::vector<HomologyBasis> bases(stages);
    parallel_for(stages, [&](std::size_t i) {
        bases[i] = HomologyBasis::homology(t.complexes[i], n, m, reduced);
    });

    GroupTower tower;
    for (const auto& b : bases) tower.stages.push_back(b.group());
    for (std::size_t i = 0; i + 1 < stages; ++i)
        tower.bonds.push_back(induced_map(t.bonds[i], bases[i + 1], bases[i]));

    switch (t.tail) {
        case TailPolicy::none: tower.tail = TailKind::none; break;
        case TailPolicy::identity:
            tower.tail = TailKind::periodic;
            tower.tail_endo = Homomorphism::identity(tower.stages.back());
            break;
        case TailPolicy::repeat_last_bond: {
            if (tower.stages.back() != tower.stages[stages - 2])
                throw ValidationError(
                    "nerve tower: repeat_last_bond needs equal homology at the last two "
                    "stages in degree " + std::to_string(n));
            tower.tail = TailKind::periodic;
            tower.tail_endo = Homomorphism(tower.stages.back(), tower.stages.back(),
                                           tower.bonds.back().matrix);
            break;
        }
        case TailPolicy::surjective_bonds: tower.tail = TailKind::surjective_promise; break;
    }
    return tower;
}

DirectedSystem cohomology_system(const NerveTower& t, int n, const Int& m, bool reduced) {
    t.validate();
    std::size_t stages = t.complexes.size();
    std::vector<HomologyBasis> bases(stages);
    parallel_for(stages, [&](std::size_t i) {
        bases[i] = HomologyBasis::cohomology(t.complexes[i], n, m, reduced);
    });

    DirectedSystem sys;
    for (const auto& b : bases) sys.stages.push_back(b.group());
    for (std::size_t i = 0; i + 1 < stages; ++i)
        sys.bonds.push_back(induced_map(t.bonds[i], bases[i], bases[i + 1]));

    switch (t.tail) {
        case TailPolicy::none: sys.tail = TailKind::none; break;
        case TailPolicy::identity:
            sys.tail = TailKind::periodic;
            sys.tail_endo = Homomorphism::identity(sys.stages.back());
            break;
        case TailPolicy::repeat_last_bond: {
            if (sys.stages.back() != sys.stages[stages - 2])
                throw ValidationError(
                    "nerve tower: repeat_last_bond needs equal cohomology at the last two "
                    "stages in degree " + std::to_string(n));
            sys.tail = TailKind::periodic;
            sys.tail_endo =
                Homomorphism(sys.stages.back(), sys.stages.back(), sys.bonds.back().matrix);
            break;
        }
        case TailPolicy::surjective_bonds: sys.tail = TailKind::surjective_promise; break;
    }
    return sys;
}

SteenrodEntry steenrod_homology(const NerveTower& t, int n, const Int& m, bool reduced,
                                std::size_t window) {
    SteenrodEntry e;
    e.degree = n;
    e.lim_term = analyze_tower(homology_tower(t, n, m, reduced), window);
    e.lim1_term = analyze_tower(homology_tower(t, n + 1, m, reduced), window);

    if (e.lim1_term.lim1 == Lim1Class::zero) {
        if (e.lim_term.limit.kind == LimResult::Kind::exact) {
            e.status = SteenrodEntry::Status::exact;
            e.group = e.lim_term.limit.group;
        } else {
            e.status = SteenrodEntry::Status::truncated;
        }
    } else if (e.lim1_term.lim1 == Lim1Class::nonzero_uncountable) {
        e.status = SteenrodEntry::Status::extension_unresolved;
    } else {
        e.status = SteenrodEntry::Status::inconclusive;
    }
    return e;
}

ColimResult cech_cohomology(const NerveTower& t, int n, const Int& m, bool reduced) {
    return direct_limit(cohomology_system(t, n, m, reduced));
}

bool movability_proxy(const NerveTower& t, int max_degree, const Int& m, bool reduced,
                      std::size_t window) {
    for (int n = 0; n <= max_degree; ++n) {
        TowerAnalysis a = analyze_tower(homology_tower(t, n, m, reduced), window);
        if (a.ml != MLStatus::holds) return false;
    }
    return true;
}

std::vector<std::string> builtin_space_names() {
    return {"point", "circle_constant", "circle_lemma_tower", "solenoid", "cantor"};
}

namespace {

SimplicialComplex one_vertex_complex(const std::string& name) {
    return SimplicialComplex({name}, {{name}});
}

NerveTower point_space() {
    NerveTower t;
    t.complexes.push_back(one_vertex_complex("0"));
    t.tail = TailPolicy::identity;
    return t;
}

NerveTower circle_constant_space(std::size_t depth) {
    NerveTower t;
    SimplicialComplex c4 = cycle_complex(4);
    for (std::size_t i = 0; i < depth; ++i) t.complexes.push_back(c4);
    for (std::size_t i = 0; i + 1 < depth; ++i)
        t.bonds.push_back(SimplicialMap::identity(c4));
    t.tail = TailPolicy::identity;
    return t;
}

NerveTower circle_lemma_space(std::size_t depth) {
    std::vector<Rat> carrier = circle_tower_carrier(depth);
    std::vector<Cover> covers;
    for (std::size_t m = 1; m <= depth; ++m) covers.push_back(circle_cover(carrier, m));

    NerveTower t;
    t.complexes.push_back(one_vertex_complex("X"));
    for (const auto& c : covers) t.complexes.push_back(cech_nerve(c));

    std::vector<std::size_t> to_point(t.complexes[1].num_vertices(), 0);
    t.bonds.push_back(SimplicialMap(t.complexes[1], t.complexes[0], to_point));
    for (std::size_t m = 1; m < depth; ++m)
        t.bonds.push_back(refinement_projection(covers[m], covers[m - 1], t.complexes[m + 1],
                                                t.complexes[m]));
    t.tail = TailPolicy::identity;
    return t;
}

NerveTower solenoid_space(const Int& p, std::size_t depth) {
    if (p < 2) throw ValidationError("solenoid: winding number must be at least 2");
    if (depth < 2) throw ValidationError("solenoid: depth must be at least 2");
    std::size_t pl = static_cast<std::size_t>(static_cast<unsigned long>(p));

    NerveTower t;
    std::vector<std::size_t> sizes{4};
    for (std::size_t i = 1; i < depth; ++i) sizes.push_back(sizes.back() * pl);
    for (auto n : sizes) t.complexes.push_back(cycle_complex(n));
    for (std::size_t i = 0; i + 1 < depth; ++i) {
        std::vector<std::size_t> vmap(sizes[i + 1]);
        for (std::size_t j = 0; j < sizes[i + 1]; ++j) vmap[j] = j % sizes[i];
        t.bonds.push_back(SimplicialMap(t.complexes[i + 1], t.complexes[i], vmap));
    }
    t.tail = TailPolicy::repeat_last_bond;
    return t;
}

NerveTower cantor_space(std::size_t depth) {
    NerveTower t;
    for (std::size_t k = 0; k <= depth; ++k)
        t.complexes.push_back(discrete_complex(std::size_t(1) << k));
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<std::size_t> vmap(std::size_t(1) << (k + 1));
        for (std::size_t j = 0; j < vmap.size(); ++j) vmap[j] = j / 2;
        t.bonds.push_back(SimplicialMap(t.complexes[k + 1], t.complexes[k], vmap));
    }
    t.tail = TailPolicy::surjective_bonds;
    return t;
}

std::size_t param_or(const std::vector<Int>& params, std::size_t index, std::size_t fallback) {
    if (index >= params.size()) return fallback;
    if (params[index] < 1) throw ValidationError("builtin_space: parameter must be positive");
    return static_cast<std::size_t>(static_cast<unsigned long>(params[index]));
}

} // namespace

NerveTower builtin_space(const std::string& name, const std::vector<Int>& params) {
    if (name == "point") return point_space();
    if (name == "circle_constant") return circle_constant_space(param_or(params, 0, 3));
    if (name == "circle_lemma_tower") return circle_lemma_space(param_or(params, 0, 3));
    if (name == "solenoid") {
        if (params.empty()) throw ValidationError("solenoid: missing winding number p");
        return solenoid_space(params[0], param_or(params, 1, 5));
    }
    if (name == "cantor") return cantor_space(param_or(params, 0, 5));
    throw ValidationError("builtin_space: unknown space '" + name + "'");
}

} // namespace nervetower
