#include "nervetower/tower.hpp"

#include <algorithm>

namespace nervetower {

namespace {

bool is_diagonal(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

Int det_via_snf(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    if (s.rank < m.rows()) return 0;
    Int d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) d *= s.d(i, i);
    return d; // sign dropped; only |det| matters here
}

// image of the k-th iterate of the endo, as a subgroup lattice of Z^g
// containing the relations
IntMatrix image_lattice(const IntMatrix& power, const IntMatrix& relations) {
    return lattice_basis(IntMatrix::hstack(power, relations));
}

Homomorphism iterate(const Homomorphism& f, std::size_t k) {
    IntMatrix m = IntMatrix::identity(f.matrix.rows());
    for (std::size_t i = 0; i < k; ++i) m = f.matrix * m;
    return Homomorphism(f.source, f.target, m, false);
}

// bond composite G_hi -> G_lo (hi >= lo) of an inverse tower
Homomorphism tower_composite(const GroupTower& t, std::size_t hi, std::size_t lo) {
    Homomorphism h = Homomorphism::identity(t.stages[hi]);
    for (std::size_t i = hi; i > lo; --i) h = t.bonds[i - 1].compose(h);
    return h;
}

// eventual image data of an endomorphism on a finite group
struct StableImage {
    std::size_t at = 0;
    FGAbelianGroup group;
};

StableImage finite_stable_image(const Homomorphism& f) {
    const IntMatrix relations = f.source.relations();
    IntMatrix power = IntMatrix::identity(f.matrix.rows());
    IntMatrix prev = image_lattice(power, relations);
    for (std::size_t k = 1;; ++k) {
        power = f.matrix * power;
        IntMatrix cur = image_lattice(power, relations);
        if (lattice_equal(prev, cur))
            return StableImage{k - 1, hom_image(iterate(f, k - 1))};
        prev = std::move(cur);
    }
}

} // namespace

void GroupTower::validate() const {
    if (stages.empty()) throw ValidationError("tower: no stages");
    if (bonds.size() + 1 != stages.size())
        throw ValidationError("tower: need exactly one bond per consecutive stage pair");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (bonds[i].source != stages[i + 1] || bonds[i].target != stages[i])
            throw ValidationError("tower: bond " + std::to_string(i) + " endpoints mismatch");
        if (!bonds[i].respects_relations())
            throw ValidationError("tower: bond " + std::to_string(i) + " malformed");
    }
    if (tail == TailKind::periodic) {
        if (!tail_endo) throw ValidationError("tower: periodic tail without endomorphism");
        if (tail_endo->source != stages.back() || tail_endo->target != stages.back())
            throw ValidationError("tower: tail endomorphism not on the last stage");
        if (!tail_endo->respects_relations())
            throw ValidationError("tower: tail endomorphism malformed");
    } else if (tail_endo) {
        throw ValidationError("tower: tail endomorphism given for a non-periodic tail");
    }
}

TowerAnalysis analyze_tower(const GroupTower& t, std::size_t window) {
    t.validate();
    TowerAnalysis out;
    const std::size_t last = t.stages.size() - 1;
    const std::size_t w = std::min<std::size_t>(window, last);

    if (t.tail == TailKind::periodic) {
        const Homomorphism& f = *t.tail_endo;
        const FGAbelianGroup& g = f.source;
        const IntMatrix relations = g.relations();

        // iterate images im(f^k) + relations until they stabilize
        const std::size_t cap = g.is_finite() ? SIZE_MAX : std::max<std::size_t>(window, 16);
        std::size_t stable_at = SIZE_MAX;
        IntMatrix power = IntMatrix::identity(f.matrix.rows());
        IntMatrix prev = image_lattice(power, relations);
        for (std::size_t k = 1; k <= cap && stable_at == SIZE_MAX; ++k) {
            power = f.matrix * power;
            IntMatrix cur = image_lattice(power, relations);
            if (lattice_equal(prev, cur)) stable_at = k - 1;
            prev = std::move(cur);
        }

        if (stable_at != SIZE_MAX) {
            out.ml = MLStatus::holds;
            out.ml_stable_at = stable_at;
            out.ml_reason = "tail images stabilize after " + std::to_string(stable_at) +
                            " iteration(s)";
        } else if (is_diagonal(f.matrix)) {
            // only a free generator scaled by |n| >= 2 can prevent
            // stabilization of a diagonal endomorphism
            out.ml = MLStatus::fails;
            out.ml_reason = "diagonal tail endomorphism strictly shrinks a free summand";
        } else if (g.torsion.empty()) {
            Int d = abs(det_via_snf(f.matrix));
            if (d >= 2) {
                out.ml = MLStatus::fails;
                out.ml_reason = "injective non-surjective tail endomorphism on a free group";
            } else {
                out.ml = MLStatus::inconclusive;
                out.ml_reason = "tail images did not stabilize within the iteration cap";
            }
        } else {
            out.ml = MLStatus::inconclusive;
            out.ml_reason = "tail images did not stabilize within the iteration cap";
        }

        // the limit is the limit of the tail
        if (f.is_isomorphism()) {
            out.limit.kind = LimResult::Kind::exact;
            out.limit.group = g;
        } else if (g.is_finite()) {
            out.limit.kind = LimResult::Kind::exact;
            out.limit.group = finite_stable_image(f).group;
        } else if (is_diagonal(f.matrix)) {
            // blockwise: Z survives iff scaled by a unit; cyclic blocks
            // contribute their eventual image
            std::vector<Int> orders;
            std::size_t rank = 0;
            for (std::size_t i = 0; i < g.num_generators(); ++i) {
                Int n = f.matrix(i, i);
                Int order = g.generator_order(i);
                if (order == 0) {
                    if (abs(n) == 1) ++rank;
                } else {
                    Int gk = gcd(order, Int(1));
                    Int cur = 1;
                    for (;;) {
                        cur = pos_mod(cur * n, order);
                        Int next = gcd(order, cur == 0 ? order : cur);
                        if (next == gk) break;
                        gk = next;
                    }
                    orders.push_back(order / gk);
                }
            }
            out.limit.kind = LimResult::Kind::exact;
            out.limit.group = FGAbelianGroup::from_cyclic_orders(orders, rank);
        } else {
            out.limit.kind = LimResult::Kind::truncated;
            out.limit.group = hom_image(iterate(f, window));
            out.limit.window = window;
        }
    } else if (t.tail == TailKind::surjective_promise) {
        for (std::size_t i = 0; i < t.bonds.size(); ++i)
            if (!t.bonds[i].is_surjective())
                throw ValidationError("tower: bond " + std::to_string(i) +
                                      " is not surjective despite the surjectivity promise");
        out.ml = MLStatus::holds;
        out.ml_reason = "all bonds surjective by promise";
        out.limit.kind = LimResult::Kind::truncated;
        out.limit.group = t.stages[last - w];
        out.limit.window = w;
    } else {
        // no tail: decide what the listed stages force
        bool all_finite = true;
        for (const auto& g : t.stages) all_finite = all_finite && g.is_finite();
        bool final_trivial = true;
        for (std::size_t i = 0; i < last && final_trivial; ++i)
            final_trivial = hom_image(tower_composite(t, last, i)).is_trivial();
        if (all_finite) {
            out.ml = MLStatus::holds;
            out.ml_reason = "all stages finite: image chains stabilize in each stage";
        } else if (last > 0 && final_trivial) {
            out.ml = MLStatus::holds;
            out.ml_reason = "last stage maps trivially to every earlier stage";
        } else {
            out.ml = MLStatus::inconclusive;
            out.ml_reason = "tower has no tail data and the listed stages do not decide";
        }
        out.limit.kind = LimResult::Kind::truncated;
        out.limit.group = hom_image(tower_composite(t, last, last - w));
        out.limit.window = w;
    }

    switch (out.ml) {
        case MLStatus::holds: out.lim1 = Lim1Class::zero; break;
        case MLStatus::fails: out.lim1 = Lim1Class::nonzero_uncountable; break;
        case MLStatus::inconclusive: out.lim1 = Lim1Class::unknown; break;
    }
    return out;
}

void DirectedSystem::validate() const {
    if (stages.empty()) throw ValidationError("directed system: no stages");
    if (bonds.size() + 1 != stages.size())
        throw ValidationError("directed system: need one bond per consecutive stage pair");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (bonds[i].source != stages[i] || bonds[i].target != stages[i + 1])
            throw ValidationError("directed system: bond " + std::to_string(i) +
                                  " endpoints mismatch");
        if (!bonds[i].respects_relations())
            throw ValidationError("directed system: bond " + std::to_string(i) + " malformed");
    }
    if (tail == TailKind::periodic) {
        if (!tail_endo) throw ValidationError("directed system: periodic tail without endo");
        if (tail_endo->source != stages.back() || tail_endo->target != stages.back())
            throw ValidationError("directed system: tail endo not on the last stage");
        if (!tail_endo->respects_relations())
            throw ValidationError("directed system: tail endo malformed");
    } else if (tail_endo) {
        throw ValidationError("directed system: tail endo given for a non-periodic tail");
    }
}

ColimResult direct_limit(const DirectedSystem& s) {
    s.validate();
    ColimResult out;
    const FGAbelianGroup& g = s.stages.back();

    if (s.tail == TailKind::none) {
        // the listed diagram is the whole diagram; its colimit is the
        // final stage
        out.kind = ColimResult::Kind::exact;
        out.group = g;
        return out;
    }
    if (s.tail == TailKind::surjective_promise) {
        out.kind = ColimResult::Kind::truncated;
        out.group = g;
        return out;
    }

    const Homomorphism& f = *s.tail_endo;
    if (f.is_isomorphism()) {
        out.kind = ColimResult::Kind::exact;
        out.group = g;
        return out;
    }
    if (g.is_finite()) {
        out.kind = ColimResult::Kind::exact;
        out.group = finite_stable_image(f).group;
        return out;
    }
    if (is_diagonal(f.matrix)) {
        std::vector<Int> orders;
        std::size_t rank = 0;
        std::vector<Int> denominators;
        for (std::size_t i = 0; i < g.num_generators(); ++i) {
            Int n = f.matrix(i, i);
            Int order = g.generator_order(i);
            if (order == 0) {
                if (abs(n) == 1)
                    ++rank;
                else if (n != 0)
                    denominators.push_back(abs(n));
            } else {
                Int gk = 1, cur = 1;
                for (;;) {
                    cur = pos_mod(cur * n, order);
                    Int next = gcd(order, cur == 0 ? order : cur);
                    if (next == gk) break;
                    gk = next;
                }
                orders.push_back(order / gk);
            }
        }
        if (denominators.empty()) {
            out.kind = ColimResult::Kind::exact;
            out.group = FGAbelianGroup::from_cyclic_orders(orders, rank);
            return out;
        }
        bool uniform = rank == 0 &&
                       std::all_of(denominators.begin(), denominators.end(),
                                   [&](const Int& d) { return d == denominators.front(); });
        if (uniform) {
            out.kind = ColimResult::Kind::localized;
            out.local_rank = denominators.size();
            out.local_denominator = denominators.front();
            out.torsion_part = FGAbelianGroup::from_cyclic_orders(orders);
            return out;
        }
    }
    out.kind = ColimResult::Kind::truncated;
    out.group = g;
    return out;
}

} // namespace nervetower
