#include "nervetower/nerve.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace nervetower {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }

void mask_set(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }

bool mask_and_nonzero(const Mask& a, const Mask& b, Mask& out) {
    bool any = false;
    for (std::size_t w = 0; w < a.size(); ++w) {
        out[w] = a[w] & b[w];
        any = any || out[w] != 0;
    }
    return any;
}

Rat rat_floor(const Rat& x) {
    return Rat(floor_div(boost::multiprecision::numerator(x),
                         boost::multiprecision::denominator(x)));
}

Rat mod1(const Rat& x) { return x - rat_floor(x); }

std::pair<Rat, Rat> arc(std::size_t i, std::size_t m) {
    Rat lo = Rat(Int(i) - 1, Int(4 * m)) + Rat(1, Int(16 * m));
    Rat hi = Rat(Int(i) + 1, Int(4 * m)) + Rat(1, Int(16 * m));
    return {lo, hi};
}

// overlap region of arcs i and i+1 of lambda_m
std::pair<Rat, Rat> arc_overlap(std::size_t i, std::size_t m) {
    return {Rat(Int(4 * i) + 1, Int(16 * m)), Rat(Int(4 * i) + 5, Int(16 * m))};
}

} // namespace

void Cover::validate() const {
    if (set_names.size() != members.size())
        throw ValidationError("cover: set_names/members size mismatch");
    std::set<std::string> names(set_names.begin(), set_names.end());
    if (names.size() != set_names.size()) throw ValidationError("cover: duplicate set name");
    std::vector<bool> covered(num_points, false);
    for (const auto& s : members) {
        if (s.empty()) throw ValidationError("cover: empty set");
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] >= num_points) throw ValidationError("cover: point index out of range");
            if (k > 0 && s[k] <= s[k - 1])
                throw ValidationError("cover: members not sorted strictly");
            covered[s[k]] = true;
        }
    }
    for (std::size_t p = 0; p < num_points; ++p)
        if (!covered[p]) throw ValidationError("cover: uncovered point");
}

void MetricSpace::validate() const {
    std::size_t n = point_names.size();
    if (dist.size() != n) throw ValidationError("metric: matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) throw ValidationError("metric: matrix not square");
        if (dist[i][i] != 0) throw ValidationError("metric: nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j] < 0) throw ValidationError("metric: negative distance");
            if (dist[i][j] != dist[j][i]) throw ValidationError("metric: not symmetric");
        }
    }
}

SimplicialComplex cech_nerve(const Cover& c, int dim_cap) {
    c.validate();
    if (dim_cap < 0) throw ValidationError("cech_nerve: negative dim_cap");
    std::size_t s = c.members.size();
    std::vector<Mask> masks(s, make_mask(c.num_points));
    for (std::size_t i = 0; i < s; ++i)
        for (auto p : c.members[i]) mask_set(masks[i], p);

    std::vector<std::vector<std::string>> simplices;
    std::vector<std::size_t> current;
    auto dfs = [&](auto&& self, const Mask& mask, std::size_t start) -> void {
        std::vector<std::string> names;
        for (auto v : current) names.push_back(c.set_names[v]);
        simplices.push_back(std::move(names));
        if (current.size() == static_cast<std::size_t>(dim_cap) + 1) return;
        Mask next = make_mask(c.num_points);
        for (std::size_t j = start; j < s; ++j) {
            if (mask_and_nonzero(mask, masks[j], next)) {
                current.push_back(j);
                self(self, next, j + 1);
                current.pop_back();
            }
        }
    };
    for (std::size_t i = 0; i < s; ++i) {
        current.assign(1, i);
        dfs(dfs, masks[i], i + 1);
    }
    return SimplicialComplex(c.set_names, simplices);
}

SimplicialComplex vietoris_nerve(const Cover& c, int dim_cap) {
    c.validate();
    if (dim_cap < 0) throw ValidationError("vietoris_nerve: negative dim_cap");
    std::vector<std::string> vertices;
    for (std::size_t p = 0; p < c.num_points; ++p) vertices.push_back(std::to_string(p));

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::string>> simplices;
    auto emit = [&](const std::vector<std::size_t>& pts) {
        if (!seen.insert(pts).second) return;
        std::vector<std::string> names;
        for (auto p : pts) names.push_back(std::to_string(p));
        simplices.push_back(std::move(names));
    };
    std::size_t top = static_cast<std::size_t>(dim_cap) + 1;
    for (const auto& set : c.members) {
        if (set.size() <= top) {
            emit(set);
            continue;
        }
        // all top-subsets of the set
        std::vector<std::size_t> idx(top);
        for (std::size_t i = 0; i < top; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            std::vector<std::size_t> pts(top);
            for (std::size_t i = 0; i < top; ++i) pts[i] = set[idx[i]];
            emit(pts);
            more = false;
            for (std::size_t i = top; i-- > 0;) {
                if (idx[i] + (top - i) < set.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < top; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return SimplicialComplex(vertices, simplices);
}

std::vector<std::size_t> refinement_assignment(const Cover& fine, const Cover& coarse) {
    if (fine.num_points != coarse.num_points)
        throw ValidationError("refinement: carriers differ");
    std::vector<std::size_t> out(fine.members.size());
    for (std::size_t i = 0; i < fine.members.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < coarse.members.size() && !found; ++j) {
            if (std::includes(coarse.members[j].begin(), coarse.members[j].end(),
                              fine.members[i].begin(), fine.members[i].end())) {
                out[i] = j;
                found = true;
            }
        }
        if (!found)
            throw ValidationError("refinement: fine set " + fine.set_names[i] +
                                  " lies in no coarse set");
    }
    return out;
}

SimplicialMap refinement_projection(const Cover& fine, const Cover& coarse,
                                    const SimplicialComplex& fine_nerve,
                                    const SimplicialComplex& coarse_nerve) {
    auto assign = refinement_assignment(fine, coarse);
    std::vector<std::size_t> vmap(fine_nerve.num_vertices());
    for (std::size_t v = 0; v < vmap.size(); ++v) {
        std::size_t fine_set = fine.set_names.size();
        for (std::size_t i = 0; i < fine.set_names.size(); ++i)
            if (fine.set_names[i] == fine_nerve.vertex_name(v)) fine_set = i;
        if (fine_set == fine.set_names.size())
            throw ValidationError("refinement: nerve vertex not named after a fine set");
        vmap[v] = coarse_nerve.vertex_index(coarse.set_names[assign[fine_set]]);
    }
    return SimplicialMap(fine_nerve, coarse_nerve, vmap);
}

SimplicialMap refinement_projection(const Cover& fine, const Cover& coarse, int dim_cap) {
    return refinement_projection(fine, coarse, cech_nerve(fine, dim_cap),
                                 cech_nerve(coarse, dim_cap));
}

Cover ball_cover(const MetricSpace& ms, const Rat& radius) {
    ms.validate();
    if (radius <= 0) throw ValidationError("ball_cover: radius must be positive");
    Cover c;
    c.num_points = ms.point_names.size();
    for (std::size_t i = 0; i < c.num_points; ++i) {
        std::vector<std::size_t> pts;
        for (std::size_t j = 0; j < c.num_points; ++j)
            if (ms.dist[i][j] < radius) pts.push_back(j);
        c.set_names.push_back("B(" + ms.point_names[i] + ")");
        c.members.push_back(std::move(pts));
    }
    return c;
}

bool circle_arc_contains(const Rat& t, std::size_t i, std::size_t m) {
    auto [lo, hi] = arc(i, m);
    Rat d = mod1(t - lo);
    return d > 0 && d < hi - lo;
}

Cover circle_cover(const std::vector<Rat>& carrier, std::size_t m) {
    if (m == 0) throw ValidationError("circle_cover: m must be positive");
    std::size_t n = 4 * m;
    Cover c;
    c.num_points = carrier.size();
    std::vector<std::set<std::size_t>> in(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> pts;
        for (std::size_t p = 0; p < carrier.size(); ++p)
            if (circle_arc_contains(carrier[p], i, m)) {
                pts.push_back(p);
                in[i].insert(p);
            }
        if (pts.empty())
            throw ValidationError("circle_cover: arc " + std::to_string(i) +
                                  " of lambda_" + std::to_string(m) + " misses the carrier");
        c.set_names.push_back("U(" + std::to_string(i) + "," + std::to_string(m) + ")");
        c.members.push_back(std::move(pts));
    }
    // nerve must be exactly the 4m-cycle
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool meet = std::any_of(in[i].begin(), in[i].end(),
                                    [&](std::size_t p) { return in[j].count(p) > 0; });
            bool consec = (j - i) == 1 || (j - i) == n - 1;
            if (consec != meet)
                throw ValidationError("circle_cover: carrier breaks the cycle nerve at arcs " +
                                      std::to_string(i) + "," + std::to_string(j));
        }
    c.validate();
    return c;
}

Cover circle_cover(std::size_t m) {
    if (m == 0) throw ValidationError("circle_cover: m must be positive");
    // half-offset grid: never hits an arc endpoint, fine enough for C_{4m}
    std::vector<Rat> carrier;
    for (std::size_t j = 0; j < 16 * m; ++j) carrier.push_back(Rat(2 * j + 1, Int(32 * m)));
    return circle_cover(carrier, m);
}

std::vector<Rat> circle_tower_carrier(std::size_t max_m) {
    if (max_m == 0) throw ValidationError("circle_tower_carrier: max_m must be positive");

    // Slivers to avoid: each arc of lambda_{m+1} minus its best-fitting arc
    // of lambda_m, normalized into [0,1) x [0,2).
    std::vector<std::pair<Rat, Rat>> zones;
    for (std::size_t m = 1; m < max_m; ++m) {
        for (std::size_t i = 0; i < 4 * (m + 1); ++i) {
            auto [flo, fhi] = arc(i, m + 1);
            Rat best_overlap = -1;
            std::vector<std::pair<Rat, Rat>> best_diff;
            for (std::size_t j = 0; j < 4 * m; ++j) {
                auto [clo, chi] = arc(j, m);
                Rat base = clo + rat_floor(flo - clo);
                for (int off = -1; off <= 1; ++off) {
                    Rat s = base + off;
                    Rat lo = std::max(flo, s);
                    Rat hi = std::min(fhi, Rat(s + (chi - clo)));
                    if (hi <= lo) continue;
                    if (hi - lo > best_overlap) {
                        best_overlap = hi - lo;
                        best_diff.clear();
                        if (flo < lo) best_diff.emplace_back(flo, lo);
                        if (hi < fhi) best_diff.emplace_back(hi, fhi);
                    }
                }
            }
            for (auto& [lo, hi] : best_diff) {
                Rat nlo = mod1(lo);
                zones.emplace_back(nlo, nlo + (hi - lo));
            }
        }
    }

    // One point per consecutive-arc overlap, placed in the widest gap
    // between zones.
    auto pick = [&](const Rat& lo, const Rat& hi) -> Rat {
        std::vector<std::pair<Rat, Rat>> cuts{{lo, lo}, {hi, hi}};
        for (const auto& [zlo, zhi] : zones)
            for (int off = -1; off <= 1; ++off) {
                Rat a = std::max(Rat(zlo + off), lo);
                Rat b = std::min(Rat(zhi + off), hi);
                if (b > a) cuts.emplace_back(a, b);
            }
        std::sort(cuts.begin(), cuts.end());
        Rat best_len = 0, best_lo = 0, best_hi = 0;
        Rat cur = lo;
        for (const auto& [a, b] : cuts) {
            if (a > cur && a - cur > best_len) {
                best_len = a - cur;
                best_lo = cur;
                best_hi = a;
            }
            cur = std::max(cur, b);
        }
        if (best_len <= 0)
            throw ValidationError("circle_tower_carrier: overlap region fully blocked");
        return (best_lo + best_hi) / 2;
    };

    std::set<Rat> points;
    for (std::size_t m = 1; m <= max_m; ++m)
        for (std::size_t i = 0; i < 4 * m; ++i) {
            auto [lo, hi] = arc_overlap(i, m);
            points.insert(mod1(pick(lo, hi)));
        }
    return std::vector<Rat>(points.begin(), points.end());
}

} // namespace nervetower
