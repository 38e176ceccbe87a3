#include "nervetower/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace nervetower {

IntMatrix boundary_matrix(const SimplicialComplex& k, int n) {
    if (n < 0) throw ValidationError("boundary_matrix: negative degree");
    std::size_t cols = k.num_simplices(n);
    std::size_t rows = n == 0 ? 0 : k.num_simplices(n - 1);
    IntMatrix d(rows, cols);
    if (n == 0) return d;
    const auto& simps = k.simplices(n);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& s = simps[j];
        int sign = 1;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            long r = k.simplex_index(f);
            if (r < 0) throw ValidationError("boundary_matrix: complex not face-closed");
            d(static_cast<std::size_t>(r), j) += sign;
            sign = -sign;
        }
    }
    return d;
}

IntMatrix augmentation_row(const SimplicialComplex& k) {
    IntMatrix a(1, k.num_simplices(0));
    for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 1;
    return a;
}

IntMatrix chain_map_matrix(const SimplicialMap& f, int n) {
    std::size_t cols = f.source().num_simplices(n);
    std::size_t rows = f.target().num_simplices(n);
    IntMatrix phi(rows, cols);
    const auto& simps = f.source().simplices(n);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::size_t> img;
        for (auto v : simps[j]) img.push_back(f.apply(v));
        // degenerate images vanish in the chain map
        std::vector<std::size_t> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        int sign = 1; // parity of the sorting permutation
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) sign = -sign;
        long r = f.target().simplex_index(sorted);
        if (r < 0) throw ValidationError("chain_map_matrix: invalid simplicial map");
        phi(static_cast<std::size_t>(r), j) = sign;
    }
    return phi;
}

namespace {

void check_coefficients(const Int& m) {
    if (m == 1 || m < 0) throw ValidationError("coefficient modulus must be 0 (for Z) or >= 2");
}

// tensor with Z/m plus Tor of the previous group, normalized
FGAbelianGroup mod_m_from_integral(const FGAbelianGroup& hn, const FGAbelianGroup& hprev,
                                   const Int& m) {
    std::vector<Int> orders;
    for (std::size_t i = 0; i < hn.free_rank; ++i) orders.push_back(m);
    for (const auto& t : hn.torsion) orders.push_back(gcd(t, m));
    for (const auto& t : hprev.torsion) orders.push_back(gcd(t, m));
    return FGAbelianGroup::from_cyclic_orders(std::move(orders));
}

FGAbelianGroup integral_homology(const SimplicialComplex& k, int n, bool reduced) {
    if (n > k.dimension()) return FGAbelianGroup::trivial();
    std::size_t cn = k.num_simplices(n);
    std::size_t rank_in =
        (n == 0) ? (reduced ? integer_rank(augmentation_row(k)) : 0)
                 : integer_rank(boundary_matrix(k, n));
    std::vector<Int> f_out = invariant_factors(boundary_matrix(k, n + 1));
    std::vector<Int> tors;
    for (const auto& d : f_out)
        if (d >= 2) tors.push_back(d);
    return FGAbelianGroup(cn - rank_in - f_out.size(), std::move(tors));
}

FGAbelianGroup integral_cohomology(const SimplicialComplex& k, int n, bool reduced) {
    if (n > k.dimension()) return FGAbelianGroup::trivial();
    std::size_t cn = k.num_simplices(n);
    std::size_t rank_up = integer_rank(boundary_matrix(k, n + 1)); // delta^n
    std::vector<Int> f_down; // delta^{n-1}
    if (n == 0)
        f_down = reduced ? invariant_factors(augmentation_row(k).transpose()) : std::vector<Int>{};
    else
        f_down = invariant_factors(boundary_matrix(k, n).transpose());
    std::vector<Int> tors;
    for (const auto& d : f_down)
        if (d >= 2) tors.push_back(d);
    return FGAbelianGroup(cn - rank_up - f_down.size(), std::move(tors));
}

} // namespace

FGAbelianGroup homology(const SimplicialComplex& k, int n, const Int& m, bool reduced) {
    if (n < 0) throw ValidationError("homology: negative degree");
    check_coefficients(m);
    if (m == 0) return integral_homology(k, n, reduced);
    FGAbelianGroup hn = integral_homology(k, n, reduced);
    FGAbelianGroup hprev = n == 0 ? FGAbelianGroup::trivial() : integral_homology(k, n - 1, reduced);
    return mod_m_from_integral(hn, hprev, m);
}

std::vector<std::vector<FGAbelianGroup>> homology_tables(const SimplicialComplex& k,
                                                         int max_degree,
                                                         const std::vector<Int>& moduli,
                                                         bool reduced) {
    if (max_degree < 0) throw ValidationError("homology_table: negative degree");
    for (const auto& m : moduli) check_coefficients(m);
    int top = std::min(max_degree, k.dimension());
    std::vector<std::vector<Int>> factors(top + 2);
    for (int n = 0; n <= top + 1; ++n) factors[n] = invariant_factors(boundary_matrix(k, n));

    std::vector<FGAbelianGroup> integral;
    for (int n = 0; n <= max_degree; ++n) {
        if (n > top) {
            integral.push_back(FGAbelianGroup::trivial());
            continue;
        }
        std::size_t rank_in = n == 0 ? (reduced ? integer_rank(augmentation_row(k)) : 0)
                                     : factors[n].size();
        std::vector<Int> tors;
        for (const auto& d : factors[n + 1])
            if (d >= 2) tors.push_back(d);
        integral.emplace_back(k.num_simplices(n) - rank_in - factors[n + 1].size(),
                              std::move(tors));
    }
    std::vector<std::vector<FGAbelianGroup>> out;
    for (const auto& m : moduli) {
        if (m == 0) {
            out.push_back(integral);
            continue;
        }
        std::vector<FGAbelianGroup> table;
        for (int n = 0; n <= max_degree; ++n)
            table.push_back(mod_m_from_integral(
                integral[n], n == 0 ? FGAbelianGroup::trivial() : integral[n - 1], m));
        out.push_back(std::move(table));
    }
    return out;
}

std::vector<FGAbelianGroup> homology_table(const SimplicialComplex& k, int max_degree,
                                           const Int& m, bool reduced) {
    return homology_tables(k, max_degree, {m}, reduced)[0];
}

FGAbelianGroup cohomology(const SimplicialComplex& k, int n, const Int& m, bool reduced) {
    if (n < 0) throw ValidationError("cohomology: negative degree");
    check_coefficients(m);
    if (m == 0) return integral_cohomology(k, n, reduced);
    FGAbelianGroup hn = integral_cohomology(k, n, reduced);
    FGAbelianGroup hnext = integral_cohomology(k, n + 1, reduced);
    return mod_m_from_integral(hn, hnext, m);
}

HomologyBasis HomologyBasis::homology(const SimplicialComplex& k, int n, const Int& m,
                                      bool reduced) {
    return build(k, n, m, reduced, false);
}
HomologyBasis HomologyBasis::cohomology(const SimplicialComplex& k, int n, const Int& m,
                                        bool reduced) {
    return build(k, n, m, reduced, true);
}

HomologyBasis HomologyBasis::build(const SimplicialComplex& k, int n, const Int& m, bool reduced,
                                   bool dual) {
    if (n < 0) throw ValidationError("HomologyBasis: negative degree");
    check_coefficients(m);
    HomologyBasis b;
    b.degree_ = n;
    b.modulus_ = m;
    b.reduced_ = reduced;
    b.dual_ = dual;
    b.chain_length_ = k.num_simplices(n);
    if (n > k.dimension()) {
        b.path_ = Path::trivial;
        return b;
    }
    if (n == 0) {
        b.build_graph_degree0(k);
    } else if (n == 1 && k.dimension() <= 1) {
        b.build_graph_degree1(k);
    } else {
        IntMatrix d_in, d_out;
        if (dual) {
            d_in = boundary_matrix(k, n + 1).transpose(); // delta^n
            d_out = boundary_matrix(k, n).transpose();    // delta^{n-1}
        } else {
            d_in = boundary_matrix(k, n);
            d_out = boundary_matrix(k, n + 1);
        }
        b.build_general(d_in, d_out);
    }
    return b;
}

void HomologyBasis::build_graph_degree0(const SimplicialComplex& k) {
    path_ = Path::graph0;
    std::size_t nv = k.num_vertices();
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : k.simplices(1)) {
        std::size_t a = find(e[0]), b = find(e[1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    component_of_.assign(nv, -1);
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t r = find(v);
        if (component_of_[r] < 0) {
            component_of_[r] = static_cast<int>(comp_rep_.size());
            comp_rep_.push_back(r);
        }
        component_of_[v] = component_of_[r];
    }
    std::size_t c = comp_rep_.size();
    base_component_ = 0;
    std::size_t gens = reduced_ ? c - 1 : c;
    for (std::size_t g = 0; g < gens; ++g) gen_component_.push_back(reduced_ ? g + 1 : g);
    if (modulus_ == 0)
        group_ = FGAbelianGroup::free(gens);
    else
        group_ = FGAbelianGroup(0, std::vector<Int>(gens, modulus_));
}

void HomologyBasis::build_graph_degree1(const SimplicialComplex& k) {
    path_ = Path::graph1;
    std::size_t nv = k.num_vertices();
    const auto& edges = k.simplices(1);
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(nv); // (neighbor, edge idx)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::size_t a = find(edges[e][0]), b = find(edges[e][1]);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            tree[edges[e][0]].push_back({edges[e][1], e});
            tree[edges[e][1]].push_back({edges[e][0], e});
        } else {
            nontree_edge_.push_back(e);
        }
    }
    std::size_t g = nontree_edge_.size();
    fundamental_cycles_ = IntMatrix(edges.size(), g);
    for (std::size_t gi = 0; gi < g; ++gi) {
        std::size_t e = nontree_edge_[gi];
        std::size_t u = edges[e][0], v = edges[e][1];
        // tree path from v back to u; cycle = edge (u -> v) + path (v -> u)
        std::vector<long> prev_vertex(nv, -1);
        std::vector<std::size_t> prev_edge(nv, 0);
        std::queue<std::size_t> q;
        q.push(v);
        prev_vertex[v] = static_cast<long>(v);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            if (x == u) break;
            for (auto [y, ei] : tree[x])
                if (prev_vertex[y] < 0) {
                    prev_vertex[y] = static_cast<long>(x);
                    prev_edge[y] = ei;
                    q.push(y);
                }
        }
        // orient: chain coefficient +1 on edge e means u -> v with the
        // stored order (edges[e][0] < edges[e][1])
        fundamental_cycles_(e, gi) = 1;
        std::size_t x = u;
        while (x != v) {
            std::size_t px = static_cast<std::size_t>(prev_vertex[x]);
            std::size_t ei = prev_edge[x];
            // the closing path must run v -> u; we walk u -> v, so each
            // step contributes with reversed orientation
            if (edges[ei][0] == x)
                fundamental_cycles_(ei, gi) -= 1;
            else
                fundamental_cycles_(ei, gi) += 1;
            x = px;
        }
    }
    if (modulus_ == 0)
        group_ = FGAbelianGroup::free(g);
    else
        group_ = FGAbelianGroup(0, std::vector<Int>(g, modulus_));
}

void HomologyBasis::build_general(const IntMatrix& d_in, const IntMatrix& d_out) {
    path_ = Path::general;
    std::size_t cn = chain_length_;
    IntMatrix cycles; // basis of the (mod-m) cycle lattice in Z^cn
    IntMatrix kill;   // generators of the subgroup to quotient by
    if (modulus_ == 0) {
        cycles = integer_kernel(d_in);
        kill = d_out;
    } else {
        IntMatrix scaled = IntMatrix::identity(d_in.rows());
        for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, i) = modulus_;
        IntMatrix ker = integer_kernel(IntMatrix::hstack(d_in, scaled));
        cycles = lattice_basis(ker.row_slice(0, cn));
        IntMatrix m_id = IntMatrix::identity(cn);
        for (std::size_t i = 0; i < cn; ++i) m_id(i, i) = modulus_;
        kill = IntMatrix::hstack(d_out, m_id);
    }
    std::size_t z = cycles.cols();
    IntMatrix x(z, kill.cols());
    for (std::size_t j = 0; j < kill.cols(); ++j) {
        auto sol = solve_integer(cycles, kill.col(j));
        if (!sol) throw ValidationError("HomologyBasis: boundary outside cycle lattice");
        x.set_col(j, *sol);
    }
    SmithForm s = smith_normal_form(x);
    std::vector<Int> tors;
    std::vector<std::size_t> keep; // torsion generators first, then free
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d(i, i) >= 2) {
            tors.push_back(s.d(i, i));
            keep.push_back(i);
        }
    for (std::size_t i = s.rank; i < z; ++i) keep.push_back(i);
    group_ = FGAbelianGroup(z - s.rank, std::move(tors));
    gen_chains_ = IntMatrix(cn, keep.size());
    for (std::size_t gi = 0; gi < keep.size(); ++gi) {
        std::vector<Int> chain = cycles * s.uinv.col(keep[gi]);
        gen_chains_.set_col(gi, chain);
    }
    expr_ = IntMatrix::hstack(gen_chains_, kill);
}

std::vector<Int> HomologyBasis::generator_chain(std::size_t g) const {
    switch (path_) {
        case Path::trivial:
            throw ValidationError("HomologyBasis: trivial group has no generators");
        case Path::graph0: {
            std::vector<Int> c(chain_length_);
            c[comp_rep_[gen_component_[g]]] = 1;
            if (!dual_ && reduced_) c[comp_rep_[base_component_]] -= 1;
            if (dual_) {
                // indicator cochain of the whole component
                c.assign(chain_length_, 0);
                for (std::size_t v = 0; v < chain_length_; ++v)
                    if (component_of_[v] == static_cast<int>(gen_component_[g])) c[v] = 1;
            }
            return c;
        }
        case Path::graph1: {
            if (dual_) {
                std::vector<Int> c(chain_length_);
                c[nontree_edge_[g]] = 1;
                return c;
            }
            return fundamental_cycles_.col(g);
        }
        case Path::general:
            return gen_chains_.col(g);
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> HomologyBasis::normalize(std::vector<Int> coords) const {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Int t = group_.generator_order(i);
        if (t != 0) coords[i] = pos_mod(coords[i], t);
    }
    return coords;
}

std::vector<Int> HomologyBasis::coordinates(const std::vector<Int>& chain) const {
    if (chain.size() != chain_length_)
        throw ValidationError("HomologyBasis: chain length mismatch");
    std::size_t g = group_.num_generators();
    switch (path_) {
        case Path::trivial:
            return {};
        case Path::graph0: {
            std::vector<Int> coords(g);
            if (!dual_) {
                std::vector<long> gen_of_comp(comp_rep_.size(), -1);
                for (std::size_t gi = 0; gi < g; ++gi) gen_of_comp[gen_component_[gi]] = static_cast<long>(gi);
                for (std::size_t v = 0; v < chain_length_; ++v) {
                    long gi = gen_of_comp[component_of_[v]];
                    if (gi >= 0) coords[static_cast<std::size_t>(gi)] += chain[v];
                }
            } else {
                for (std::size_t gi = 0; gi < g; ++gi) {
                    coords[gi] = chain[comp_rep_[gen_component_[gi]]];
                    if (reduced_) coords[gi] -= chain[comp_rep_[base_component_]];
                }
            }
            return normalize(std::move(coords));
        }
        case Path::graph1: {
            std::vector<Int> coords(g);
            if (!dual_) {
                for (std::size_t gi = 0; gi < g; ++gi) coords[gi] = chain[nontree_edge_[gi]];
            } else {
                for (std::size_t gi = 0; gi < g; ++gi)
                    for (std::size_t e = 0; e < chain_length_; ++e)
                        if (fundamental_cycles_(e, gi) != 0)
                            coords[gi] += fundamental_cycles_(e, gi) * chain[e];
            }
            return normalize(std::move(coords));
        }
        case Path::general: {
            auto sol = solve_integer(expr_, chain);
            if (!sol) throw ValidationError("HomologyBasis: chain is not a cycle class");
            std::vector<Int> coords(sol->begin(), sol->begin() + g);
            return normalize(std::move(coords));
        }
    }
    throw std::logic_error("unreachable");
}

Homomorphism induced_map(const SimplicialMap& f, const HomologyBasis& source_basis,
                         const HomologyBasis& target_basis) {
    if (source_basis.degree() != target_basis.degree() ||
        source_basis.modulus() != target_basis.modulus() ||
        source_basis.reduced() != target_basis.reduced() ||
        source_basis.dual() != target_basis.dual())
        throw ValidationError("induced_map: incompatible bases");
    int n = source_basis.degree();
    IntMatrix phi = chain_map_matrix(f, n);
    bool dual = source_basis.dual();
    std::size_t src_gens = source_basis.group().num_generators();
    IntMatrix mat(target_basis.group().num_generators(), src_gens);
    for (std::size_t g = 0; g < src_gens; ++g) {
        std::vector<Int> pushed;
        if (dual) {
            // cochain pullback: transpose of the chain map
            std::vector<Int> gen = source_basis.generator_chain(g);
            pushed.assign(phi.cols(), 0);
            for (std::size_t j = 0; j < phi.cols(); ++j)
                for (std::size_t i = 0; i < phi.rows(); ++i)
                    if (phi(i, j) != 0) pushed[j] += phi(i, j) * gen[i];
        } else {
            pushed = phi * source_basis.generator_chain(g);
        }
        mat.set_col(g, target_basis.coordinates(pushed));
    }
    return Homomorphism(source_basis.group(), target_basis.group(), std::move(mat));
}

Homomorphism induced_hom(const SimplicialMap& f, int n, const Int& m, bool reduced) {
    auto src = HomologyBasis::homology(f.source(), n, m, reduced);
    auto tgt = HomologyBasis::homology(f.target(), n, m, reduced);
    return induced_map(f, src, tgt);
}

Homomorphism induced_cohom(const SimplicialMap& f, int n, const Int& m, bool reduced) {
    auto src = HomologyBasis::cohomology(f.target(), n, m, reduced);
    auto tgt = HomologyBasis::cohomology(f.source(), n, m, reduced);
    return induced_map(f, src, tgt);
}

} // namespace nervetower
