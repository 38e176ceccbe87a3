#include "nervetower/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace nervetower {

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::vector<Int> orders, std::size_t extra_rank) {
    std::size_t rank = extra_rank;
    std::vector<Int> tors;
    for (auto& o : orders) {
        o = abs(o);
        if (o == 0)
            ++rank;
        else if (o >= 2)
            tors.push_back(o);
    }
    // gcd/lcm sweeps until the divisibility chain holds; avoids factoring
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(tors.begin(), tors.end());
        for (std::size_t i = 0; i + 1 < tors.size(); ++i) {
            if (tors[i + 1] % tors[i] != 0) {
                Int g = gcd(tors[i], tors[i + 1]);
                Int l = tors[i] / g * tors[i + 1];
                tors[i] = g;
                tors[i + 1] = l;
                changed = true;
            }
        }
    }
    tors.erase(std::remove(tors.begin(), tors.end(), Int(1)), tors.end());
    return FGAbelianGroup(rank, std::move(tors));
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

FGAbelianGroup cokernel(const IntMatrix& a) {
    std::vector<Int> f = invariant_factors(a);
    std::vector<Int> tors;
    for (const auto& d : f)
        if (d >= 2) tors.push_back(d);
    return FGAbelianGroup(a.rows() - f.size(), std::move(tors));
}

FGAbelianGroup lattice_quotient(const IntMatrix& super_gens, const IntMatrix& sub_gens) {
    if (super_gens.rows() != sub_gens.rows())
        throw ValidationError("lattice_quotient: ambient dimension mismatch");
    IntMatrix basis = lattice_basis(super_gens);
    // coordinates of each sub generator in the chosen basis
    IntMatrix x(basis.cols(), sub_gens.cols());
    for (std::size_t j = 0; j < sub_gens.cols(); ++j) {
        auto sol = solve_integer(basis, sub_gens.col(j));
        if (!sol) throw ValidationError("lattice_quotient: sublattice not contained in superlattice");
        x.set_col(j, *sol);
    }
    return cokernel(x);
}

} // namespace nervetower
