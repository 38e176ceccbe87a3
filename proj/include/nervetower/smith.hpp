#pragma once

#include "nervetower/int_matrix.hpp"

#include <optional>
#include <vector>

namespace nervetower {

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
/// nonnegative entries d1 | d2 | ... . uinv/vinv are the exact inverses,
/// tracked during elimination so lattice computations need no separate
/// matrix inversion.
struct SmithForm {
    IntMatrix u, d, v;
    IntMatrix uinv, vinv;
    std::size_t rank = 0; // number of nonzero diagonal entries

    std::vector<Int> diagonal() const {
        std::vector<Int> ds;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i) ds.push_back(d(i, i));
        return ds;
    }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors of A (diagonal-only SNF, no transform tracking).
std::vector<Int> invariant_factors(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

/// Some integer solution x of A x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Basis of the integer kernel of A, as matrix columns.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of the lattice spanned by the columns of A, as matrix columns.
IntMatrix lattice_basis(const IntMatrix& a);

/// Is b in the lattice spanned by the columns of A?
bool lattice_contains(const IntMatrix& a, const std::vector<Int>& b);

/// Do the columns of A and B span the same lattice?
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Is every column of B inside the column lattice of A?
bool lattice_contains_all(const IntMatrix& a, const IntMatrix& b);

} // namespace nervetower
