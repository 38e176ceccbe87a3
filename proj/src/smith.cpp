#include "nervetower/smith.hpp"

#include <cassert>

namespace nervetower {

namespace {

struct Tracker {
    IntMatrix* u = nullptr;    // accumulates row ops
    IntMatrix* uinv = nullptr; // accumulates inverse row ops (as column ops)
    IntMatrix* v = nullptr;    // accumulates column ops
    IntMatrix* vinv = nullptr; // accumulates inverse column ops (as row ops)

    void swap_rows(std::size_t a, std::size_t b) {
        if (u) u->swap_rows(a, b);
        if (uinv) uinv->swap_cols(a, b);
    }
    void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
        m.add_row(a, b, c);
        if (u) u->add_row(a, b, c);
        if (uinv) uinv->add_col(b, a, -c);
    }
    void negate_row(IntMatrix& m, std::size_t a) {
        m.negate_row(a);
        if (u) u->negate_row(a);
        if (uinv) uinv->negate_col(a);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (v) v->swap_cols(a, b);
        if (vinv) vinv->swap_rows(a, b);
    }
    void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
        m.add_col(a, b, c);
        if (v) v->add_col(a, b, c);
        if (vinv) vinv->add_row(b, a, -c);
    }
    void negate_col(IntMatrix& m, std::size_t a) {
        m.negate_col(a);
        if (v) v->negate_col(a);
        if (vinv) vinv->negate_row(a);
    }
};

// Pivot rule: nonzero entry of minimal |value| in the trailing submatrix,
// ties broken by lowest row then lowest column, for deterministic U, V.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Int& e = m(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void diagonalize(IntMatrix& m, Tracker& tr) {
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(m, t, pi, pj)) return;
        m.swap_rows(t, pi);
        tr.swap_rows(t, pi);
        m.swap_cols(t, pj);
        tr.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (m(i, t) == 0) continue;
                Int q = floor_div(m(i, t), m(t, t));
                tr.add_row(m, i, t, -q);
                if (m(i, t) != 0) {
                    // remainder becomes the smaller pivot
                    m.swap_rows(t, i);
                    tr.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (m(t, j) == 0) continue;
                Int q = floor_div(m(t, j), m(t, t));
                tr.add_col(m, j, t, -q);
                if (m(t, j) != 0) {
                    m.swap_cols(t, j);
                    tr.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block for the
            // divisibility chain; pull a bad row up and redo
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        tr.add_row(m, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (m(t, t) < 0) {
            tr.negate_row(m, t);
        }
    }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm s;
    s.d = a;
    s.u = IntMatrix::identity(a.rows());
    s.uinv = IntMatrix::identity(a.rows());
    s.v = IntMatrix::identity(a.cols());
    s.vinv = IntMatrix::identity(a.cols());
    Tracker tr{&s.u, &s.uinv, &s.v, &s.vinv};
    diagonalize(s.d, tr);
    std::size_t nmin = std::min(a.rows(), a.cols());
    while (s.rank < nmin && s.d(s.rank, s.rank) != 0) ++s.rank;
    return s;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    IntMatrix m = a;
    Tracker tr; // no tracking
    diagonalize(m, tr);
    std::vector<Int> f;
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < nmin && m(i, i) != 0; ++i) f.push_back(m(i, i));
    return f;
}

std::size_t integer_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw ValidationError("solve_integer: dimension mismatch");
    SmithForm s = smith_normal_form(a);
    std::vector<Int> c = s.u * b;
    std::vector<Int> y(a.cols());
    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < nmin && s.d(i, i) != 0) {
            if (c[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    return s.v.col_slice(s.rank, a.cols());
}

IntMatrix lattice_basis(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    IntMatrix b(a.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = s.d(j, j) * s.uinv(i, j);
    return b;
}

bool lattice_contains(const IntMatrix& a, const std::vector<Int>& b) {
    return solve_integer(a, b).has_value();
}

bool lattice_contains_all(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("lattice_contains_all: ambient mismatch");
    SmithForm s = smith_normal_form(a);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Int> c = s.u * b.col(j);
        std::size_t nmin = std::min(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < nmin && s.d(i, i) != 0) {
                if (c[i] % s.d(i, i) != 0) return false;
            } else if (c[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_contains_all(a, b) && lattice_contains_all(b, a);
}

} // namespace nervetower
