#include "nervetower/smith.hpp"
#include "nervetower/abelian.hpp"
#include "nervetower/homomorphism.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nervetower;

namespace {

bool is_snf_valid(const IntMatrix& a, const SmithForm& s) {
    if (!(s.u * a * s.v == s.d)) return false;
    if (!(s.u * s.uinv == IntMatrix::identity(a.rows()))) return false;
    if (!(s.v * s.vinv == IntMatrix::identity(a.cols()))) return false;
    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j && s.d(i, j) != 0) return false;
    for (std::size_t i = 0; i < nmin; ++i) {
        if (s.d(i, i) < 0) return false;
        if (i > 0 && s.d(i, i) != 0 && s.d(i - 1, i - 1) == 0) return false;
        if (i > 0 && s.d(i - 1, i - 1) != 0 && s.d(i, i) % s.d(i - 1, i - 1) != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("2x2 with known divisors") {
        IntMatrix a(2, 2, {2, 4, 6, 8});
        SmithForm s = smith_normal_form(a);
        CHECK(is_snf_valid(a, s));
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        CHECK(s.d(0, 0) == 2);
        CHECK(s.d(1, 1) == 4);
    }
    SUBCASE("identity stays identity") {
        IntMatrix a = IntMatrix::identity(3);
        SmithForm s = smith_normal_form(a);
        CHECK(s.d == IntMatrix::identity(3));
        CHECK(s.rank == 3);
    }
    SUBCASE("zero matrix") {
        IntMatrix a(2, 3);
        SmithForm s = smith_normal_form(a);
        CHECK(s.d.is_zero());
        CHECK(s.rank == 0);
        CHECK(is_snf_valid(a, s));
    }
    SUBCASE("empty shapes are total") {
        CHECK(smith_normal_form(IntMatrix(0, 0)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(0, 4)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(4, 0)).rank == 0);
    }
}

TEST_CASE("determinantal divisor law on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix a = oracles::random_matrix(rng, dim(rng), dim(rng), 9);
        SmithForm s = smith_normal_form(a);
        REQUIRE(is_snf_valid(a, s));
        Int prod = 1;
        for (std::size_t k = 1; k <= s.rank; ++k) {
            prod *= s.d(k - 1, k - 1);
            CHECK(prod == oracles::minor_gcd(a, k));
        }
        CHECK(oracles::minor_gcd(a, s.rank + 1) == 0);
    }
}

TEST_CASE("cokernel normal forms") {
    CHECK(cokernel(IntMatrix(2, 2, {2, 0, 0, 4})) == FGAbelianGroup(0, {Int(2), Int(4)}));
    CHECK(cokernel(IntMatrix(2, 2)) == FGAbelianGroup::free(2));
    CHECK(cokernel(IntMatrix(1, 1, {6})) == FGAbelianGroup(0, {Int(6)}));
    // invariance under unimodular change of presentation
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a = oracles::random_matrix(rng, r, c, 9);
        IntMatrix p = oracles::random_unimodular(rng, r);
        IntMatrix q = oracles::random_unimodular(rng, c);
        CHECK(cokernel(a) == cokernel(p * a * q));
    }
}

TEST_CASE("integer solve") {
    SUBCASE("divisible") {
        auto x = solve_integer(IntMatrix(1, 1, {2}), {Int(4)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 2);
    }
    SUBCASE("not divisible") {
        CHECK(!solve_integer(IntMatrix(1, 1, {2}), {Int(3)}).has_value());
    }
    SUBCASE("2x2 with unit determinant content") {
        IntMatrix a(2, 2, {1, 2, 3, 4});
        std::vector<Int> b{1, 1};
        auto x = solve_integer(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
    SUBCASE("random solvable systems") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix a = oracles::random_matrix(rng, 3, 4, 6);
            std::vector<Int> x0(4);
            std::uniform_int_distribution<int> d(-5, 5);
            for (auto& e : x0) e = d(rng);
            std::vector<Int> b = a * x0;
            auto x = solve_integer(a, b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
}

TEST_CASE("kernel and lattice helpers") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 3, 5, 6);
        IntMatrix k = integer_kernel(a);
        CHECK((a * k).is_zero());
        CHECK(integer_rank(k) == 5 - integer_rank(a));
        IntMatrix b = lattice_basis(a);
        CHECK(lattice_equal(a, b));
        CHECK(integer_rank(b) == b.cols());
    }
    // containment
    IntMatrix even(1, 1, {2});
    CHECK(lattice_contains(even, {Int(6)}));
    CHECK(!lattice_contains(even, {Int(3)}));
}

TEST_CASE("homomorphism kernel/image/cokernel on pinned examples") {
    FGAbelianGroup z = FGAbelianGroup::free(1);
    FGAbelianGroup z4 = FGAbelianGroup::cyclic(4);
    SUBCASE("x2 on Z") {
        Homomorphism h(z, z, IntMatrix(1, 1, {2}));
        CHECK(hom_kernel(h).is_trivial());
        CHECK(hom_image(h) == z);
        CHECK(hom_cokernel(h) == FGAbelianGroup::cyclic(2));
    }
    SUBCASE("x2 on Z/4") {
        Homomorphism h(z4, z4, IntMatrix(1, 1, {2}));
        CHECK(hom_kernel(h) == FGAbelianGroup::cyclic(2));
        CHECK(hom_image(h) == FGAbelianGroup::cyclic(2));
        CHECK(hom_cokernel(h) == FGAbelianGroup::cyclic(2));
    }
    SUBCASE("zero map on Z") {
        Homomorphism h(z, z, IntMatrix(1, 1, {0}));
        CHECK(hom_kernel(h) == z);
        CHECK(hom_image(h).is_trivial());
        CHECK(hom_cokernel(h) == z);
    }
    SUBCASE("malformed map is rejected") {
        // Z/2 -> Z by 1 does not respect 2x = 0
        FGAbelianGroup z2 = FGAbelianGroup::cyclic(2);
        CHECK_THROWS_AS(Homomorphism(z2, z, IntMatrix(1, 1, {1})), ValidationError);
    }
}

TEST_CASE("order bookkeeping |source| = |kernel| * |image| on random finite maps") {
    std::mt19937 rng(23);
    std::vector<FGAbelianGroup> groups = {
        FGAbelianGroup::cyclic(4),
        FGAbelianGroup(0, {Int(2), Int(4)}),
        FGAbelianGroup(0, {Int(2), Int(2), Int(4)}),
        FGAbelianGroup(0, {Int(8)}),
        FGAbelianGroup(0, {Int(3), Int(3)}),
    };
    int built = 0;
    for (int trial = 0; trial < 300 && built < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
        const auto& src = groups[pick(rng)];
        const auto& tgt = groups[pick(rng)];
        IntMatrix m =
            oracles::random_matrix(rng, tgt.num_generators(), src.num_generators(), 4);
        Homomorphism h(src, tgt, m, false);
        if (!h.respects_relations()) continue;
        ++built;
        CHECK(src.order() == hom_kernel(h).order() * hom_image(h).order());
        CHECK(tgt.order() == hom_image(h).order() * hom_cokernel(h).order());
    }
    CHECK(built >= 30);
}

TEST_CASE("rank-nullity over Q for free-to-free maps") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t sr = dim(rng), tr = dim(rng);
        Homomorphism h(FGAbelianGroup::free(sr), FGAbelianGroup::free(tr),
                       oracles::random_matrix(rng, tr, sr, 5));
        CHECK(hom_kernel(h).free_rank + hom_image(h).free_rank == sr);
    }
}

TEST_CASE("normal form merging of cyclic orders") {
    auto g = FGAbelianGroup::from_cyclic_orders({Int(6), Int(4)});
    CHECK(g == FGAbelianGroup(0, {Int(2), Int(12)}));
    auto h = FGAbelianGroup::from_cyclic_orders({Int(2), Int(3)});
    CHECK(h == FGAbelianGroup(0, {Int(6)}));
    auto k = FGAbelianGroup::from_cyclic_orders({Int(0), Int(1), Int(5)}, 1);
    CHECK(k == FGAbelianGroup(2, {Int(5)}));
}
