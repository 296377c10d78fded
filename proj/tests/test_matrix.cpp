#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgp/field.hpp"
#include "qgp/matrix.hpp"

using namespace qgp;
using M = Matrix<Rat>;

TEST_CASE("rank basics") {
    CHECK(rank(M::identity(2)) == 2);
    CHECK(rank(M(2, 2)) == 0);
    CHECK(rank(M::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(M::identity(3)).cols() == 0);
    CHECK(nullspace(M(2, 3)).cols() == 3);

    auto n = nullspace(M::from_rows({{1, 1}}));
    REQUIRE(n.cols() == 1);
    CHECK(n(0, 0) == -n(1, 0));
    CHECK(!n(0, 0).is_zero());
}

TEST_CASE("solve basics") {
    M b = M::from_rows({{3}, {5}});
    auto x = solve(M::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK(!solve(M(2, 2), b));

    auto h = solve(M::from_rows({{2}}), M::from_rows({{1}}));
    REQUIRE(h);
    CHECK((*h)(0, 0) == Rat(1, 2));
}

TEST_CASE("quotient_basis basics") {
    auto [p0, l0] = quotient_basis<Rat>(2, M::identity(2));
    CHECK(p0.rows() == 0);

    auto [p1, l1] = quotient_basis<Rat>(2, M(2, 0));
    CHECK(p1 == M::identity(2));

    auto [p2, l2] = quotient_basis<Rat>(2, M::from_rows({{1}, {0}}));
    CHECK(p2.rows() == 1);
    CHECK((p2 * l2) == M::identity(1));
}

TEST_CASE("randomized linear algebra invariants") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        M m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(d(rng));

        // rank-nullity
        auto n = nullspace(m);
        CHECK(rank(m) + n.cols() == c);
        CHECK((m * n).is_zero());

        // solve: consistent iff rank([m|b]) == rank(m)
        M b(r, 1);
        for (std::size_t i = 0; i < r; ++i) b(i, 0) = Rat(d(rng));
        auto x = solve(m, b);
        if (x) CHECK((m * *x) == b);
        else CHECK(rank(M::hstack(m, b)) > rank(m));

        // quotient round-trip: projection kills the subspace
        auto sub = column_basis(m);
        auto [proj, lift] = quotient_basis<Rat>(r, sub);
        CHECK((proj * sub).is_zero());
        if (proj.rows() > 0) CHECK((proj * lift) == M::identity(proj.rows()));
    }
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(13);
    Matrix<Fp> m = Matrix<Fp>::from_rows({{2, 1}, {1, 8}});
    CHECK(rank(m) == 2);
    CHECK((inverse(m) * m) == Matrix<Fp>::identity(2));
    CHECK(Fp(5) * Fp(5).inv() == Fp(1));
    CHECK_THROWS_AS(Fp::set_modulus(12), UnsupportedField);
    Fp::set_modulus(13);
}
