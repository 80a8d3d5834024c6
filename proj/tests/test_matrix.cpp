#include <doctest.h>

#include <random>

#include "mcm/json_io.hpp"
#include "mcm/matrix.hpp"

using namespace mcm;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                          FieldSpec f = FieldSpec::rationals()) {
    std::uniform_int_distribution<int> d(-3, 3);
    ExactMatrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rat(d(rng)));
    return m;
}

}  // namespace

TEST_CASE("rref identity is fixed") {
    auto id = ExactMatrix::identity(2);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref rank-1 matrix") {
    auto m = ExactMatrix::from_rows({{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.reduced == ExactMatrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(rank(m) == 1);
}

TEST_CASE("rref over F2 with a row swap") {
    // hand oracle: swap the two rows
    auto f2 = FieldSpec::prime(2);
    auto m = ExactMatrix::from_rows({{0, 1}, {1, 0}}, f2);
    auto r = rref(m);
    CHECK(r.reduced == ExactMatrix::identity(2, f2));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.transform * m == r.reduced);
}

TEST_CASE("kernel of zero and invertible matrices") {
    CHECK(kernel_basis(ExactMatrix(3, 3)).cols() == 3);
    CHECK(kernel_basis(ExactMatrix::identity(4)).cols() == 0);
}

TEST_CASE("kernel of a rank-2 map") {
    // solved by hand: x0 = -x1, x2 = 0
    auto m = ExactMatrix::from_rows({{1, 1, 0}, {0, 0, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK(k.at(2, 0) == 0);
    CHECK((m * k).is_zero());
}

TEST_CASE("solve basics") {
    auto b = ExactMatrix::from_rows({{3}, {5}});
    auto x = solve(ExactMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto a = ExactMatrix::from_rows({{1}, {0}});
    auto bad = ExactMatrix::from_rows({{0}, {1}});
    CHECK(!solve(a, bad).has_value());

    auto two = ExactMatrix::from_rows({{2}});
    auto one = ExactMatrix::from_rows({{1}});
    auto half = solve(two, one);
    REQUIRE(half.has_value());
    CHECK(half->at(0, 0) == Rat(1, 2));
}

TEST_CASE("rank and kronecker basics") {
    CHECK(rank(ExactMatrix::identity(5)) == 5);
    auto k = kronecker(ExactMatrix::from_rows({{2}}), ExactMatrix::from_rows({{3}}));
    CHECK(k == ExactMatrix::from_rows({{6}}));
    CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(ExactMatrix(2, 2) * ExactMatrix(3, 3), ShapeError);
    CHECK_THROWS_AS(hstack(ExactMatrix(2, 2), ExactMatrix(3, 2)), ShapeError);
    CHECK_THROWS_AS(vstack(ExactMatrix(2, 2), ExactMatrix(2, 3)), ShapeError);
}

TEST_CASE("rank-nullity, kernel annihilation, rref idempotence") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        FieldSpec f = trial % 3 == 2 ? FieldSpec::prime(trial % 2 ? 3 : 5)
                                     : FieldSpec::rationals();
        auto m = random_matrix(rng, 1 + trial % 5, 1 + (trial * 7) % 6, f);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == m.cols());
        CHECK((m * k).is_zero());
        auto r = rref(m);
        CHECK(r.transform * m == r.reduced);
        CHECK(rref(r.reduced).reduced == r.reduced);
    }
}

TEST_CASE("solve postconditions on random systems") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(rng, 2 + trial % 4, 2 + (trial * 3) % 4);
        auto b = random_matrix(rng, a.rows(), 1);
        auto x = solve(a, b);
        if (x) {
            CHECK(a * *x == b);
        } else {
            CHECK(rank(hstack(a, b)) > rank(a));
        }
    }
}

TEST_CASE("vec/kron compatibility") {
    std::mt19937_64 rng(99);
    auto b = random_matrix(rng, 3, 2);
    auto m = random_matrix(rng, 2, 4);
    auto a = random_matrix(rng, 4, 3);
    CHECK(vec(b * m * a) == kronecker(a.transpose(), b) * vec(m));
}

TEST_CASE("matrix json round trip") {
    auto m = ExactMatrix::from_rows({{Rat(1, 2), 2}, {-3, 0}});
    auto j = matrix_to_json(m);
    CHECK(j["field"] == "Q");
    CHECK(j["entries"][0] == "1/2");
    CHECK(matrix_from_json(j) == m);

    auto f5 = FieldSpec::prime(5);
    ExactMatrix n(1, 2, f5);
    n.set(0, 0, Rat(-1));  // canonical representative 4
    CHECK(n.at(0, 0) == 4);
    CHECK(matrix_from_json(matrix_to_json(n)) == n);
}
