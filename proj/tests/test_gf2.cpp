#include <doctest.h>

#include <random>

#include "tetdual/error.hpp"
#include "tetdual/gf2.hpp"

using namespace tetdual;

namespace {

BitVector bits(std::initializer_list<int> ones, std::size_t n)
{
    BitVector v(n);
    for (int i : ones) v.set(static_cast<std::size_t>(i));
    return v;
}

Gf2Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    Gf2Matrix m(r, c);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, coin(rng));
    return m;
}

} // namespace

TEST_CASE("bitvector basics")
{
    BitVector v(130);
    CHECK(v.none());
    CHECK(v.lowest() == BitVector::npos);
    v.set(3);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.lowest() == 3);
    CHECK(v.highest() == 129);
    v.flip(3);
    CHECK(v.lowest() == 64);
    CHECK(v.ones() == std::vector<std::size_t>{64, 129});

    auto w = bits({64, 100}, 130);
    CHECK(v.dot(w) == true);
    v ^= w;
    CHECK(v.ones() == std::vector<std::size_t>{100, 129});
    v.clear();
    CHECK(v.none());
}

TEST_CASE("bitvector resize drops high bits")
{
    auto v = bits({1, 70}, 80);
    v.resize(65);
    CHECK(v.ones() == std::vector<std::size_t>{1});
    v.resize(200);
    CHECK(v.count() == 1);
}

TEST_CASE("rank and rref of small matrices")
{
    // rows: 110, 011, 101 -> rank 2
    auto m = Gf2Matrix::from_rows({bits({0, 1}, 3), bits({1, 2}, 3), bits({0, 2}, 3)}, 3);
    CHECK(m.rank() == 2);
    const auto e = m.rref();
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(Gf2Matrix::identity(5).rank() == 5);
    CHECK(Gf2Matrix(4, 7).rank() == 0);
    CHECK_THROWS_AS(Gf2Matrix::from_rows({bits({0}, 2)}, 3), Error);
}

TEST_CASE("solve, kernel and inverse agree with multiplication")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 90;
        const auto a = random_matrix(r, c, rng);

        BitVector x(c);
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) x.set(j);
        const auto b = a.multiply(x);
        const auto sol = a.solve(b);
        REQUIRE(sol);
        CHECK(a.multiply(*sol) == b);

        const auto ker = a.kernel_basis();
        CHECK(ker.size() + a.rank() == c);
        for (const auto& k : ker) CHECK(a.multiply(k).none());
        CHECK(a.transpose().rank() == a.rank());
    }

    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto a = random_matrix(n, n, rng);
        const auto inv = a.inverse();
        CHECK(inv.has_value() == (a.rank() == n));
        if (inv) CHECK(a.multiply(*inv) == Gf2Matrix::identity(n));
    }
}

TEST_CASE("inconsistent system has no solution")
{
    // x0 + x1 = 1 and x0 + x1 = 0
    auto a = Gf2Matrix::from_rows({bits({0, 1}, 2), bits({0, 1}, 2)}, 2);
    CHECK_FALSE(a.solve(bits({0}, 2)).has_value());
    CHECK(a.solve(bits({0, 1}, 2)).has_value());
}

TEST_CASE("column reducer tracks span and tags")
{
    ColumnReducer red(6, 3);
    CHECK(red.insert(bits({0, 1}, 6), bits({0}, 3)));
    CHECK(red.insert(bits({1, 2}, 6), bits({1}, 3)));
    CHECK_FALSE(red.insert(bits({0, 2}, 6), bits({2}, 3)));
    CHECK(red.rank() == 2);
    CHECK(red.contains(bits({0, 2}, 6)));
    CHECK_FALSE(red.contains(bits({3}, 6)));

    // tag records which inserted columns combine to the reduced part
    BitVector v = bits({0, 2, 5}, 6);
    BitVector tag(3);
    red.reduce(v, &tag);
    CHECK(v == bits({5}, 6));
    CHECK(tag == bits({0, 1}, 3));
}

TEST_CASE("column reducer rank matches matrix rank")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 70, k = 1 + rng() % 30;
        const auto m = random_matrix(k, n, rng);
        ColumnReducer red(n);
        for (std::size_t i = 0; i < k; ++i) red.insert(m.row(i));
        CHECK(red.rank() == m.rank());
    }
}
