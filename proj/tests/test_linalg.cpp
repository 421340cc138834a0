#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/linalg.hpp"

#include <random>

using namespace aq;
using namespace aq::linalg;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t rank_cap)
{
    // product of an r x k and a k x c matrix, so rank <= k
    std::uniform_int_distribution<int> entry(-3, 3);
    RationalMatrix a(r, rank_cap), b(rank_cap, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < rank_cap; ++j)
            a(i, j) = entry(rng);
    for (std::size_t i = 0; i < rank_cap; ++i)
        for (std::size_t j = 0; j < c; ++j)
            b(i, j) = make_rational(entry(rng), 1 + (entry(rng) + 3) % 3);
    return a * b;
}

}  // namespace

TEST_CASE("rank and kernel of a small matrix")
{
    auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m * k[0]));
    CHECK(rank(RationalMatrix(0, 4)) == 0);
    CHECK(kernel_basis(RationalMatrix(0, 4)).size() == 4);
    CHECK(kernel_basis(RationalMatrix(3, 0)).empty());
}

TEST_CASE("reduced echelon form")
{
    auto e = row_reduce(RationalMatrix::from_rows({{0, 2, 4}, {1, 1, 1}}));
    std::vector<std::size_t> pivots{0, 1};
    CHECK(e.pivot_columns == pivots);
    CHECK(e.reduced == RationalMatrix::from_rows({{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("in_image returns an exact preimage")
{
    auto m = RationalMatrix::from_rows({{1, 1}, {0, 2}, {1, 3}});
    Vector b{3, 4, 7};
    auto x = in_image(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
    CHECK_FALSE(in_image(m, Vector{1, 0, 0}));
    CHECK(in_image(RationalMatrix(2, 0), Vector{0, 0}));
    CHECK_FALSE(in_image(RationalMatrix(2, 0), Vector{0, 1}));
}

TEST_CASE("rank-nullity and kernel correctness on random matrices")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = dim(rng), c = dim(rng), k = dim(rng) % 4 + 1;
        auto m = random_matrix(rng, r, c, k);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        CHECK(rank(m) <= k);
        for (const auto& v : ker)
            CHECK(is_zero(m * v));
        for (std::size_t col = 0; col < c; ++col)
            CHECK(in_image(m, m.column(col)));
    }
}

TEST_CASE("subspace basis reduction is canonical")
{
    SubspaceBasis s(3);
    CHECK(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 2, 1}));
    CHECK(s.dimension() == 2);
    CHECK(s.contains({2, 3, 1}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    // reductions of vectors differing by an element of the span agree
    CHECK(s.reduce({0, 0, 1}) == s.reduce(Vector{1, 1, 1}));
}
