#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/error.hpp"
#include "aq/gca.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>

using namespace aq;
using namespace aq::gca;

namespace {

AlgebraPtr mixed()
{
    // two odd, two even generators, declared out of canonical order
    return GradedAlgebra::make({{"c", 3}, {"a", 1}, {"y", 2}, {"b", 1}});
}

}  // namespace

TEST_CASE("generators are stored in (degree, name) order")
{
    auto alg = mixed();
    REQUIRE(alg->size() == 4);
    CHECK(alg->symbol(0).name == "a");
    CHECK(alg->symbol(1).name == "b");
    CHECK(alg->symbol(2).name == "y");
    CHECK(alg->symbol(3).name == "c");
    std::vector<std::size_t> decl{3, 0, 2, 1};
    CHECK(alg->declaration_order() == decl);
    CHECK(alg->find("y") == 2);
    CHECK_FALSE(alg->find("q"));
    CHECK_THROWS_AS(alg->generator("q"), DomainMismatch);
}

TEST_CASE("bad declarations are rejected")
{
    CHECK_THROWS_AS(GradedAlgebra::make({{"a", 2}, {"a", 3}}), ParameterError);
    CHECK_THROWS_AS(GradedAlgebra::make({{"a", 0}}), ParameterError);
    CHECK_THROWS_AS(GradedAlgebra::make({{"a", 2}}, {{{"b", 2}}}), ParameterError);
    // a^2 = 0 already for odd a
    CHECK_THROWS_AS(GradedAlgebra::make({{"a", 3}}, {{{"a", 2}}}), ParameterError);
}

TEST_CASE("canonical_monomial agrees with a bubble-sort sign count")
{
    auto alg = mixed();
    auto ref = oracle::import(*alg);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 6);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::size_t> word(len(rng));
        for (auto& w : word)
            w = gen(rng);
        oracle::Word ow(word.begin(), word.end());
        int want = oracle::bubble_sort(ref, ow);
        auto got = canonical_monomial(*alg, word);
        if (want == 0) {
            CHECK_FALSE(got);
            continue;
        }
        REQUIRE(got);
        CHECK(got->sign == want);
        auto back = factor_word(got->monomial);
        CHECK(oracle::Word(back.begin(), back.end()) == ow);
    }
}

TEST_CASE("odd generators anticommute, even ones commute")
{
    auto alg = mixed();
    auto a = Polynomial::generator(alg, "a");
    auto b = Polynomial::generator(alg, "b");
    auto c = Polynomial::generator(alg, "c");
    auto y = Polynomial::generator(alg, "y");
    CHECK(a * b == -(b * a));
    CHECK((a * a).is_zero());
    CHECK(a * y == y * a);
    CHECK(a * c == -(c * a));
    CHECK(to_string(b * a) == "-a*b");
    CHECK(to_string(a * b * y) == "a*b*y");
}

TEST_CASE("monomial order is degree first, then larger early exponents")
{
    auto alg = GradedAlgebra::make({{"w", 2}, {"y", 2}});
    auto w = Polynomial::generator(alg, "w");
    auto y = Polynomial::generator(alg, "y");
    auto p = pow(w + y, 2);
    CHECK(to_string(p) == "w^2 + 2*w*y + y^2");
    CHECK(to_string(Polynomial::constant(alg, 3) - y * make_rational(2, 6)) == "3 - 1/3*y");
    CHECK(to_string(Polynomial(alg)) == "0");
}

TEST_CASE("truncation by the relation ideal")
{
    auto alg = GradedAlgebra::make({{"w", 2}, {"y", 2}}, {{{"y", 2}}});
    auto w = Polynomial::generator(alg, "w");
    auto y = Polynomial::generator(alg, "y");
    CHECK(to_string(pow(w + y, 3)) == "w^3 + 3*w^2*y");
    CHECK((y * y).is_zero());
    CHECK(basis_of_degree(*alg, 4).size() == 2);  // w^2, w*y
    CHECK(basis_of_degree(*alg, 0).size() == 1);
    CHECK(basis_of_degree(*alg, 3).empty());
}

TEST_CASE("basis dimensions match a brute-force count")
{
    auto alg = GradedAlgebra::make({{"a", 1}, {"b", 3}, {"x", 2}, {"y", 4}}, {{{"x", 3}}, {{"a", 1}, {"y", 1}}});
    for (int k = 0; k <= 14; ++k) {
        std::size_t want = 0;
        for (unsigned ea = 0; ea <= 1; ++ea)
            for (unsigned eb = 0; eb <= 1; ++eb)
                for (unsigned ex = 0; ex <= 2; ++ex)
                    for (unsigned ey = 0; 4 * ey <= 14; ++ey) {
                        if (ea + 3 * eb + 2 * ex + 4 * ey != static_cast<unsigned>(k))
                            continue;
                        if (ea == 1 && ey >= 1)
                            continue;
                        ++want;
                    }
        CHECK(basis_of_degree(*alg, k).size() == want);
        auto basis = basis_of_degree(*alg, k);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
    }
}

TEST_CASE("homogeneity, degree and augmentation")
{
    auto alg = mixed();
    auto a = Polynomial::generator(alg, "a");
    auto y = Polynomial::generator(alg, "y");
    auto one = Polynomial::constant(alg, 5);
    CHECK((a * y).is_homogeneous(3));
    CHECK((a * y).degree() == 3);
    CHECK_FALSE((a + y).degree());
    CHECK(Polynomial(alg).is_homogeneous(17));
    CHECK((one + y).augmentation() == 5);
}

TEST_CASE("polynomials from different algebras do not mix")
{
    auto p = Polynomial::generator(mixed(), "a");
    auto q = Polynomial::generator(mixed(), "a");
    CHECK_THROWS_AS(p + q, DomainMismatch);
    auto moved = transport(q, p.algebra());
    CHECK(moved == p);
}

TEST_CASE("twisted Leibniz on a single word")
{
    // n = 1 with L = generators and V = d gives the ordinary Leibniz rule.
    auto alg = mixed();
    auto a = Polynomial::generator(alg, "a");
    auto b = Polynomial::generator(alg, "b");
    auto y = Polynomial::generator(alg, "y");
    std::vector<Polynomial> left{a, b}, values{y, y * a};
    std::vector<int> degrees{1, 1};
    // d(ab) = d(a) b - a d(b) = y b - a y a = y*b
    CHECK(twisted_leibniz(alg, left, values, degrees, 1) == y * b);
}

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("-6/1") == Rational(-6));
    CHECK(to_string(*parse_rational("4/6")) == "2/3");
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("x"));
    CHECK(make_rational(2, 6) == make_rational(1, 3));
}
