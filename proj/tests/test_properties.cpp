#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

TEST_CASE("derivation-complex axioms on random inputs")
{
    auto t = properties::run();
    for (const auto& f : t.failures)
        FAIL_CHECK(f);
    MESSAGE("property cases: " << t.cases << ", shuffled expansions: " << t.shuffles);
    CHECK(t.cases >= 200);
    CHECK(t.failures.empty());
}

TEST_CASE("a different seed also passes")
{
    auto t = properties::run(7, 10);
    CHECK(t.failures.empty());
}
