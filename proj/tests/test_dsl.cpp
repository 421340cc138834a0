#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/dsl.hpp"
#include "aq/models.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace aq;
using namespace aq::dsl;

namespace {

std::string read(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Diagnostic> diagnostics_of(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.diagnostics();
    }
    return {};
}

void check_round_trip(const std::string& text)
{
    auto first = parse(text);
    auto printed = print(first);
    auto second = parse(printed);
    CHECK(same_declarations(first, second));
    CHECK(print(second) == printed);
}

}  // namespace

TEST_CASE("the CP^2 model")
{
    auto file = parse("algebra Y { gen x : 2; gen xp : 5; d xp = x^3; }");
    REQUIRE(file.algebras.size() == 1);
    const auto& y = file.algebras[0].presentation;
    CHECK(y.name() == "Y");
    CHECK(gca::to_string(y.d(*y.algebra()->find("xp"))) == "x^3");
    CHECK(cdga::omega(y) == cdga::ExtInt(3));
}

TEST_CASE("a truncated target")
{
    auto file = parse("algebra B { gen w : 2; gen y : 2; rel y^2; }");
    const auto& b = *file.find_algebra("B");
    CHECK(b.algebra()->ideal().generators().size() == 1);
    CHECK(cdga::nil(b).is_infinite());
    CHECK(file.find_algebra("C") == nullptr);
}

TEST_CASE("degree mismatch carries a location")
{
    auto d = diagnostics_of("algebra Y { gen x : 2; gen xp : 5;\n  d xp = x^2; }");
    REQUIRE(d.size() == 1);
    CHECK(d[0].where.line == 2);
    CHECK(d[0].where.column == 10);
    CHECK(d[0].message.find("(4 != 6)") != std::string::npos);
}

TEST_CASE("syntax errors name the expected token")
{
    auto d = diagnostics_of("algebra Y { gen x : 2 }");
    REQUIRE(d.size() == 1);
    CHECK(d[0].str() == "1:23: error: expected ';', found '}'");
    CHECK_FALSE(diagnostics_of("algebra { }").empty());
    CHECK_FALSE(diagnostics_of("morphism f : A B { }").empty());
    CHECK_FALSE(diagnostics_of("algebra Y { gen x : 2; d x = x^; }").empty());
}

TEST_CASE("semantic errors are all collected")
{
    auto d = diagnostics_of(R"(algebra Y { gen x : 2; gen x : 4; }
algebra W { gen x : 2; d q = x; }
morphism f : W -> Z { x |-> 1; }
)");
    REQUIRE(d.size() == 3);
    CHECK(d[0].message.find("duplicate generator") != std::string::npos);
    CHECK(d[1].message.find("unknown symbol") != std::string::npos);
    CHECK(d[2].message.find("unknown algebra") != std::string::npos);
}

TEST_CASE("morphisms need every image exactly once")
{
    auto missing = diagnostics_of("algebra Y { gen x : 2; gen y : 2; } morphism f : Y -> Y { x |-> x; }");
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].message.find("no image") != std::string::npos);
    auto twice = diagnostics_of("algebra Y { gen x : 2; } morphism f : Y -> Y { x |-> x; x |-> 2*x; }");
    CHECK(twice.size() == 1);
    auto wrong = diagnostics_of("algebra Y { gen x : 2; } morphism f : Y -> Y { x |-> x^2; }");
    CHECK(wrong.size() == 1);
}

TEST_CASE("polynomial syntax")
{
    auto alg = gca::GradedAlgebra::make({{"x", 2}, {"y", 2}, {"a", 1}, {"b", 1}});
    CHECK(gca::to_string(parse_polynomial(alg, "2 x y^3 + x^2*y^2")) == "x^2*y^2 + 2*x*y^3");
    CHECK(gca::to_string(parse_polynomial(alg, "-6/1*y")) == "-6*y");
    CHECK(gca::to_string(parse_polynomial(alg, "b*a + a*b")) == "0");
    CHECK(gca::to_string(parse_polynomial(alg, "b*a")) == "-a*b");
    CHECK(gca::to_string(parse_polynomial(alg, "4/6")) == "2/3");
    CHECK_THROWS_AS(parse_polynomial(alg, "x +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(alg, "z"), ParseError);
}

TEST_CASE("round trip on the corpus")
{
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(AQ_CORPUS_DIR)) {
        if (entry.path().extension() != ".aq")
            continue;
        CAPTURE(entry.path().string());
        check_round_trip(read(entry.path()));
        ++files;
    }
    CHECK(files >= 20);
}

TEST_CASE("round trip on the library models")
{
    using namespace cdga::models;
    std::vector<cdga::Presentation> algebras;
    for (int n = 1; n <= 6; ++n)
        algebras.push_back(sphere(n));
    for (int n = 1; n <= 4; ++n)
        algebras.push_back(cpn(n));
    algebras.push_back(cp_infinity());
    algebras.push_back(polynomial_algebra("t", 4));
    algebras.push_back(truncated_polynomial("u", 4, 2));
    algebras.push_back(cpm_cohomology(3));
    algebras.push_back(tensor(cp_infinity("w"), cpm_cohomology(2), "B"));
    for (const auto& a : algebras) {
        CAPTURE(a.name());
        check_round_trip(print(a));
    }
    for (auto f : {cp_map(2, 1, 0, 0, 1), cp_map(4, 3, make_rational(1, 3), -2, 5)}) {
        SourceFile file;
        file.algebras.push_back({f.source(), {}});
        file.algebras.push_back({f.target(), {}});
        file.morphisms.push_back({f, {}});
        check_round_trip(print(file));
    }
    SourceFile file;
    auto id = identity(sphere(2), "id");
    file.algebras.push_back({id.source(), {}});
    file.morphisms.push_back({id, {}});
    check_round_trip(print(file));
}

TEST_CASE("printing is canonical")
{
    auto file = parse("algebra P { gen y : 2; gen x : 2; gen t : 5; d t = y^3 + 1/2*x*y^2 - 0*x^3; }");
    CHECK(print(file) == "algebra P {\n  gen y : 2;\n  gen x : 2;\n  gen t : 5;\n  d t = 1/2*x*y^2 + y^3;\n}\n");
}
