#include "aq/models.hpp"

#include "aq/error.hpp"

namespace aq::cdga::models {

using gca::GeneratorSymbol;
using gca::GradedAlgebra;

Presentation sphere(int n)
{
    if (n < 1)
        throw ParameterError("sphere dimension must be >= 1, got " + std::to_string(n));
    std::string name = "S" + std::to_string(n);
    std::string e = "e" + std::to_string(n);
    if (n % 2 != 0)
        return Presentation(name, GradedAlgebra::make({{e, n}}));
    std::string top = "e" + std::to_string(2 * n - 1);
    auto alg = GradedAlgebra::make({{e, n}, {top, 2 * n - 1}});
    std::vector<Polynomial> d(alg->size(), Polynomial(alg));
    d[alg->generator(top).pos] = gca::pow(Polynomial::generator(alg, e), 2);
    return Presentation(name, alg, std::move(d));
}

Presentation cpn(int n, const std::string& x, const std::string& xp)
{
    if (n < 1)
        throw ParameterError("CP^n needs n >= 1, got " + std::to_string(n));
    auto alg = GradedAlgebra::make({{x, 2}, {xp, 2 * n + 1}});
    std::vector<Polynomial> d(alg->size(), Polynomial(alg));
    d[alg->generator(xp).pos] = gca::pow(Polynomial::generator(alg, x), static_cast<unsigned>(n + 1));
    return Presentation("CP" + std::to_string(n), alg, std::move(d));
}

Presentation polynomial_algebra(const std::string& gen, int degree, const std::string& name)
{
    if (degree < 2 || degree % 2 != 0)
        throw ParameterError("polynomial generator needs an even degree >= 2");
    return Presentation(name.empty() ? "P_" + gen : name, GradedAlgebra::make({{gen, degree}}));
}

Presentation cp_infinity(const std::string& gen) { return polynomial_algebra(gen, 2, "CPinf"); }

Presentation truncated_polynomial(const std::string& gen, int degree, int m, const std::string& name)
{
    if (degree < 2 || degree % 2 != 0)
        throw ParameterError("truncated generator needs an even degree >= 2");
    if (m < 0)
        throw ParameterError("truncation height must be >= 0");
    auto alg = GradedAlgebra::make({{gen, degree}}, {{{gen, static_cast<unsigned>(m + 1)}}});
    return Presentation(name.empty() ? "T_" + gen + "_" + std::to_string(m + 1) : name,
                        alg);
}

Presentation cpm_cohomology(int m, const std::string& gen)
{
    return truncated_polynomial(gen, 2, m, "HCP" + std::to_string(m));
}

Presentation tensor(const Presentation& a, const Presentation& b, const std::string& name)
{
    std::vector<GeneratorSymbol> gens;
    std::vector<gca::RelationSpec> rels;
    for (const auto* p : {&a, &b}) {
        const auto& alg = *p->algebra();
        for (auto pos : alg.declaration_order())
            gens.push_back(alg.symbol(pos));
        for (const auto& r : alg.ideal().generators()) {
            gca::RelationSpec factors;
            for (std::size_t pos = 0; pos < alg.size(); ++pos) {
                if (r.exponent(pos) > 0)
                    factors.emplace_back(alg.symbol(pos).name, r.exponent(pos));
            }
            rels.push_back(std::move(factors));
        }
    }
    gca::AlgebraPtr alg;
    try {
        alg = GradedAlgebra::make(gens, rels);
    } catch (const ParameterError& e) {
        throw ParameterError("tensor product of '" + a.name() + "' and '" + b.name() + "': " + e.what());
    }
    std::vector<Polynomial> d(alg->size(), Polynomial(alg));
    for (const auto* p : {&a, &b}) {
        for (std::size_t pos = 0; pos < p->size(); ++pos) {
            auto target = alg->generator(p->algebra()->symbol(pos).name).pos;
            d[target] = gca::transport(p->d(pos), alg);
        }
    }
    return Presentation(name, alg, std::move(d));
}

Morphism identity(const Presentation& a, const std::string& name)
{
    std::vector<Polynomial> images;
    for (std::size_t pos = 0; pos < a.size(); ++pos)
        images.push_back(Polynomial::generator(a.algebra(), pos));
    return Morphism(name, a, a, std::move(images));
}

Morphism constant_map(const Presentation& source, const Presentation& target, const std::string& name)
{
    std::vector<Polynomial> images(source.size(), Polynomial(target.algebra()));
    return Morphism(name, source, target, std::move(images));
}

Morphism cp_map(int n, int m, const Rational& q1, const Rational& q2, const Rational& q3)
{
    if (n < 1)
        throw ParameterError("cp_map needs n >= 1");
    if (m < 0 || m >= n)
        throw ParameterError("cp_map needs 0 <= m < n, got n=" + std::to_string(n) +
                             ", m=" + std::to_string(m));
    auto source = tensor(cp_infinity("z"), cpn(n), "Y");
    auto target = tensor(polynomial_algebra("w", 2), cpm_cohomology(m), "B");
    const auto& src = *source.algebra();
    const auto& tgt = target.algebra();
    auto w = Polynomial::generator(tgt, "w");
    auto y = Polynomial::generator(tgt, "y");
    std::vector<Polynomial> images(src.size(), Polynomial(tgt));
    images[src.generator("z").pos] = w * q1;
    images[src.generator("x").pos] = w * q2 + y * q3;
    return Morphism("f", std::move(source), std::move(target), std::move(images));
}

}  // namespace aq::cdga::models
