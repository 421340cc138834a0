#pragma once

// Randomized checks of the derivation-complex axioms, shared by the unit and acceptance suites.

#include "aq/cohomology.hpp"
#include "contexts.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

namespace properties {

using namespace aq;
using namespace aq::der;
using gca::Polynomial;

constexpr unsigned kSeed = 20240517;
constexpr int kRounds = 40;

struct Tally {
    std::size_t cases = 0;
    std::size_t shuffles = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok)
            failures.push_back(what);
    }
};

struct Fixture {
    std::string name;
    std::unique_ptr<DerContext> ctx;
    std::vector<Derivation> cocycles;  // representatives from every degree in 2..8
};

inline std::vector<Fixture> fixtures()
{
    std::vector<Fixture> out;
    for (auto& named : testing_contexts::library()) {
        for (bool based : {false, true}) {
            Fixture f;
            f.name = named.name + (based ? " based" : " free");
            f.ctx = std::make_unique<DerContext>(named.map, based);
            for (auto& rec : cohomology::aq_cohomology(*f.ctx, {2, 8}).degrees)
                f.cocycles.insert(f.cocycles.end(), rec.representatives.begin(), rec.representatives.end());
            out.push_back(std::move(f));
        }
    }
    return out;
}

class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() { return make_rational(uniform(-3, 3), uniform(1, 3)); }

    Derivation derivation(const DerContext& ctx, int degree)
    {
        DerBasis basis(ctx, degree);
        linalg::Vector c(basis.size());
        for (auto& x : c)
            x = rational();
        return basis.derivation(c);
    }

    Polynomial polynomial(const gca::AlgebraPtr& alg, int degree)
    {
        Polynomial p(alg);
        for (const auto& m : gca::basis_of_degree(*alg, degree))
            p.add_term(m, rational());
        return p;
    }

    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline bool is_exact(const DerContext& ctx, const Derivation& theta)
{
    DerBasis basis(ctx, theta.degree);
    return linalg::in_image(boundary_matrix(ctx, theta.degree - 1), basis.coordinates(theta)).has_value();
}

inline bool stays_in_augmentation_ideal(const DerContext& ctx, const Derivation& theta)
{
    for (const auto& v : theta.values) {
        if (v.augmentation() != 0)
            return false;
    }
    return true;
}

// The bracket on one generator, with each word of dv re-expanded in a shuffled order and
// weighted by the Koszul sign of the shuffle.
inline Polynomial bracket_shuffled(const DerContext& ctx, const Derivation& phi, const Derivation& psi,
                                   std::size_t v, std::mt19937& rng)
{
    const auto& src = *ctx.source().algebra();
    Polynomial out(ctx.target().algebra());
    for (const auto& [m, c] : ctx.source().d(v).terms()) {
        auto word = gca::factor_word(m);
        std::shuffle(word.begin(), word.end(), rng);
        auto canon = gca::canonical_monomial(src, word);
        if (!canon || !(canon->monomial == m))
            throw std::logic_error("shuffled word does not reproduce its monomial");
        out += detail::bracket_on_word(ctx, phi, psi, word) * (c * canon->sign);
    }
    return out;
}

inline Tally run(unsigned seed = kSeed, int rounds = kRounds)
{
    auto fx = fixtures();
    Random rnd(seed);
    Tally t;

    for (int round = 0; round < rounds; ++round) {
        for (const auto& f : fx) {
            const auto& ctx = *f.ctx;
            const auto& src = *ctx.source().algebra();
            auto where = [&](const std::string& what) {
                return what + " [" + f.name + ", round " + std::to_string(round) + "]";
            };

            int n = rnd.uniform(-8, 1);
            auto theta = rnd.derivation(ctx, n);
            t.check(is_zero(der_boundary(ctx, der_boundary(ctx, theta))), where("boundary of boundary"));

            // θ(pq) = θ(p) f(q) + (-1)^{n|p|} f(p) θ(q)
            int dp = rnd.uniform(1, 6), dq = rnd.uniform(1, 6);
            auto p = rnd.polynomial(ctx.source().algebra(), dp);
            auto q = rnd.polynomial(ctx.source().algebra(), dq);
            auto lhs = eval_derivation(ctx, theta, p * q);
            auto rhs = eval_derivation(ctx, theta, p) * cdga::apply_morphism(ctx.morphism(), q) +
                       Rational(sign_of_parity(static_cast<long>(n) * dp)) *
                           (cdga::apply_morphism(ctx.morphism(), p) * eval_derivation(ctx, theta, q));
            t.check(lhs == rhs, where("twisted Leibniz"));

            if (ctx.based())
                t.check(stays_in_augmentation_ideal(ctx, der_boundary(ctx, theta)), where("based closure of boundary"));

            int a = rnd.uniform(-6, -1), b = rnd.uniform(-6, -1);
            auto phi1 = rnd.derivation(ctx, a), phi2 = rnd.derivation(ctx, a), psi = rnd.derivation(ctx, b);
            auto s = rnd.rational(), u = rnd.rational();
            t.check(bracket(ctx, s * phi1 + u * phi2, psi) == s * bracket(ctx, phi1, psi) + u * bracket(ctx, phi2, psi),
                    where("bracket linearity"));

            auto br = bracket(ctx, phi1, psi);
            bool order_ok = true;
            for (std::size_t v = 0; v < src.size(); ++v) {
                order_ok = order_ok && bracket_shuffled(ctx, phi1, psi, v, rnd.engine()) == br.values[v];
                ++t.shuffles;
            }
            t.check(order_ok, where("expansion-order invariance"));

            if (ctx.based())
                t.check(stays_in_augmentation_ideal(ctx, br), where("based closure of bracket"));

            if (f.cocycles.empty())
                continue;

            const auto& c1 = rnd.pick(f.cocycles);
            const auto& c2 = rnd.pick(f.cocycles);
            auto closed = bracket(ctx, rnd.rational() * c1, c2);
            t.check(is_zero(der_boundary(ctx, closed)), where("cocycle closure"));

            // [φ, ∂ρ] is exact for a cocycle φ
            auto rho = rnd.derivation(ctx, rnd.uniform(-7, -2) - 1);
            t.check(is_exact(ctx, bracket(ctx, c1, der_boundary(ctx, rho))), where("bracket with a boundary"));
        }
    }
    return t;
}

}  // namespace properties
