#include "aq/cdga.hpp"

#include "aq/error.hpp"

#include <algorithm>

namespace aq::cdga {

namespace {

std::vector<Polynomial> zeros(const AlgebraPtr& alg)
{
    return std::vector<Polynomial>(alg->size(), Polynomial(alg));
}

}  // namespace

Presentation::Presentation(std::string name, AlgebraPtr algebra, std::vector<Polynomial> differential)
    : name_(std::move(name)), alg_(std::move(algebra)), d_(std::move(differential))
{
    if (d_.size() != alg_->size())
        throw ContractViolation("differential must be given on every generator");
    for (const auto& p : d_) {
        if (p.algebra() != alg_)
            throw DomainMismatch("differential value lives in a different algebra");
    }
}

Presentation::Presentation(std::string name, AlgebraPtr algebra)
    : Presentation(std::move(name), algebra, zeros(algebra))
{}

bool Presentation::is_minimal() const
{
    if (!is_sullivan_free())
        return false;
    for (const auto& p : d_) {
        for (const auto& [m, c] : p.terms()) {
            if (m.word_length() < 2)
                return false;
        }
    }
    return true;
}

bool Presentation::has_zero_differential() const
{
    return std::all_of(d_.begin(), d_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int Presentation::max_generator_degree() const
{
    int out = 0;
    for (const auto& g : alg_->symbols())
        out = std::max(out, g.degree);
    return out;
}

Presentation Presentation::renamed(std::string name) const
{
    Presentation p = *this;
    p.name_ = std::move(name);
    return p;
}

Polynomial differential_of_word(const Presentation& a, std::span<const std::size_t> word)
{
    const auto& alg = a.algebra();
    std::vector<Polynomial> left, values;
    std::vector<int> degrees;
    for (auto pos : word) {
        left.push_back(Polynomial::generator(alg, pos));
        values.push_back(a.d(pos));
        degrees.push_back(alg->symbol(pos).degree);
    }
    return gca::twisted_leibniz(alg, left, values, degrees, 1);
}

Polynomial extend_differential(const Presentation& a, const Polynomial& p)
{
    if (p.algebra() != a.algebra())
        throw DomainMismatch("polynomial does not belong to the presentation's algebra");
    Polynomial out(a.algebra());
    for (const auto& [m, c] : p.terms()) {
        auto word = gca::factor_word(m);
        out += differential_of_word(a, word) * c;
    }
    return out;
}

std::vector<std::string> validate(const Presentation& a)
{
    std::vector<std::string> out;
    const auto& alg = *a.algebra();
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        const auto& g = alg.symbol(pos);
        const auto& dv = a.d(pos);
        if (!dv.is_homogeneous(g.degree + 1)) {
            auto deg = dv.degree();
            out.push_back("degree: d(" + g.name + ") = " + gca::to_string(dv) + " has degree " +
                          (deg ? std::to_string(*deg) : std::string("inhomogeneous")) +
                          ", expected " + std::to_string(g.degree + 1));
        }
    }
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        auto dd = extend_differential(a, a.d(pos));
        if (!dd.is_zero())
            out.push_back("d^2(" + alg.symbol(pos).name + ") = " + gca::to_string(dd) + " != 0");
    }
    for (const auto& r : alg.ideal().generators()) {
        auto dr = differential_of_word(a, gca::factor_word(r));
        if (!dr.is_zero())
            out.push_back("relation " + gca::to_string(alg, r) + ": d(" + gca::to_string(alg, r) +
                          ") = " + gca::to_string(dr) + " is not in the relation ideal");
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

Morphism::Morphism(std::string name, Presentation source, Presentation target,
                   std::vector<Polynomial> images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images))
{
    if (images_.size() != source_.size())
        throw ContractViolation("morphism must give an image for every source generator");
    for (const auto& p : images_) {
        if (p.algebra() != target_.algebra())
            throw DomainMismatch("morphism image lives outside the target algebra");
    }
}

Polynomial apply_word(const Morphism& f, std::span<const std::size_t> word)
{
    Polynomial out = Polynomial::constant(f.target().algebra(), Rational(1));
    for (auto pos : word)
        out = gca::mul(out, f.image(pos));
    return out;
}

Polynomial apply_morphism(const Morphism& f, const Polynomial& p)
{
    if (p.algebra() != f.source().algebra())
        throw DomainMismatch("polynomial does not belong to the morphism's source");
    Polynomial out(f.target().algebra());
    for (const auto& [m, c] : p.terms())
        out += apply_word(f, gca::factor_word(m)) * c;
    return out;
}

std::vector<std::string> structural_violations(const Morphism& f)
{
    std::vector<std::string> out;
    const auto& src = *f.source().algebra();
    for (std::size_t pos = 0; pos < src.size(); ++pos) {
        const auto& g = src.symbol(pos);
        if (!f.image(pos).is_homogeneous(g.degree)) {
            auto deg = f.image(pos).degree();
            out.push_back("degree: " + f.name() + "(" + g.name + ") = " + gca::to_string(f.image(pos)) +
                          " has degree " + (deg ? std::to_string(*deg) : std::string("inhomogeneous")) +
                          ", expected " + std::to_string(g.degree));
        }
    }
    for (const auto& r : src.ideal().generators()) {
        auto img = apply_word(f, gca::factor_word(r));
        if (!img.is_zero())
            out.push_back("relation " + gca::to_string(src, r) + " maps to " + gca::to_string(img) +
                          " != 0");
    }
    return out;
}

std::vector<std::string> chain_map_violations(const Morphism& f)
{
    std::vector<std::string> out;
    const auto& src = *f.source().algebra();
    for (std::size_t pos = 0; pos < src.size(); ++pos) {
        auto lhs = apply_morphism(f, f.source().d(pos));
        auto rhs = extend_differential(f.target(), f.image(pos));
        if (!(lhs == rhs)) {
            const auto& name = src.symbol(pos).name;
            out.push_back("chain map: " + f.name() + "(d " + name + ") = " + gca::to_string(lhs) +
                          " but d " + f.name() + "(" + name + ") = " + gca::to_string(rhs));
        }
    }
    return out;
}

std::vector<std::string> validate(const Morphism& f)
{
    auto out = structural_violations(f);
    if (!out.empty())
        return out;
    return chain_map_violations(f);
}

// ---------------------------------------------------------------------------------------------

std::vector<Polynomial> quadratic_part(const Presentation& a)
{
    if (!a.is_sullivan_free())
        throw UnsupportedPresentation("quadratic part needs a free presentation; '" + a.name() +
                                      "' has relations");
    std::vector<Polynomial> out;
    for (const auto& dv : a.differential()) {
        Polynomial q(a.algebra());
        for (const auto& [m, c] : dv.terms()) {
            if (m.word_length() == 2)
                q.add_term(m, c);
        }
        out.push_back(std::move(q));
    }
    return out;
}

bool is_purely_quadratic(const Presentation& a)
{
    for (const auto& dv : a.differential()) {
        for (const auto& [m, c] : dv.terms()) {
            if (m.word_length() != 2)
                return false;
        }
    }
    return true;
}

ExtInt omega(const Presentation& a)
{
    std::optional<long> best;
    for (const auto& dv : a.differential()) {
        for (const auto& [m, c] : dv.terms()) {
            long len = m.word_length();
            if (!best || len < *best)
                best = len;
        }
    }
    return best ? ExtInt(*best) : ExtInt::infinity();
}

namespace {

void max_word_length(const gca::GradedAlgebra& alg, const std::vector<std::uint32_t>& bound,
                     std::size_t pos, std::vector<std::uint32_t>& exps, int degree, long& best)
{
    if (pos == alg.size()) {
        gca::Monomial m(exps, degree);
        if (!alg.ideal().contains(m))
            best = std::max(best, static_cast<long>(m.word_length()));
        return;
    }
    for (std::uint32_t e = 0; e <= bound[pos]; ++e) {
        exps[pos] = e;
        gca::Monomial partial(exps, 0);
        // once a prefix is in the ideal every extension is too
        if (e > 0 && alg.ideal().contains(partial))
            break;
        max_word_length(alg, bound, pos + 1, exps, degree + static_cast<int>(e) * alg.symbol(pos).degree,
                        best);
    }
    exps[pos] = 0;
}

}  // namespace

ExtInt nil(const Presentation& a)
{
    const auto& alg = *a.algebra();
    std::vector<std::uint32_t> bound(alg.size(), 1);
    for (std::size_t pos = 0; pos < alg.size(); ++pos) {
        if (alg.symbol(pos).odd())
            continue;
        std::optional<std::uint32_t> power;
        for (const auto& r : alg.ideal().generators()) {
            if (r.word_length() == r.exponent(pos) && (!power || r.exponent(pos) < *power))
                power = r.exponent(pos);
        }
        if (!power)
            return ExtInt::infinity();
        bound[pos] = *power - 1;
    }
    long best = 0;
    std::vector<std::uint32_t> exps(alg.size(), 0);
    max_word_length(alg, bound, 0, exps, 0, best);
    return ExtInt(best);
}

int d1_depth(const Presentation& a)
{
    auto d1 = quadratic_part(a);
    const std::size_t n = a.size();
    std::vector<bool> prev(n, false);  // V_{-1} = 0
    int depth = 0;
    for (int i = 0;; ++i) {
        std::vector<bool> next(n, false);
        for (std::size_t v = 0; v < n; ++v) {
            bool inside = true;
            for (const auto& [m, c] : d1[v].terms()) {
                for (std::size_t pos = 0; pos < n && inside; ++pos) {
                    if (m.exponent(pos) > 0 && !prev[pos])
                        inside = false;
                }
            }
            next[v] = inside;
        }
        if (next == prev)
            break;
        depth = i;
        prev = std::move(next);
    }
    if (std::find(prev.begin(), prev.end(), false) != prev.end()) {
        std::string stuck;
        for (std::size_t v = 0; v < n; ++v) {
            if (!prev[v])
                stuck += (stuck.empty() ? "" : ", ") + a.algebra()->symbol(v).name;
        }
        throw NotNilpotent("quadratic part not nilpotent: the d1-filtration of '" + a.name() +
                           "' never reaches " + stuck);
    }
    return depth;
}

StructuralInvariants structural_invariants(const Presentation& a)
{
    StructuralInvariants s;
    s.omega = omega(a);
    s.nil = nil(a);
    s.d1_depth = d1_depth(a);
    s.wl_space = s.d1_depth + 1;
    return s;
}

}  // namespace aq::cdga
