#include "aq/der.hpp"

#include "aq/error.hpp"

#include <map>

namespace aq::der {

DerContext::DerContext(Morphism f, bool based) : f_(std::move(f)), based_(based)
{
    if (!f_.source().is_sullivan_free())
        throw UnsupportedPresentation("derivation source '" + f_.source().name() +
                                      "' must be a free (Sullivan) algebra");
    std::vector<std::string> problems;
    for (const auto* p : {&f_.source(), &f_.target()}) {
        for (auto& v : cdga::validate(*p))
            problems.push_back(p->name() + ": " + v);
    }
    for (auto& v : cdga::structural_violations(f_))
        problems.push_back(f_.name() + ": " + v);
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    chain_defects_ = cdga::chain_map_violations(f_);
}

Derivation zero_derivation(const DerContext& ctx, int degree)
{
    return Derivation{degree, std::vector<Polynomial>(ctx.source().size(), Polynomial(ctx.target().algebra()))};
}

namespace {

void require_same_shape(const Derivation& a, const Derivation& b)
{
    if (a.degree != b.degree || a.values.size() != b.values.size())
        throw ContractViolation("derivations of different degree or shape");
}

}  // namespace

Derivation operator+(const Derivation& a, const Derivation& b)
{
    require_same_shape(a, b);
    Derivation out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += b.values[i];
    return out;
}

Derivation operator-(const Derivation& a, const Derivation& b)
{
    require_same_shape(a, b);
    Derivation out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= b.values[i];
    return out;
}

Derivation operator*(const Rational& c, const Derivation& a)
{
    Derivation out = a;
    for (auto& v : out.values)
        v *= c;
    return out;
}

bool is_zero(const Derivation& a)
{
    for (const auto& v : a.values) {
        if (!v.is_zero())
            return false;
    }
    return true;
}

void check_derivation(const DerContext& ctx, const Derivation& theta)
{
    const auto& src = *ctx.source().algebra();
    if (theta.values.size() != src.size())
        throw ContractViolation("derivation must have one value per source generator");
    for (std::size_t pos = 0; pos < src.size(); ++pos) {
        const auto& val = theta.values[pos];
        if (val.algebra() != ctx.target().algebra())
            throw ContractViolation("derivation value outside the target algebra");
        int want = src.symbol(pos).degree + theta.degree;
        if (!val.is_homogeneous(want))
            throw ContractViolation("derivation of degree " + std::to_string(theta.degree) + ": value on " +
                                    src.symbol(pos).name + " is not homogeneous of degree " +
                                    std::to_string(want));
        if (ctx.based() && val.augmentation() != 0)
            throw ContractViolation("based derivation has a value outside B+ on " + src.symbol(pos).name);
    }
}

Polynomial eval_derivation(const DerContext& ctx, const Derivation& theta, const Polynomial& p)
{
    if (p.algebra() != ctx.source().algebra())
        throw DomainMismatch("eval_derivation: polynomial is not in the source algebra");
    check_derivation(ctx, theta);
    const auto& src = *ctx.source().algebra();
    const auto& tgt = ctx.target().algebra();
    Polynomial out(tgt);
    for (const auto& [m, c] : p.terms()) {
        auto word = gca::factor_word(m);
        std::vector<Polynomial> left, values;
        std::vector<int> degrees;
        for (auto pos : word) {
            left.push_back(ctx.morphism().image(pos));
            values.push_back(theta.values[pos]);
            degrees.push_back(src.symbol(pos).degree);
        }
        out += gca::twisted_leibniz(tgt, left, values, degrees, theta.degree) * c;
    }
    return out;
}

Derivation der_boundary(const DerContext& ctx, const Derivation& theta)
{
    check_derivation(ctx, theta);
    Derivation out = zero_derivation(ctx, theta.degree + 1);
    const int sign = sign_of_parity(theta.degree);
    for (std::size_t pos = 0; pos < ctx.source().size(); ++pos) {
        Polynomial v = cdga::extend_differential(ctx.target(), theta.values[pos]);
        Polynomial t = eval_derivation(ctx, theta, ctx.source().d(pos));
        if (sign > 0)
            v -= t;
        else
            v += t;
        out.values[pos] = std::move(v);
    }
    return out;
}

DerBasis::DerBasis(const DerContext& ctx, int degree)
    : target_(ctx.target().algebra()), source_size_(ctx.source().size()), degree_(degree)
{
    const auto& src = *ctx.source().algebra();
    for (auto pos : src.declaration_order()) {
        int k = src.symbol(pos).degree + degree;
        if (k < 0 || (ctx.based() && k == 0))
            continue;
        for (auto& m : gca::basis_of_degree(*target_, k))
            elements_.push_back(BasisElement{pos, std::move(m)});
    }
}

Derivation DerBasis::element(std::size_t i) const
{
    const auto& e = elements_.at(i);
    Derivation out{degree_, std::vector<Polynomial>(source_size_, Polynomial(target_))};
    out.values[e.generator] = Polynomial::term(target_, e.value, Rational(1));
    return out;
}

linalg::Vector DerBasis::coordinates(const Derivation& theta) const
{
    if (theta.degree != degree_ || theta.values.size() != source_size_)
        throw ContractViolation("derivation does not belong to Der^" + std::to_string(degree_));
    linalg::Vector out(elements_.size());
    std::vector<std::map<gca::Monomial, std::size_t>> index(source_size_);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index[elements_[i].generator].emplace(elements_[i].value, i);
    for (std::size_t pos = 0; pos < source_size_; ++pos) {
        for (const auto& [m, c] : theta.values[pos].terms()) {
            auto it = index[pos].find(m);
            if (it == index[pos].end())
                throw ContractViolation("derivation value " + gca::to_string(*target_, m) +
                                        " lies outside the basis of Der^" + std::to_string(degree_));
            out[it->second] = c;
        }
    }
    return out;
}

Derivation DerBasis::derivation(const linalg::Vector& coords) const
{
    if (coords.size() != elements_.size())
        throw ContractViolation("coordinate vector has wrong length");
    Derivation out{degree_, std::vector<Polynomial>(source_size_, Polynomial(target_))};
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (coords[i] != 0)
            out.values[elements_[i].generator].add_term(elements_[i].value, coords[i]);
    }
    return out;
}

linalg::RationalMatrix boundary_matrix(const DerContext& ctx, int n)
{
    DerBasis from(ctx, n), to(ctx, n + 1);
    linalg::RationalMatrix m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        auto col = to.coordinates(der_boundary(ctx, from.element(j)));
        for (std::size_t i = 0; i < col.size(); ++i)
            m(i, j) = col[i];
    }
    return m;
}

namespace detail {

Polynomial bracket_on_word(const DerContext& ctx, const Derivation& phi, const Derivation& psi,
                           std::span<const std::size_t> word)
{
    const auto& tgt = ctx.target().algebra();
    const auto& src = *ctx.source().algebra();
    const std::size_t s = word.size();
    Polynomial out(tgt);
    if (s < 2)
        return out;
    const long a = phi.degree, b = psi.degree;

    std::vector<long> passed(s + 1, 0);  // passed[i] = |v_1| + ... + |v_i| (0-based: before i)
    for (std::size_t k = 0; k < s; ++k)
        passed[k + 1] = passed[k] + src.symbol(word[k]).degree;

    for (std::size_t i = 0; i < s; ++i) {
        const auto& phi_i = phi.values[word[i]];
        if (phi_i.is_zero())
            continue;
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i)
                continue;
            const auto& psi_j = psi.values[word[j]];
            if (psi_j.is_zero())
                continue;
            Polynomial prod = Polynomial::constant(tgt, Rational(1));
            for (std::size_t k = 0; k < s && !prod.is_zero(); ++k) {
                const auto& factor = k == i ? phi_i : k == j ? psi_j : ctx.morphism().image(word[k]);
                prod = gca::mul(prod, factor);
            }
            long eps = a * passed[i] + b * passed[j] + (i < j ? a * b : 0);
            if (sign_of_parity(eps) > 0)
                out += prod;
            else
                out -= prod;
        }
    }
    if (sign_of_parity(a + b - 1) < 0)
        out *= Rational(-1);
    return out;
}

}  // namespace detail

Derivation bracket(const DerContext& ctx, const Derivation& phi, const Derivation& psi)
{
    check_derivation(ctx, phi);
    check_derivation(ctx, psi);
    Derivation out = zero_derivation(ctx, phi.degree + psi.degree + 1);
    for (std::size_t pos = 0; pos < ctx.source().size(); ++pos) {
        for (const auto& [m, c] : ctx.source().d(pos).terms()) {
            auto word = gca::factor_word(m);
            out.values[pos] += detail::bracket_on_word(ctx, phi, psi, word) * c;
        }
    }
    return out;
}

std::string to_string(const DerContext& ctx, const Derivation& theta)
{
    const auto& src = *ctx.source().algebra();
    std::string out;
    for (auto pos : src.declaration_order()) {
        if (theta.values[pos].is_zero())
            continue;
        out += (out.empty() ? "{" : ", ") + src.symbol(pos).name + ": " + gca::to_string(theta.values[pos]);
    }
    return out.empty() ? "0" : out + "}";
}

}  // namespace aq::der
