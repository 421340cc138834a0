#include "aq/gca.hpp"

#include "aq/error.hpp"

#include <algorithm>
#include <numeric>

namespace aq {

std::optional<Rational> parse_rational(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-')
        i = 1;
    bool slash = false;
    bool digits_before = false, digits_after = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/' && !slash) {
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? digits_after : digits_before) = true;
        } else {
            return std::nullopt;
        }
    }
    if (!digits_before || (slash && !digits_after))
        return std::nullopt;
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace aq

namespace aq::gca {

unsigned Monomial::word_length() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

bool Monomial::divides(const Monomial& other) const
{
    if (exps_.size() != other.exps_.size())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i])
            return false;
    }
    return true;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators)
{
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && generators[j].divides(generators[i]);
        if (!redundant)
            gens_.push_back(generators[i]);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

AlgebraPtr GradedAlgebra::make(std::vector<GeneratorSymbol> declared,
                               const std::vector<RelationSpec>& relations)
{
    std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra());
    std::vector<std::size_t> order(declared.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = declared[a];
        const auto& y = declared[b];
        return std::tie(x.degree, x.name) < std::tie(y.degree, y.name);
    });

    alg->decl_.assign(declared.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& g = declared[order[pos]];
        if (g.degree < 1)
            throw ParameterError("generator '" + g.name + "' has degree " +
                                 std::to_string(g.degree) + " < 1");
        if (g.name.empty())
            throw ParameterError("generator with empty name");
        if (!alg->index_.emplace(g.name, pos).second)
            throw ParameterError("duplicate generator '" + g.name + "'");
        alg->gens_.push_back(g);
        alg->decl_[order[pos]] = pos;
    }

    std::vector<Monomial> rels;
    for (const auto& factors : relations) {
        std::vector<std::uint32_t> exps(alg->size(), 0);
        for (const auto& [name, e] : factors) {
            auto it = alg->index_.find(name);
            if (it == alg->index_.end())
                throw ParameterError("relation uses unknown generator '" + name + "'");
            exps[it->second] += e;
        }
        auto m = alg->monomial(exps);
        if (!m)
            throw ParameterError("relation is already zero (odd generator squared)");
        if (m->is_unit())
            throw ParameterError("relation 1 would kill the whole algebra");
        rels.push_back(std::move(*m));
    }
    alg->ideal_ = MonomialIdeal(std::move(rels));
    return alg;
}

std::optional<std::size_t> GradedAlgebra::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Generator GradedAlgebra::generator(std::string_view name) const
{
    auto pos = find(name);
    if (!pos)
        throw DomainMismatch("no generator named '" + std::string(name) + "' in this algebra");
    return Generator{this, *pos};
}

Monomial GradedAlgebra::unit() const
{
    return Monomial(std::vector<std::uint32_t>(size(), 0), 0);
}

Monomial GradedAlgebra::generator_monomial(std::size_t pos) const
{
    std::vector<std::uint32_t> exps(size(), 0);
    exps.at(pos) = 1;
    return Monomial(std::move(exps), gens_[pos].degree);
}

std::optional<Monomial> GradedAlgebra::monomial(std::span<const std::uint32_t> exponents) const
{
    if (exponents.size() != size())
        throw DomainMismatch("exponent vector length does not match the algebra");
    int degree = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (gens_[i].odd() && exponents[i] > 1)
            return std::nullopt;
        degree += static_cast<int>(exponents[i]) * gens_[i].degree;
    }
    return Monomial(std::vector<std::uint32_t>(exponents.begin(), exponents.end()), degree);
}

namespace {

// Stable merge sort by canonical position; counts inversions between odd entries.
long sort_counting_odd_inversions(std::vector<std::size_t>& word, const GradedAlgebra& alg)
{
    if (word.size() < 2)
        return 0;
    auto mid = word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2);
    std::vector<std::size_t> left(word.begin(), mid), right(mid, word.end());
    long count = sort_counting_odd_inversions(left, alg) + sort_counting_odd_inversions(right, alg);

    // odd_left[i] = number of odd entries in left[i..]
    std::vector<long> odd_left(left.size() + 1, 0);
    for (std::size_t i = left.size(); i-- > 0;)
        odd_left[i] = odd_left[i + 1] + (alg.symbol(left[i]).odd() ? 1 : 0);

    std::size_t i = 0, j = 0, k = 0;
    while (i < left.size() && j < right.size()) {
        if (right[j] < left[i]) {
            if (alg.symbol(right[j]).odd())
                count += odd_left[i];
            word[k++] = right[j++];
        } else {
            word[k++] = left[i++];
        }
    }
    while (i < left.size())
        word[k++] = left[i++];
    while (j < right.size())
        word[k++] = right[j++];
    return count;
}

}  // namespace

std::optional<SignedMonomial> canonical_monomial(const GradedAlgebra& algebra,
                                                 std::span<const std::size_t> word)
{
    std::vector<std::size_t> sorted(word.begin(), word.end());
    for (auto p : sorted) {
        if (p >= algebra.size())
            throw DomainMismatch("generator position out of range for this algebra");
    }
    long inversions = sort_counting_odd_inversions(sorted, algebra);
    std::vector<std::uint32_t> exps(algebra.size(), 0);
    for (auto p : sorted)
        ++exps[p];
    auto m = algebra.monomial(exps);
    if (!m)
        return std::nullopt;
    return SignedMonomial{sign_of_parity(inversions), std::move(*m)};
}

std::optional<SignedMonomial> canonical_monomial(const GradedAlgebra& algebra,
                                                 std::span<const Generator> word)
{
    std::vector<std::size_t> positions;
    positions.reserve(word.size());
    for (const auto& g : word) {
        if (g.algebra != &algebra)
            throw DomainMismatch("generator belongs to a different algebra");
        positions.push_back(g.pos);
    }
    return canonical_monomial(algebra, std::span<const std::size_t>(positions));
}

std::optional<SignedMonomial> multiply_monomials(const GradedAlgebra& algebra, const Monomial& a,
                                                 const Monomial& b)
{
    const std::size_t n = algebra.size();
    if (a.exponents().size() != n || b.exponents().size() != n)
        throw DomainMismatch("monomial does not belong to this algebra");
    std::vector<std::uint32_t> exps(n);
    long inversions = 0;
    long odd_in_a_after = 0;
    // Walk positions from the back so odd_in_a_after counts odd factors of a beyond pos.
    for (std::size_t pos = n; pos-- > 0;) {
        exps[pos] = a.exponent(pos) + b.exponent(pos);
        if (algebra.symbol(pos).odd()) {
            if (exps[pos] > 1)
                return std::nullopt;
            if (b.exponent(pos) == 1)
                inversions += odd_in_a_after;
            if (a.exponent(pos) == 1)
                ++odd_in_a_after;
        }
    }
    return SignedMonomial{sign_of_parity(inversions), Monomial(std::move(exps), a.degree() + b.degree())};
}

std::vector<std::size_t> factor_word(const Monomial& m)
{
    std::vector<std::size_t> word;
    word.reserve(m.word_length());
    for (std::size_t pos = 0; pos < m.exponents().size(); ++pos)
        word.insert(word.end(), m.exponent(pos), pos);
    return word;
}

namespace {

void enumerate_degree(const GradedAlgebra& alg, const MonomialIdeal& ideal, std::size_t pos,
                      int remaining, std::vector<std::uint32_t>& exps, int k,
                      std::vector<Monomial>& out)
{
    if (pos == alg.size()) {
        if (remaining == 0) {
            Monomial m(exps, k);
            if (!ideal.contains(m))
                out.push_back(std::move(m));
        }
        return;
    }
    const auto& g = alg.symbol(pos);
    int max_exp = remaining / g.degree;
    if (g.odd())
        max_exp = std::min(max_exp, 1);
    for (int e = max_exp; e >= 0; --e) {
        exps[pos] = static_cast<std::uint32_t>(e);
        enumerate_degree(alg, ideal, pos + 1, remaining - e * g.degree, exps, k, out);
    }
    exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const GradedAlgebra& algebra, const MonomialIdeal& ideal,
                                      int k)
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    std::vector<std::uint32_t> exps(algebra.size(), 0);
    enumerate_degree(algebra, ideal, 0, k, exps, k, out);
    return out;
}

// ---------------------------------------------------------------------------------------------

Polynomial::Polynomial(AlgebraPtr algebra) : alg_(std::move(algebra))
{
    if (!alg_)
        throw ContractViolation("polynomial needs an algebra");
}

Polynomial Polynomial::constant(AlgebraPtr algebra, const Rational& c)
{
    Polynomial p(std::move(algebra));
    p.add_term(p.alg_->unit(), c);
    return p;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::size_t pos)
{
    Polynomial p(std::move(algebra));
    Monomial m = p.alg_->generator_monomial(pos);
    if (!p.alg_->ideal().contains(m))
        p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::string_view name)
{
    auto pos = algebra->generator(name).pos;
    return generator(std::move(algebra), pos);
}

Polynomial Polynomial::term(AlgebraPtr algebra, const Monomial& m, const Rational& c)
{
    Polynomial p(std::move(algebra));
    if (m.exponents().size() != p.alg_->size())
        throw DomainMismatch("monomial does not belong to this algebra");
    if (!p.alg_->ideal().contains(m))
        p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous(int degree) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree() == degree; });
}

std::optional<int> Polynomial::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.begin()->first.degree();
    if (!is_homogeneous(d))
        return std::nullopt;
    return d;
}

Rational Polynomial::augmentation() const { return coefficient(alg_->unit()); }

void Polynomial::require_same(const Polynomial& other) const
{
    if (alg_ != other.alg_)
        throw DomainMismatch("polynomials belong to different algebras");
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

Polynomial mul(const Polynomial& p, const Polynomial& q)
{
    if (p.algebra() != q.algebra())
        throw DomainMismatch("polynomials belong to different algebras");
    const auto& alg = *p.algebra();
    Polynomial out(p.algebra());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            auto prod = multiply_monomials(alg, mp, mq);
            if (!prod || alg.ideal().contains(prod->monomial))
                continue;
            Rational c = cp * cq;
            if (prod->sign < 0)
                c = -c;
            out.add_term(prod->monomial, c);
        }
    }
    return out;
}

Polynomial mul(const Polynomial& p, const Polynomial& q, const MonomialIdeal& ideal)
{
    return reduce_mod_ideal(mul(p, q), ideal);
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial out = Polynomial::constant(p.algebra(), Rational(1));
    for (unsigned i = 0; i < k; ++i)
        out = mul(out, p);
    return out;
}

Polynomial reduce_mod_ideal(const Polynomial& p, const MonomialIdeal& ideal)
{
    Polynomial out(p.algebra());
    for (const auto& [m, c] : p.terms()) {
        if (!ideal.contains(m))
            out.add_term(m, c);
    }
    return out;
}

Polynomial twisted_leibniz(const AlgebraPtr& target, std::span<const Polynomial> left,
                           std::span<const Polynomial> values, std::span<const int> degrees, int n)
{
    const std::size_t s = left.size();
    if (values.size() != s || degrees.size() != s)
        throw ContractViolation("twisted_leibniz: word data of unequal length");
    Polynomial one = Polynomial::constant(target, Rational(1));
    // prefix[i] = L_1 ... L_i, suffix[i] = L_{i+1} ... L_s (0-based positions)
    std::vector<Polynomial> prefix(s + 1, one), suffix(s + 1, one);
    for (std::size_t i = 0; i < s; ++i)
        prefix[i + 1] = mul(prefix[i], left[i]);
    for (std::size_t i = s; i-- > 0;)
        suffix[i] = mul(left[i], suffix[i + 1]);

    Polynomial out(target);
    long passed = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (!values[i].is_zero()) {
            Polynomial t = mul(mul(prefix[i], values[i]), suffix[i + 1]);
            if (sign_of_parity(static_cast<long>(n) * passed) < 0)
                t *= Rational(-1);
            out += t;
        }
        passed += degrees[i];
    }
    return out;
}

Polynomial transport(const Polynomial& p, const AlgebraPtr& target)
{
    const auto& src = *p.algebra();
    std::vector<std::size_t> map(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto pos = target->find(src.symbol(i).name);
        if (!pos || target->symbol(*pos).degree != src.symbol(i).degree)
            throw DomainMismatch("generator '" + src.symbol(i).name +
                                 "' has no counterpart in the target algebra");
        map[i] = *pos;
    }
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::size_t> word;
        for (auto pos : factor_word(m))
            word.push_back(map[pos]);
        auto sm = canonical_monomial(*target, std::span<const std::size_t>(word));
        if (!sm || target->ideal().contains(sm->monomial))
            continue;
        out.add_term(sm->monomial, sm->sign > 0 ? c : Rational(-c));
    }
    return out;
}

std::string to_string(const GradedAlgebra& algebra, const Monomial& m)
{
    if (m.is_unit())
        return "1";
    std::string out;
    for (std::size_t pos = 0; pos < m.exponents().size(); ++pos) {
        auto e = m.exponent(pos);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += algebra.symbol(pos).name;
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string term;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (m.is_unit())
            term = aq::to_string(mag);
        else if (mag == 1)
            term = to_string(*p.algebra(), m);
        else
            term = aq::to_string(mag) + "*" + to_string(*p.algebra(), m);
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace aq::gca
