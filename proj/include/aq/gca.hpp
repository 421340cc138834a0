#pragma once

// Free graded-commutative algebras over Q, optionally truncated by a monomial ideal.
//
// Generators are stored in canonical order, sorted by (degree, name). A Monomial is an
// exponent vector indexed by canonical position, so the factor order of a monomial is
// always the canonical one. Odd generators square to zero and never appear with an
// exponent above one.

#include "aq/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aq::gca {

struct GeneratorSymbol {
    std::string name;
    int degree = 1;

    bool odd() const noexcept { return degree % 2 != 0; }
    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint32_t> exponents, int degree)
        : exps_(std::move(exponents)), degree_(degree) {}

    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint32_t exponent(std::size_t pos) const { return exps_[pos]; }
    int degree() const noexcept { return degree_; }
    /// Total number of generator factors.
    unsigned word_length() const noexcept;
    bool is_unit() const noexcept { return word_length() == 0; }
    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Graded-lexicographic: lower degree first, then larger exponents of earlier generators first.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return a.exps_ > b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    int degree_ = 0;
};

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Drops non-minimal generators and duplicates; keeps the rest in graded-lex order.
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    bool empty() const noexcept { return gens_.empty(); }
    bool contains(const Monomial& m) const;

private:
    std::vector<Monomial> gens_;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// A generator handle tied to the algebra it was obtained from.
struct Generator {
    const GradedAlgebra* algebra = nullptr;
    std::size_t pos = 0;
};

/// A relation written as (generator name, exponent) factors.
using RelationSpec = std::vector<std::pair<std::string, unsigned>>;

class GradedAlgebra {
public:
    /// `declared` is kept as the declaration order; throws ParameterError on duplicate names,
    /// degrees below one, unknown relation symbols or relations that are already zero.
    static AlgebraPtr make(std::vector<GeneratorSymbol> declared,
                           const std::vector<RelationSpec>& relations = {});

    std::size_t size() const noexcept { return gens_.size(); }
    const GeneratorSymbol& symbol(std::size_t pos) const { return gens_.at(pos); }
    const std::vector<GeneratorSymbol>& symbols() const noexcept { return gens_; }
    /// Canonical positions listed in declaration order.
    const std::vector<std::size_t>& declaration_order() const noexcept { return decl_; }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws DomainMismatch for names not in this algebra.
    Generator generator(std::string_view name) const;

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    bool is_free() const noexcept { return ideal_.empty(); }

    Monomial unit() const;
    Monomial generator_monomial(std::size_t pos) const;
    /// nullopt when an odd generator gets exponent > 1.
    std::optional<Monomial> monomial(std::span<const std::uint32_t> exponents) const;

private:
    GradedAlgebra() = default;

    std::vector<GeneratorSymbol> gens_;
    std::vector<std::size_t> decl_;
    std::unordered_map<std::string, std::size_t> index_;
    MonomialIdeal ideal_;
};

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

/// Sorts a word of generators into canonical order; the sign counts odd-odd transpositions.
/// nullopt when an odd generator repeats.
std::optional<SignedMonomial> canonical_monomial(const GradedAlgebra& algebra,
                                                 std::span<const Generator> word);
std::optional<SignedMonomial> canonical_monomial(const GradedAlgebra& algebra,
                                                 std::span<const std::size_t> word);

/// Product a*b of canonical monomials with its Koszul sign; not reduced by any ideal.
std::optional<SignedMonomial> multiply_monomials(const GradedAlgebra& algebra, const Monomial& a,
                                                 const Monomial& b);

/// Canonical-order word of positions; canonical_monomial(factor_word(m)) == (+1, m).
std::vector<std::size_t> factor_word(const Monomial& m);

/// Reduced monomials of total degree k in graded-lex order.
std::vector<Monomial> basis_of_degree(const GradedAlgebra& algebra, const MonomialIdeal& ideal,
                                      int k);
inline std::vector<Monomial> basis_of_degree(const GradedAlgebra& algebra, int k)
{
    return basis_of_degree(algebra, algebra.ideal(), k);
}

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(AlgebraPtr algebra);

    static Polynomial constant(AlgebraPtr algebra, const Rational& c);
    static Polynomial generator(AlgebraPtr algebra, std::size_t pos);
    static Polynomial generator(AlgebraPtr algebra, std::string_view name);
    /// c*m reduced by the algebra's ideal.
    static Polynomial term(AlgebraPtr algebra, const Monomial& m, const Rational& c);

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    /// Zero counts as homogeneous of every degree.
    bool is_homogeneous(int degree) const;
    /// Degree shared by every term; nullopt for zero or inhomogeneous polynomials.
    std::optional<int> degree() const;
    /// Coefficient of the unit monomial.
    Rational augmentation() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    /// Adds c*m; m must already be reduced.
    void add_term(const Monomial& m, const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    /// Same algebra and same terms.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void require_same(const Polynomial& other) const;

    AlgebraPtr alg_;
    TermMap terms_;
};

/// Product reduced modulo the algebra's own ideal.
Polynomial mul(const Polynomial& p, const Polynomial& q);
/// Product additionally reduced modulo `ideal`.
Polynomial mul(const Polynomial& p, const Polynomial& q, const MonomialIdeal& ideal);
Polynomial pow(const Polynomial& p, unsigned k);
/// Drops every term divisible by a generator of `ideal`.
Polynomial reduce_mod_ideal(const Polynomial& p, const MonomialIdeal& ideal);

/// Sum over positions i of (-1)^{n(|v_1|+...+|v_{i-1}|)} L_1 ... L_{i-1} V_i L_{i+1} ... L_s.
/// With L = generators, V = d and n = 1 this is the Leibniz extension of a differential;
/// with L = f(v) and V = θ(v) it is the twisted Leibniz law for f-derivations of degree n.
Polynomial twisted_leibniz(const AlgebraPtr& target, std::span<const Polynomial> left,
                           std::span<const Polynomial> values, std::span<const int> degrees,
                           int n);

/// Copies a polynomial into another algebra that has every generator it uses (matched by name).
Polynomial transport(const Polynomial& p, const AlgebraPtr& target);

std::string to_string(const GradedAlgebra& algebra, const Monomial& m);
std::string to_string(const Polynomial& p);

}  // namespace aq::gca
