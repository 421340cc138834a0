#pragma once

// The complex of f-derivations Der*(ΛV, B; f), its differential, and the bracket
// that models Whitehead products on its cohomology.

#include "aq/cdga.hpp"
#include "aq/linalg.hpp"

#include <string>
#include <vector>

namespace aq::der {

using cdga::Morphism;
using cdga::Presentation;
using gca::Polynomial;

/// Source ΛV (free), target B, the morphism f: ΛV -> B, and whether values are restricted to B⁺.
class DerContext {
public:
    /// Throws UnsupportedPresentation if the source has relations, ValidationError if either
    /// presentation is malformed or f is not degree-preserving. Failures of the chain-map
    /// identity are recorded in chain_defects() rather than thrown.
    DerContext(Morphism f, bool based);

    const Presentation& source() const noexcept { return f_.source(); }
    const Presentation& target() const noexcept { return f_.target(); }
    const Morphism& morphism() const noexcept { return f_; }
    bool based() const noexcept { return based_; }
    const std::vector<std::string>& chain_defects() const noexcept { return chain_defects_; }
    bool is_chain_map() const noexcept { return chain_defects_.empty(); }

private:
    Morphism f_;
    bool based_;
    std::vector<std::string> chain_defects_;
};

/// A degree-n derivation, stored by its values on source generators (canonical positions).
struct Derivation {
    int degree = 0;
    std::vector<Polynomial> values;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation zero_derivation(const DerContext& ctx, int degree);
Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& a, const Derivation& b);
Derivation operator*(const Rational& c, const Derivation& a);
bool is_zero(const Derivation& a);

/// Throws ContractViolation unless every value is homogeneous of degree |v| + n, lives in the
/// target algebra and, in based contexts, has zero augmentation.
void check_derivation(const DerContext& ctx, const Derivation& theta);

/// θ extended to ΛV by θ(xy) = θ(x)f(y) + (-1)^{n|x|} f(x)θ(y).
Polynomial eval_derivation(const DerContext& ctx, const Derivation& theta, const Polynomial& p);

/// ∂θ = dθ - (-1)^n θd, a derivation of degree n + 1.
Derivation der_boundary(const DerContext& ctx, const Derivation& theta);

struct BasisElement {
    std::size_t generator;  // canonical position in the source
    gca::Monomial value;    // basis monomial of B (B⁺ when based)
};

/// Basis of Der^n: one derivation per (generator, monomial) pair, generators in declaration
/// order, monomials in basis_of_degree order.
class DerBasis {
public:
    DerBasis(const DerContext& ctx, int degree);

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<BasisElement>& elements() const noexcept { return elements_; }

    Derivation element(std::size_t i) const;
    /// Throws ContractViolation when θ has a value outside the span of the basis.
    linalg::Vector coordinates(const Derivation& theta) const;
    Derivation derivation(const linalg::Vector& coords) const;

private:
    gca::AlgebraPtr target_;
    std::size_t source_size_;
    int degree_;
    std::vector<BasisElement> elements_;
};

inline DerBasis der_basis(const DerContext& ctx, int n) { return DerBasis(ctx, n); }

/// Matrix of ∂: Der^n -> Der^{n+1} in DerBasis coordinates.
linalg::RationalMatrix boundary_matrix(const DerContext& ctx, int n);

/// The bracket [φ, ψ] of degree |φ| + |ψ| + 1, expanding each d(v) along canonical words.
Derivation bracket(const DerContext& ctx, const Derivation& phi, const Derivation& psi);

namespace detail {

/// (-1)^{|φ|+|ψ|-1} Σ_{i≠j} (-1)^{ε_ij} f(v_1..)φ(v_i)f(..)ψ(v_j)f(..v_s) for one word, factors in
/// positional order.
Polynomial bracket_on_word(const DerContext& ctx, const Derivation& phi, const Derivation& psi,
                           std::span<const std::size_t> word);

}  // namespace detail

std::string to_string(const DerContext& ctx, const Derivation& theta);

}  // namespace aq::der
