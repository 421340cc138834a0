#pragma once

// CDGA presentations, morphisms between them, and the structural invariants
// (quadratic part, ω, nil, d1-depth) used by the Whitehead-length bounds.

#include "aq/gca.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aq::cdga {

using gca::AlgebraPtr;
using gca::Polynomial;

/// Generators with degrees, monomial relations, and the differential on generators.
class Presentation {
public:
    /// `differential[pos]` is d of the generator at canonical position pos.
    Presentation(std::string name, AlgebraPtr algebra, std::vector<Polynomial> differential);
    /// Zero differential.
    Presentation(std::string name, AlgebraPtr algebra);

    const std::string& name() const noexcept { return name_; }
    const AlgebraPtr& algebra() const noexcept { return alg_; }
    std::size_t size() const noexcept { return alg_->size(); }
    const Polynomial& d(std::size_t pos) const { return d_.at(pos); }
    const std::vector<Polynomial>& differential() const noexcept { return d_; }

    bool is_sullivan_free() const noexcept { return alg_->is_free(); }
    /// Free, and every term of every d(v) has word length at least two.
    bool is_minimal() const;
    bool has_zero_differential() const;
    int max_generator_degree() const;

    Presentation renamed(std::string name) const;

private:
    std::string name_;
    AlgebraPtr alg_;
    std::vector<Polynomial> d_;
};

/// d applied to the product of a word of generators, reduced in the algebra.
Polynomial differential_of_word(const Presentation& a, std::span<const std::size_t> word);
Polynomial extend_differential(const Presentation& a, const Polynomial& p);

/// Every violation of: |d v| = |v| + 1, d²v = 0, d(relations) ⊂ ideal.
std::vector<std::string> validate(const Presentation& a);

class Morphism {
public:
    /// `images[pos]` lives in the target algebra; throws DomainMismatch otherwise.
    Morphism(std::string name, Presentation source, Presentation target, std::vector<Polynomial> images);

    const std::string& name() const noexcept { return name_; }
    const Presentation& source() const noexcept { return source_; }
    const Presentation& target() const noexcept { return target_; }
    const Polynomial& image(std::size_t pos) const { return images_.at(pos); }
    const std::vector<Polynomial>& images() const noexcept { return images_; }

private:
    std::string name_;
    Presentation source_;
    Presentation target_;
    std::vector<Polynomial> images_;
};

/// Product of the images of a word, in word order.
Polynomial apply_word(const Morphism& f, std::span<const std::size_t> word);
Polynomial apply_morphism(const Morphism& f, const Polynomial& p);

/// Degree violations and relation violations: these make a morphism unusable.
std::vector<std::string> structural_violations(const Morphism& f);
/// Generators v with f(d v) != d f(v).
std::vector<std::string> chain_map_violations(const Morphism& f);
/// structural_violations followed by chain_map_violations.
std::vector<std::string> validate(const Morphism& f);

/// Word-length-2 component of d on each generator. Throws UnsupportedPresentation on relations.
std::vector<Polynomial> quadratic_part(const Presentation& a);
/// d == d1 (every term of the differential has word length exactly two, or d = 0).
bool is_purely_quadratic(const Presentation& a);

/// A non-negative integer or infinity.
class ExtInt {
public:
    static ExtInt infinity() { return ExtInt(); }
    ExtInt(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    bool is_infinite() const noexcept { return !value_; }
    long value() const { return value_.value(); }
    std::string str() const { return value_ ? std::to_string(*value_) : "infinity"; }

    friend bool operator==(const ExtInt&, const ExtInt&) = default;

private:
    ExtInt() = default;
    std::optional<long> value_;
};

/// min word length over all terms of d(V); infinity when d = 0.
ExtInt omega(const Presentation& a);
/// Product length of the underlying graded algebra (the differential is ignored).
ExtInt nil(const Presentation& a);
/// Length of the d1-filtration V_0 ⊂ V_1 ⊂ ...; throws NotNilpotent if it stalls.
int d1_depth(const Presentation& a);

struct StructuralInvariants {
    ExtInt omega = ExtInt::infinity();
    ExtInt nil = ExtInt::infinity();
    int d1_depth = 0;
    int wl_space = 1;
};

StructuralInvariants structural_invariants(const Presentation& a);

}  // namespace aq::cdga
