#pragma once

// André–Quillen cohomology of the derivation complex: ranks and representative cocycles per
// degree, the bracket on classes, and Whitehead-length bounds for the mapping space.

#include "aq/der.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aq::cohomology {

using der::DerContext;
using der::Derivation;

/// Inclusive range of homotopy degrees k (cohomological degree -k).
struct KRange {
    int lo = 2;
    int hi = 1;

    bool empty() const noexcept { return hi < lo; }
};

struct DegreeRecord {
    int k = 0;
    std::size_t rank = 0;
    std::vector<Derivation> representatives;
    std::size_t chain_dimension = 0;  // dim Der^{-k}
    std::size_t rank_out = 0;         // rank of ∂: Der^{-k} -> Der^{-k+1}
    std::size_t rank_in = 0;          // rank of ∂: Der^{-k-1} -> Der^{-k}

    /// Homotopy groups correspond to k >= 2 only.
    bool homotopy_interpretable() const noexcept { return k >= 2; }
};

struct CohomologyReport {
    bool based = false;
    std::vector<DegreeRecord> degrees;
};

/// For every k in range: rank H^{-k} and representatives reduced modulo boundaries.
/// Throws ContractViolation if ∂∘∂ fails to vanish on the degrees involved.
CohomologyReport aq_cohomology(const DerContext& ctx, KRange range);

/// 2..(top degree of B + max generator degree) for finite-dimensional B, otherwise
/// 2..(max generator degree), beyond which Der^{-k} vanishes.
KRange default_range(const DerContext& ctx);

struct ClassValue {
    Derivation representative;
    bool is_zero = false;
};

/// [a, b] as a cohomology class; throws ContractViolation for non-cocycle inputs.
ClassValue bracket_on_cohomology(const DerContext& ctx, const Derivation& a, const Derivation& b);

/// Longest nonzero iterated bracket [c1,[c2,...[c_{L-1},c_L]...]] of representatives from
/// `range`, capped at max_len. 0 when there are no classes at all.
int wl_lower_bound(const DerContext& ctx, int max_len, KRange range);

/// d1-depth + 1.
int wl_space(const cdga::Presentation& a);

class Bound {
public:
    static Bound finite(long v) { return Bound(Kind::Finite, v, {}); }
    static Bound infinite() { return Bound(Kind::Infinite, 0, {}); }
    static Bound inapplicable(std::string reason) { return Bound(Kind::Inapplicable, 0, std::move(reason)); }

    bool applicable() const noexcept { return kind_ != Kind::Inapplicable; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    long value() const noexcept { return value_; }
    const std::string& reason() const noexcept { return reason_; }
    std::string str() const;

private:
    enum class Kind { Finite, Infinite, Inapplicable };
    Bound(Kind k, long v, std::string r) : kind_(k), value_(v), reason_(std::move(r)) {}

    Kind kind_;
    long value_;
    std::string reason_;
};

struct WlReport {
    int lower_bound = 0;
    int max_len = 0;
    Bound nil_bound = Bound::inapplicable("not computed");
    Bound refined_bound = Bound::inapplicable("not computed");
    Bound coformal_bound = Bound::inapplicable("not computed");
    std::optional<int> wl_target;  // WL(Y) of the source model
    std::string wl_target_note;

    /// lower_bound <= every applicable finite upper bound.
    bool consistent() const;
};

/// Upper bounds only (lower_bound left at 0).
WlReport wl_upper_bounds(const DerContext& ctx);
WlReport wl_report(const DerContext& ctx, int max_len, KRange range);

}  // namespace aq::cohomology
