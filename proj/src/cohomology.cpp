#include "aq/cohomology.hpp"

#include "aq/error.hpp"

#include <algorithm>
#include <map>

namespace aq::cohomology {

namespace {

// Per-degree bases, boundary matrices and boundary spaces, built on demand.
class ComplexCache {
public:
    explicit ComplexCache(const DerContext& ctx) : ctx_(ctx) {}

    const der::DerBasis& basis(int n)
    {
        auto it = bases_.find(n);
        if (it == bases_.end())
            it = bases_.emplace(n, der::DerBasis(ctx_, n)).first;
        return it->second;
    }

    /// ∂: Der^n -> Der^{n+1}
    const linalg::RationalMatrix& boundary(int n)
    {
        auto it = boundaries_.find(n);
        if (it == boundaries_.end())
            it = boundaries_.emplace(n, der::boundary_matrix(ctx_, n)).first;
        return it->second;
    }

    /// Image of ∂: Der^{n-1} -> Der^n.
    const linalg::SubspaceBasis& boundaries_in(int n)
    {
        auto it = images_.find(n);
        if (it == images_.end()) {
            const auto& m = boundary(n - 1);
            linalg::SubspaceBasis space(m.rows());
            for (std::size_t c = 0; c < m.cols(); ++c)
                space.insert(m.column(c));
            it = images_.emplace(n, std::move(space)).first;
        }
        return it->second;
    }

    bool is_boundary(const Derivation& theta)
    {
        return boundaries_in(theta.degree).contains(basis(theta.degree).coordinates(theta));
    }

private:
    const DerContext& ctx_;
    std::map<int, der::DerBasis> bases_;
    std::map<int, linalg::RationalMatrix> boundaries_;
    std::map<int, linalg::SubspaceBasis> images_;
};

DegreeRecord degree_record(ComplexCache& cache, int k)
{
    const int n = -k;
    const auto& out = cache.boundary(n);
    const auto& in = cache.boundary(n - 1);
    if (out.cols() > 0 && in.cols() > 0 && !(out * in).is_zero())
        throw ContractViolation("boundary of a boundary is nonzero between Der^" + std::to_string(n - 1) +
                                " and Der^" + std::to_string(n + 1) + " (morphism is not a chain map)");

    DegreeRecord rec;
    rec.k = k;
    rec.chain_dimension = out.cols();
    auto cycles = linalg::kernel_basis(out);
    rec.rank_out = out.cols() - cycles.size();
    rec.rank_in = linalg::rank(in);
    rec.rank = cycles.size() - rec.rank_in;

    const auto& image = cache.boundaries_in(n);
    linalg::SubspaceBasis seen = image;
    for (const auto& z : cycles) {
        auto r = image.reduce(z);
        if (seen.insert(r))
            rec.representatives.push_back(cache.basis(n).derivation(r));
    }
    return rec;
}

}  // namespace

CohomologyReport aq_cohomology(const DerContext& ctx, KRange range)
{
    CohomologyReport report;
    report.based = ctx.based();
    ComplexCache cache(ctx);
    for (int k = range.lo; k <= range.hi; ++k)
        report.degrees.push_back(degree_record(cache, k));
    return report;
}

KRange default_range(const DerContext& ctx)
{
    const int top_gen = ctx.source().max_generator_degree();
    auto nil_b = cdga::nil(ctx.target());
    if (nil_b.is_infinite())
        return KRange{2, top_gen};
    // A finite-dimensional B has no basis beyond word length nil B.
    const auto& alg = *ctx.target().algebra();
    int max_gen = 0;
    for (const auto& g : alg.symbols())
        max_gen = std::max(max_gen, g.degree);
    int top = 0;
    for (int k = 0; k <= nil_b.value() * max_gen; ++k) {
        if (!gca::basis_of_degree(alg, k).empty())
            top = k;
    }
    return KRange{2, top + top_gen};
}

ClassValue bracket_on_cohomology(const DerContext& ctx, const Derivation& a, const Derivation& b)
{
    for (const auto* x : {&a, &b}) {
        if (!der::is_zero(der::der_boundary(ctx, *x)))
            throw ContractViolation("bracket_on_cohomology: input of degree " + std::to_string(x->degree) +
                                    " is not a cocycle");
    }
    Derivation c = der::bracket(ctx, a, b);
    der::DerBasis basis(ctx, c.degree);
    auto coords = basis.coordinates(c);
    auto incoming = der::boundary_matrix(ctx, c.degree - 1);
    bool zero = linalg::in_image(incoming, coords).has_value();

    linalg::SubspaceBasis image(incoming.rows());
    for (std::size_t col = 0; col < incoming.cols(); ++col)
        image.insert(incoming.column(col));
    return ClassValue{basis.derivation(image.reduce(coords)), zero};
}

int wl_lower_bound(const DerContext& ctx, int max_len, KRange range)
{
    if (max_len < 1)
        throw ParameterError("max_len must be >= 1");
    auto report = aq_cohomology(ctx, range);
    std::vector<Derivation> reps;
    for (auto& rec : report.degrees)
        reps.insert(reps.end(), rec.representatives.begin(), rec.representatives.end());
    if (reps.empty())
        return 0;

    ComplexCache cache(ctx);
    std::vector<Derivation> level = reps;
    int length = 1;
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Derivation> next;
        for (const auto& c : reps) {
            for (const auto& t : level) {
                auto b = der::bracket(ctx, c, t);
                if (!der::is_zero(b) && !cache.is_boundary(b))
                    next.push_back(std::move(b));
            }
        }
        if (next.empty())
            break;
        length = len;
        level = std::move(next);
    }
    return length;
}

int wl_space(const cdga::Presentation& a) { return cdga::d1_depth(a) + 1; }

std::string Bound::str() const
{
    switch (kind_) {
    case Kind::Finite:
        return std::to_string(value_);
    case Kind::Infinite:
        return "infinity";
    case Kind::Inapplicable:
        break;
    }
    return "inapplicable (" + reason_ + ")";
}

bool WlReport::consistent() const
{
    for (const auto* b : {&nil_bound, &refined_bound, &coformal_bound}) {
        if (b->is_finite() && lower_bound > b->value())
            return false;
    }
    return true;
}

WlReport wl_upper_bounds(const DerContext& ctx)
{
    WlReport r;
    const auto& y = ctx.source();
    try {
        r.wl_target = wl_space(y);
    } catch (const NotNilpotent& e) {
        r.wl_target_note = e.what();
    }

    auto nil_b = cdga::nil(ctx.target());
    if (!ctx.based()) {
        r.nil_bound = Bound::inapplicable("free mapping space; the nil B bound is for based maps");
        r.refined_bound = Bound::inapplicable("free mapping space; the refined bound is for based maps");
    } else {
        r.nil_bound = nil_b.is_infinite() ? Bound::infinite() : Bound::finite(nil_b.value());
        auto w = cdga::omega(y);
        if (!r.wl_target)
            r.refined_bound = Bound::inapplicable("WL(Y) unknown: " + r.wl_target_note);
        else if (*r.wl_target != 1)
            r.refined_bound = Bound::inapplicable("WL(Y) = " + std::to_string(*r.wl_target) + " != 1 (d1 != 0)");
        else if (nil_b.is_infinite())
            r.refined_bound = Bound::inapplicable("nil B is infinite");
        else if (nil_b.value() < 2)
            r.refined_bound = Bound::inapplicable("nil B = " + nil_b.str() + " < 2");
        else if (w.is_infinite())
            r.refined_bound = Bound::inapplicable("omega is infinite (d = 0)");
        else if (w.value() < 2)
            r.refined_bound = Bound::inapplicable("omega < 2 (d is not decomposable)");
        else
            r.refined_bound = Bound::finite((nil_b.value() - 1) / (w.value() - 1) + 1);
    }

    if (!cdga::is_purely_quadratic(y))
        r.coformal_bound = Bound::inapplicable("source differential is not purely quadratic (d != d1)");
    else if (!r.wl_target)
        r.coformal_bound = Bound::inapplicable("WL(Y) unknown: " + r.wl_target_note);
    else
        r.coformal_bound = Bound::finite(*r.wl_target);
    return r;
}

WlReport wl_report(const DerContext& ctx, int max_len, KRange range)
{
    WlReport r = wl_upper_bounds(ctx);
    r.max_len = max_len;
    r.lower_bound = wl_lower_bound(ctx, max_len, range);
    return r;
}

}  // namespace aq::cohomology
