#include "aq/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace aq::report {

namespace {

nlohmann::json representative_json(const DerContext& ctx, const der::Derivation& theta)
{
    const auto& src = *ctx.source().algebra();
    auto out = nlohmann::json::array();
    for (auto pos : src.declaration_order()) {
        if (theta.values[pos].is_zero())
            continue;
        out.push_back({{"gen", src.symbol(pos).name}, {"value", gca::to_string(theta.values[pos])}});
    }
    return out;
}

std::string label(int k, std::size_t i) { return "c" + std::to_string(k) + "_" + std::to_string(i + 1); }

}  // namespace

std::string render_json(const DerContext& ctx, const CohomologyReport& report)
{
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& rec : report.degrees) {
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& r : rec.representatives)
            reps.push_back(representative_json(ctx, r));
        degrees.push_back({{"k", rec.k}, {"rank", rec.rank}, {"representatives", std::move(reps)}});
    }
    nlohmann::json doc = {{"kind", "cohomology"}, {"based", report.based}, {"degrees", std::move(degrees)}};
    return doc.dump(2) + "\n";
}

std::string render_text(const DerContext& ctx, const CohomologyReport& report)
{
    std::ostringstream os;
    os << "Der(" << ctx.source().name() << ", " << ctx.target().name() << "; " << ctx.morphism().name()
       << ")" << (report.based ? " based" : " free") << "\n";
    os << std::setw(4) << "k" << std::setw(6) << "rank" << std::setw(9) << "dim Der" << "  representatives\n";
    for (const auto& rec : report.degrees) {
        os << std::setw(4) << rec.k << std::setw(6) << rec.rank << std::setw(9) << rec.chain_dimension;
        if (rec.representatives.empty())
            os << "  -";
        for (std::size_t i = 0; i < rec.representatives.size(); ++i) {
            if (i > 0)
                os << "\n" << std::string(19, ' ');
            os << "  " << label(rec.k, i) << " = " << der::to_string(ctx, rec.representatives[i]);
        }
        if (!rec.homotopy_interpretable())
            os << "  (not homotopy-interpretable)";
        os << "\n";
    }
    return os.str();
}

std::vector<BracketEntry> bracket_table(const DerContext& ctx, const CohomologyReport& report)
{
    struct Item {
        int k;
        std::size_t i;
        const der::Derivation* rep;
    };
    std::vector<Item> items;
    for (const auto& rec : report.degrees) {
        for (std::size_t i = 0; i < rec.representatives.size(); ++i)
            items.push_back({rec.k, i, &rec.representatives[i]});
    }
    std::vector<BracketEntry> out;
    for (std::size_t a = 0; a < items.size(); ++a) {
        for (std::size_t b = a; b < items.size(); ++b) {
            out.push_back(BracketEntry{items[a].k, items[b].k, items[a].i, items[b].i,
                                       cohomology::bracket_on_cohomology(ctx, *items[a].rep, *items[b].rep)});
        }
    }
    return out;
}

std::string render_brackets(const DerContext& ctx, const CohomologyReport& report,
                            const std::vector<BracketEntry>& entries)
{
    std::ostringstream os;
    for (const auto& rec : report.degrees) {
        for (std::size_t i = 0; i < rec.representatives.size(); ++i)
            os << label(rec.k, i) << " = " << der::to_string(ctx, rec.representatives[i]) << "\n";
    }
    if (entries.empty()) {
        os << "no classes in range\n";
        return os.str();
    }
    for (const auto& e : entries) {
        os << "[" << label(e.k_a, e.index_a) << ", " << label(e.k_b, e.index_b) << "] = ";
        if (e.value.is_zero)
            os << "0 (zero class)";
        else
            os << der::to_string(ctx, e.value.representative) << " (nonzero class, k="
               << -e.value.representative.degree << ")";
        os << "\n";
    }
    return os.str();
}

std::string render_wl(const cohomology::WlReport& r)
{
    std::ostringstream os;
    os << "lower_bound: " << r.lower_bound;
    if (r.lower_bound == 0)
        os << " (no classes)";
    os << " (max_len " << r.max_len << ")\n";
    os << "nil_bound: " << r.nil_bound.str() << "\n";
    os << "refined_bound: " << r.refined_bound.str() << "\n";
    os << "coformal_bound: " << r.coformal_bound.str() << "\n";
    os << "wl_target: " << (r.wl_target ? std::to_string(*r.wl_target) : "unknown (" + r.wl_target_note + ")")
       << "\n";
    os << "consistent: " << (r.consistent() ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace aq::report
