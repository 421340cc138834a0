#pragma once

// Text and JSON renderings of cohomology, bracket and Whitehead-length reports.

#include "aq/cohomology.hpp"

#include <string>
#include <vector>

namespace aq::report {

using cohomology::CohomologyReport;
using der::DerContext;

/// Keys sorted, no whitespace variation: identical reports give identical bytes.
std::string render_json(const DerContext& ctx, const CohomologyReport& report);
std::string render_text(const DerContext& ctx, const CohomologyReport& report);

struct BracketEntry {
    int k_a = 0, k_b = 0;
    std::size_t index_a = 0, index_b = 0;  // position among the representatives of that degree
    cohomology::ClassValue value;
};

/// Brackets of every unordered pair of representatives in the report.
std::vector<BracketEntry> bracket_table(const DerContext& ctx, const CohomologyReport& report);
std::string render_brackets(const DerContext& ctx, const CohomologyReport& report,
                            const std::vector<BracketEntry>& entries);

std::string render_wl(const cohomology::WlReport& report);

}  // namespace aq::report
