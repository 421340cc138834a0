// aq: command-line front end for derivation-complex computations on .aq files.

#include "aq/cohomology.hpp"
#include "aq/dsl.hpp"
#include "aq/error.hpp"
#include "aq/models.hpp"
#include "aq/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw aq::Error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int parse_int(std::string_view s, const std::string& what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError("bad " + what + " '" + std::string(s) + "'");
    return v;
}

aq::cohomology::KRange parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like a..b, got '" + text + "'");
    return {parse_int(std::string_view(text).substr(0, dots), "range bound"),
            parse_int(std::string_view(text).substr(dots + 2), "range bound")};
}

aq::der::DerContext load_context(const std::string& file, const std::string& map, bool based)
{
    auto src = aq::dsl::parse(read_input(file));
    const auto* f = src.find_morphism(map);
    if (!f)
        throw aq::Error("unknown morphism '" + map + "'");
    aq::der::DerContext ctx(*f, based);
    for (const auto& d : ctx.chain_defects())
        std::cerr << "warning: " << d << "\n";
    return ctx;
}

aq::cohomology::KRange range_or_default(const aq::der::DerContext& ctx, const std::string& text)
{
    return text.empty() ? aq::cohomology::default_range(ctx) : parse_range(text);
}

int cmd_check(const std::string& file)
{
    auto src = aq::dsl::parse(read_input(file));
    bool ok = true;
    for (const auto& a : src.algebras) {
        auto v = aq::cdga::validate(a.presentation);
        std::cout << "algebra " << a.presentation.name() << ": " << (v.empty() ? "ok" : "invalid") << "\n";
        for (const auto& s : v)
            std::cout << "  " << s << "\n";
        ok = ok && v.empty();
    }
    for (const auto& m : src.morphisms) {
        auto v = aq::cdga::validate(m.morphism);
        std::cout << "morphism " << m.morphism.name() << ": " << (v.empty() ? "ok" : "invalid") << "\n";
        for (const auto& s : v)
            std::cout << "  " << s << "\n";
        ok = ok && v.empty();
    }
    return ok ? kOk : kFailure;
}

int cmd_invariants(const std::string& file, const std::string& name)
{
    auto src = aq::dsl::parse(read_input(file));
    const auto* a = src.find_algebra(name);
    if (!a)
        throw aq::Error("unknown algebra '" + name + "'");
    std::cout << "omega: " << aq::cdga::omega(*a).str() << "\n";
    std::cout << "nil: " << aq::cdga::nil(*a).str() << "\n";
    try {
        int depth = aq::cdga::d1_depth(*a);
        std::cout << "d1_depth: " << depth << "\n";
        std::cout << "WL: " << depth + 1 << "\n";
    } catch (const aq::Error& e) {
        std::cout << "d1_depth: n/a (" << e.what() << ")\n";
        std::cout << "WL: n/a\n";
    }
    return kOk;
}

int cmd_cohomology(const std::string& file, const std::string& map, const std::string& range, bool based,
                   bool json)
{
    auto ctx = load_context(file, map, based);
    auto report = aq::cohomology::aq_cohomology(ctx, range_or_default(ctx, range));
    std::cout << (json ? aq::report::render_json(ctx, report) : aq::report::render_text(ctx, report));
    return kOk;
}

int cmd_bracket(const std::string& file, const std::string& map, const std::string& degrees, bool based)
{
    auto ctx = load_context(file, map, based);
    auto report = aq::cohomology::aq_cohomology(ctx, range_or_default(ctx, degrees));
    auto table = aq::report::bracket_table(ctx, report);
    std::cout << aq::report::render_brackets(ctx, report, table);
    return kOk;
}

int cmd_wl(const std::string& file, const std::string& map, int max_len, const std::string& range, bool based)
{
    if (max_len < 1)
        throw UsageError("--max-len must be >= 1");
    auto ctx = load_context(file, map, based);
    auto r = aq::cohomology::wl_report(ctx, max_len, range_or_default(ctx, range));
    std::cout << aq::report::render_wl(r);
    return kOk;
}

int cmd_example(const std::string& generator, int n, int m, const std::vector<std::string>& q)
{
    if (generator != "cp_map")
        throw UsageError("unknown example generator '" + generator + "' (available: cp_map)");
    if (q.size() != 3)
        throw UsageError("--q takes exactly three rationals");
    std::vector<aq::Rational> qs;
    for (const auto& s : q) {
        auto v = aq::parse_rational(s);
        if (!v)
            throw UsageError("bad rational '" + s + "'");
        qs.push_back(*v);
    }
    auto f = aq::cdga::models::cp_map(n, m, qs[0], qs[1], qs[2]);
    aq::dsl::SourceFile file;
    file.algebras.push_back({f.source(), {}});
    file.algebras.push_back({f.target(), {}});
    file.morphisms.push_back({f, {}});
    std::cout << "# cp_map n=" << n << " m=" << m << " q=" << q[0] << " " << q[1] << " " << q[2] << "\n"
              << aq::dsl::print(file);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Derivation complexes, André-Quillen cohomology and Whitehead lengths of mapping spaces"};
    app.require_subcommand(1);

    std::string file, map, algebra, range, generator = "cp_map";
    bool based = false, json = false;
    int max_len = 3, n = 2, m = 1;
    std::vector<std::string> q{"0", "0", "1"};

    auto* check = app.add_subcommand("check", "validate every declaration in a file");
    check->add_option("file", file, "input .aq file, - for stdin")->required();

    auto* inv = app.add_subcommand("invariants", "omega, nil, d1-depth and WL of an algebra");
    inv->add_option("file", file, "input .aq file, - for stdin")->required();
    inv->add_option("--algebra", algebra, "algebra name")->required();

    auto* coh = app.add_subcommand("cohomology", "ranks and representatives of H^{-k}(Der)");
    coh->add_option("file", file, "input .aq file, - for stdin")->required();
    coh->add_option("--map", map, "morphism name")->required();
    coh->add_option("--range", range, "homotopy degrees a..b");
    coh->add_flag("--based", based, "restrict values to the augmentation ideal");
    coh->add_flag("--json", json, "emit JSON");

    auto* br = app.add_subcommand("bracket", "pairwise brackets of representatives");
    br->add_option("file", file, "input .aq file, - for stdin")->required();
    br->add_option("--map", map, "morphism name")->required();
    br->add_option("--degrees", range, "homotopy degrees a..b");
    br->add_flag("--based", based, "restrict values to the augmentation ideal");

    auto* wl = app.add_subcommand("wl", "Whitehead-length lower bound and upper bounds");
    wl->add_option("file", file, "input .aq file, - for stdin")->required();
    wl->add_option("--map", map, "morphism name")->required();
    wl->add_option("--max-len", max_len, "longest bracket to search");
    wl->add_option("--range", range, "homotopy degrees a..b");
    wl->add_flag("--based", based, "restrict values to the augmentation ideal");

    auto* ex = app.add_subcommand("example", "emit a built-in configuration as .aq text");
    ex->add_option("generator", generator, "cp_map");
    ex->add_option("--n", n, "source CP^n");
    ex->add_option("--m", m, "target truncation y^{m+1} = 0");
    ex->add_option("--q", q, "q1 q2 q3")->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*check)
            return cmd_check(file);
        if (*inv)
            return cmd_invariants(file, algebra);
        if (*coh)
            return cmd_cohomology(file, map, range, based, json);
        if (*br)
            return cmd_bracket(file, map, range, based);
        if (*wl)
            return cmd_wl(file, map, max_len, range, based);
        if (*ex)
            return cmd_example(generator, n, m, q);
    } catch (const UsageError& e) {
        std::cerr << "aq: usage: " << e.what() << "\n";
        return kUsage;
    } catch (const aq::dsl::ParseError& e) {
        for (const auto& d : e.diagnostics())
            std::cerr << (file.empty() ? "<input>" : file) << ":" << d.str() << "\n";
        return kFailure;
    } catch (const aq::ValidationError& e) {
        for (const auto& v : e.violations())
            std::cerr << "error: " << v << "\n";
        return kFailure;
    } catch (const aq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
