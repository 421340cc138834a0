#include "aq/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace aq::dsl {

std::string Diagnostic::str() const
{
    return std::to_string(where.line) + ":" + std::to_string(where.column) + ": error: " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diags)
{
    std::string out;
    for (const auto& d : diags) {
        if (!out.empty())
            out += '\n';
        out += d.str();
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics))
{}

const cdga::Presentation* SourceFile::find_algebra(std::string_view name) const
{
    for (const auto& a : algebras) {
        if (a.presentation.name() == name)
            return &a.presentation;
    }
    return nullptr;
}

const cdga::Morphism* SourceFile::find_morphism(std::string_view name) const
{
    for (const auto& m : morphisms) {
        if (m.morphism.name() == name)
            return &m.morphism;
    }
    return nullptr;
}

namespace {

// ---------------------------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Int, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Location where;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::Ident:
        return "identifier '" + t.text + "'";
    case Tok::Int:
        return "integer " + t.text;
    case Tok::Symbol:
        return "'" + t.text + "'";
    case Tok::End:
        break;
    }
    return "end of input";
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    Location loc;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.where = loc;
        std::size_t len = 0;
        if (ident_start(c)) {
            t.kind = Tok::Ident;
            while (i + len < text.size() && ident_char(text[i + len]))
                ++len;
        } else if (digit(c)) {
            t.kind = Tok::Int;
            while (i + len < text.size() && digit(text[i + len]))
                ++len;
        } else if (text.substr(i, 3) == "|->") {
            t.kind = Tok::Symbol;
            len = 3;
        } else if (text.substr(i, 2) == "->") {
            t.kind = Tok::Symbol;
            len = 2;
        } else if (std::string_view("{}:;=^*+-/").find(c) != std::string_view::npos) {
            t.kind = Tok::Symbol;
            len = 1;
        } else {
            throw ParseError({Diagnostic{loc, std::string("unexpected character '") + c + "'"}});
        }
        t.text = std::string(text.substr(i, len));
        advance(len);
        out.push_back(std::move(t));
    }
    Token end;
    end.where = loc;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Syntax tree

struct RawFactor {
    std::string name;
    unsigned exponent = 1;
    Location where;
};

struct RawTerm {
    Rational coefficient{1};
    std::vector<RawFactor> factors;
    Location where;
};

struct RawPoly {
    std::vector<RawTerm> terms;
    Location where;
};

struct RawGen {
    std::string name;
    long degree;
    Location where;
};

struct RawDiff {
    std::string gen;
    RawPoly value;
    Location where;
};

struct RawAlgebra {
    std::string name;
    Location where;
    std::vector<RawGen> gens;
    std::vector<RawTerm> rels;
    std::vector<RawDiff> diffs;
};

struct RawImage {
    std::string gen;
    RawPoly value;
    Location where;
};

struct RawMorphism {
    std::string name, source, target;
    Location where, source_where, target_where;
    std::vector<RawImage> images;
};

struct RawFile {
    // declaration order matters only within each kind
    std::vector<RawAlgebra> algebras;
    std::vector<RawMorphism> morphisms;
};

// ---------------------------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    RawFile file()
    {
        RawFile f;
        while (peek().kind != Tok::End) {
            if (is_ident("algebra"))
                f.algebras.push_back(algebra());
            else if (is_ident("morphism"))
                f.morphisms.push_back(morphism());
            else
                fail("expected 'algebra' or 'morphism'");
        }
        return f;
    }

    RawPoly poly()
    {
        RawPoly p;
        p.where = peek().where;
        bool negative = false;
        if (is_symbol("+") || is_symbol("-")) {
            negative = next().text == "-";
        }
        p.terms.push_back(term(negative));
        while (is_symbol("+") || is_symbol("-")) {
            negative = next().text == "-";
            p.terms.push_back(term(negative));
        }
        return p;
    }

    void expect_end()
    {
        if (peek().kind != Tok::End)
            fail("expected end of input");
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_ident(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
    bool is_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }

    [[noreturn]] void fail(const std::string& expected) const
    {
        throw ParseError({Diagnostic{peek().where, expected + ", found " + describe(peek())}});
    }

    void expect_symbol(std::string_view s)
    {
        if (!is_symbol(s))
            fail("expected '" + std::string(s) + "'");
        next();
    }

    Token expect_ident(const char* what)
    {
        if (peek().kind != Tok::Ident)
            fail(std::string("expected ") + what);
        return next();
    }

    long expect_int(const char* what)
    {
        if (peek().kind != Tok::Int)
            fail(std::string("expected ") + what);
        const Token& t = peek();
        long v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || v > 1000000)
            throw ParseError({Diagnostic{t.where, "integer " + t.text + " is too large"}});
        next();
        return v;
    }

    RawAlgebra algebra()
    {
        RawAlgebra a;
        a.where = next().where;
        a.name = expect_ident("algebra name").text;
        expect_symbol("{");
        while (!is_symbol("}")) {
            if (is_ident("gen")) {
                RawGen g;
                g.where = next().where;
                g.name = expect_ident("generator name").text;
                expect_symbol(":");
                g.degree = expect_int("generator degree");
                expect_symbol(";");
                a.gens.push_back(std::move(g));
            } else if (is_ident("rel")) {
                next();
                a.rels.push_back(monomial());
                expect_symbol(";");
            } else if (is_ident("d")) {
                RawDiff d;
                d.where = next().where;
                d.gen = expect_ident("generator name after 'd'").text;
                expect_symbol("=");
                d.value = poly();
                expect_symbol(";");
                a.diffs.push_back(std::move(d));
            } else {
                fail("expected 'gen', 'rel', 'd' or '}'");
            }
        }
        next();
        return a;
    }

    RawMorphism morphism()
    {
        RawMorphism m;
        m.where = next().where;
        m.name = expect_ident("morphism name").text;
        expect_symbol(":");
        m.source_where = peek().where;
        m.source = expect_ident("source algebra name").text;
        expect_symbol("->");
        m.target_where = peek().where;
        m.target = expect_ident("target algebra name").text;
        expect_symbol("{");
        while (!is_symbol("}")) {
            RawImage img;
            img.where = peek().where;
            img.gen = expect_ident("generator name or '}'").text;
            expect_symbol("|->");
            img.value = poly();
            expect_symbol(";");
            m.images.push_back(std::move(img));
        }
        next();
        return m;
    }

    RawFactor factor()
    {
        RawFactor f;
        f.where = peek().where;
        f.name = expect_ident("generator name").text;
        if (is_symbol("^")) {
            next();
            f.exponent = static_cast<unsigned>(expect_int("exponent"));
        }
        return f;
    }

    RawTerm monomial()
    {
        RawTerm t;
        t.where = peek().where;
        t.factors.push_back(factor());
        while (is_symbol("*") || peek().kind == Tok::Ident) {
            if (is_symbol("*"))
                next();
            t.factors.push_back(factor());
        }
        return t;
    }

    RawTerm term(bool negative)
    {
        RawTerm t;
        t.where = peek().where;
        bool has_coefficient = false;
        if (peek().kind == Tok::Int) {
            has_coefficient = true;
            long num = expect_int("coefficient");
            long den = 1;
            if (is_symbol("/")) {
                next();
                Location at = peek().where;
                den = expect_int("denominator");
                if (den == 0)
                    throw ParseError({Diagnostic{at, "zero denominator"}});
            }
            t.coefficient = make_rational(num, den);
        }
        while (is_symbol("*") || peek().kind == Tok::Ident) {
            if (is_symbol("*"))
                next();
            t.factors.push_back(factor());
        }
        if (!has_coefficient && t.factors.empty())
            fail("expected a term (coefficient or generator)");
        if (negative)
            t.coefficient = -t.coefficient;
        return t;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------------------------
// Semantic resolution

class Resolver {
public:
    std::vector<Diagnostic> diags;

    void error(Location at, std::string msg) { diags.push_back(Diagnostic{at, std::move(msg)}); }

    /// nullopt after reporting unknown symbols.
    std::optional<gca::Polynomial> polynomial(const gca::AlgebraPtr& alg, const RawPoly& raw)
    {
        gca::Polynomial out(alg);
        bool ok = true;
        for (const auto& t : raw.terms) {
            std::vector<std::size_t> word;
            for (const auto& f : t.factors) {
                auto pos = alg->find(f.name);
                if (!pos) {
                    error(f.where, "unknown symbol '" + f.name + "'");
                    ok = false;
                    continue;
                }
                word.insert(word.end(), f.exponent, *pos);
            }
            if (!ok)
                continue;
            auto sm = gca::canonical_monomial(*alg, std::span<const std::size_t>(word));
            if (!sm)
                continue;
            out += gca::Polynomial::term(alg, sm->monomial, sm->sign > 0 ? t.coefficient : Rational(-t.coefficient));
        }
        if (!ok)
            return std::nullopt;
        return out;
    }

    std::optional<cdga::Presentation> algebra(const RawAlgebra& raw)
    {
        const std::size_t before = diags.size();
        std::vector<gca::GeneratorSymbol> gens;
        std::set<std::string> names;
        for (const auto& g : raw.gens) {
            if (!names.insert(g.name).second) {
                error(g.where, "duplicate generator '" + g.name + "' in algebra '" + raw.name + "'");
                continue;
            }
            if (g.degree < 1) {
                error(g.where, "generator '" + g.name + "' must have degree >= 1");
                continue;
            }
            gens.push_back({g.name, static_cast<int>(g.degree)});
        }
        std::vector<gca::RelationSpec> rels;
        for (const auto& r : raw.rels) {
            gca::RelationSpec factors;
            bool ok = true;
            for (const auto& f : r.factors) {
                auto it = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return g.name == f.name; });
                if (it == gens.end()) {
                    error(f.where, "unknown symbol '" + f.name + "'");
                    ok = false;
                } else if (it->odd() && f.exponent > 1) {
                    error(f.where, "relation is already zero: odd generator '" + f.name + "' squared");
                    ok = false;
                } else if (f.exponent == 0) {
                    error(f.where, "relation factor with exponent 0");
                    ok = false;
                } else {
                    factors.emplace_back(f.name, f.exponent);
                }
            }
            if (ok)
                rels.push_back(std::move(factors));
        }
        if (diags.size() != before)
            return std::nullopt;

        gca::AlgebraPtr alg;
        try {
            alg = gca::GradedAlgebra::make(gens, rels);
        } catch (const Error& e) {
            error(raw.where, e.what());
            return std::nullopt;
        }

        std::vector<gca::Polynomial> d(alg->size(), gca::Polynomial(alg));
        std::set<std::string> seen;
        for (const auto& rd : raw.diffs) {
            auto pos = alg->find(rd.gen);
            if (!pos) {
                error(rd.where, "unknown symbol '" + rd.gen + "'");
                continue;
            }
            if (!seen.insert(rd.gen).second) {
                error(rd.where, "duplicate differential for '" + rd.gen + "'");
                continue;
            }
            auto p = polynomial(alg, rd.value);
            if (!p)
                continue;
            int want = alg->symbol(*pos).degree + 1;
            if (!p->is_homogeneous(want)) {
                auto deg = p->degree();
                error(rd.value.where, "degree mismatch: d " + rd.gen + " = " + gca::to_string(*p) + " has degree " +
                                          (deg ? std::to_string(*deg) : std::string("(inhomogeneous)")) +
                                          ", expected " + std::to_string(want) +
                                          (deg ? " (" + std::to_string(*deg) + " != " + std::to_string(want) + ")"
                                               : std::string()));
                continue;
            }
            d[*pos] = std::move(*p);
        }
        if (diags.size() != before)
            return std::nullopt;
        return cdga::Presentation(raw.name, alg, std::move(d));
    }

    std::optional<cdga::Morphism> morphism(const RawMorphism& raw,
                                           const std::map<std::string, cdga::Presentation>& algebras,
                                           const std::set<std::string>& broken)
    {
        const std::size_t before = diags.size();
        auto src = algebras.find(raw.source);
        auto tgt = algebras.find(raw.target);
        if (src == algebras.end() && !broken.count(raw.source))
            error(raw.source_where, "unknown algebra '" + raw.source + "'");
        if (tgt == algebras.end() && !broken.count(raw.target))
            error(raw.target_where, "unknown algebra '" + raw.target + "'");
        if (src == algebras.end() || tgt == algebras.end())
            return std::nullopt;

        const auto& sa = src->second.algebra();
        const auto& ta = tgt->second.algebra();
        std::vector<std::optional<gca::Polynomial>> images(sa->size());
        for (const auto& img : raw.images) {
            auto pos = sa->find(img.gen);
            if (!pos) {
                error(img.where, "unknown symbol '" + img.gen + "' (not a generator of '" + raw.source + "')");
                continue;
            }
            if (images[*pos]) {
                error(img.where, "duplicate image for '" + img.gen + "'");
                continue;
            }
            auto p = polynomial(ta, img.value);
            if (!p)
                continue;
            int want = sa->symbol(*pos).degree;
            if (!p->is_homogeneous(want)) {
                auto deg = p->degree();
                error(img.value.where, "degree mismatch: " + raw.name + "(" + img.gen + ") = " + gca::to_string(*p) +
                                           " has degree " +
                                           (deg ? std::to_string(*deg) : std::string("(inhomogeneous)")) +
                                           ", expected " + std::to_string(want));
                continue;
            }
            images[*pos] = std::move(*p);
        }
        for (auto pos : sa->declaration_order()) {
            if (!images[pos] && std::none_of(raw.images.begin(), raw.images.end(),
                                             [&](const RawImage& i) { return i.gen == sa->symbol(pos).name; }))
                error(raw.where, "morphism '" + raw.name + "' gives no image for generator '" +
                                     sa->symbol(pos).name + "'");
        }
        if (diags.size() != before)
            return std::nullopt;
        std::vector<gca::Polynomial> out;
        for (auto& p : images)
            out.push_back(std::move(*p));
        return cdga::Morphism(raw.name, src->second, tgt->second, std::move(out));
    }
};

}  // namespace

SourceFile parse(std::string_view text)
{
    Parser parser(tokenize(text));
    RawFile raw = parser.file();

    Resolver res;
    SourceFile out;
    std::map<std::string, cdga::Presentation> by_name;
    std::set<std::string> broken;
    for (const auto& ra : raw.algebras) {
        if (by_name.count(ra.name) || broken.count(ra.name)) {
            res.error(ra.where, "duplicate algebra '" + ra.name + "'");
            continue;
        }
        auto p = res.algebra(ra);
        if (!p) {
            broken.insert(ra.name);
            continue;
        }
        by_name.emplace(ra.name, *p);
        out.algebras.push_back(AlgebraDecl{std::move(*p), ra.where});
    }
    std::set<std::string> morphism_names;
    for (const auto& rm : raw.morphisms) {
        if (!morphism_names.insert(rm.name).second) {
            res.error(rm.where, "duplicate morphism '" + rm.name + "'");
            continue;
        }
        auto m = res.morphism(rm, by_name, broken);
        if (m)
            out.morphisms.push_back(MorphismDecl{std::move(*m), rm.where});
    }
    if (!res.diags.empty())
        throw ParseError(std::move(res.diags));
    return out;
}

gca::Polynomial parse_polynomial(const gca::AlgebraPtr& algebra, std::string_view text)
{
    Parser parser(tokenize(text));
    RawPoly raw = parser.poly();
    parser.expect_end();
    Resolver res;
    auto p = res.polynomial(algebra, raw);
    if (!p)
        throw ParseError(std::move(res.diags));
    return *p;
}

// ---------------------------------------------------------------------------------------------
// Printing

std::string print(const cdga::Presentation& a)
{
    const auto& alg = *a.algebra();
    std::ostringstream os;
    os << "algebra " << a.name() << " {\n";
    for (auto pos : alg.declaration_order())
        os << "  gen " << alg.symbol(pos).name << " : " << alg.symbol(pos).degree << ";\n";
    for (const auto& r : alg.ideal().generators())
        os << "  rel " << gca::to_string(alg, r) << ";\n";
    for (auto pos : alg.declaration_order()) {
        if (!a.d(pos).is_zero())
            os << "  d " << alg.symbol(pos).name << " = " << gca::to_string(a.d(pos)) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string print(const cdga::Morphism& f)
{
    const auto& src = *f.source().algebra();
    std::ostringstream os;
    os << "morphism " << f.name() << " : " << f.source().name() << " -> " << f.target().name() << " {\n";
    for (auto pos : src.declaration_order())
        os << "  " << src.symbol(pos).name << " |-> " << gca::to_string(f.image(pos)) << ";\n";
    os << "}\n";
    return os.str();
}

std::string print(const SourceFile& file)
{
    std::string out;
    for (const auto& a : file.algebras) {
        if (!out.empty())
            out += '\n';
        out += print(a.presentation);
    }
    for (const auto& m : file.morphisms) {
        if (!out.empty())
            out += '\n';
        out += print(m.morphism);
    }
    return out;
}

namespace {

bool same_algebra(const gca::GradedAlgebra& a, const gca::GradedAlgebra& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.symbol(a.declaration_order()[i]) != b.symbol(b.declaration_order()[i]))
            return false;
    }
    return a.ideal().generators() == b.ideal().generators();
}

bool same_polys(const std::vector<gca::Polynomial>& a, const std::vector<gca::Polynomial>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].terms() != b[i].terms())
            return false;
    }
    return true;
}

bool same_presentation(const cdga::Presentation& a, const cdga::Presentation& b)
{
    return a.name() == b.name() && same_algebra(*a.algebra(), *b.algebra()) &&
           same_polys(a.differential(), b.differential());
}

}  // namespace

bool same_declarations(const SourceFile& a, const SourceFile& b)
{
    if (a.algebras.size() != b.algebras.size() || a.morphisms.size() != b.morphisms.size())
        return false;
    for (std::size_t i = 0; i < a.algebras.size(); ++i) {
        if (!same_presentation(a.algebras[i].presentation, b.algebras[i].presentation))
            return false;
    }
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
        const auto& f = a.morphisms[i].morphism;
        const auto& g = b.morphisms[i].morphism;
        if (f.name() != g.name() || !same_presentation(f.source(), g.source()) ||
            !same_presentation(f.target(), g.target()) || !same_polys(f.images(), g.images()))
            return false;
    }
    return true;
}

}  // namespace aq::dsl
