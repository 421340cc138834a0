#pragma once

// Text format for presentations and morphisms.
//
//   file      := (algebra | morphism)*
//   algebra   := "algebra" IDENT "{" item* "}"
//   item      := "gen" IDENT ":" INT ";" | "rel" monomial ";" | "d" IDENT "=" poly ";"
//   morphism  := "morphism" IDENT ":" IDENT "->" IDENT "{" (IDENT "|->" poly ";")* "}"
//   poly      := signed-term (("+" | "-") term)*
//   term      := RATIONAL? ("*"? IDENT ("^" INT)?)*
//
// `#` starts a comment that runs to the end of the line. An omitted `d g` means d(g) = 0;
// every source generator of a morphism needs an explicit image.

#include "aq/cdga.hpp"
#include "aq/error.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aq::dsl {

struct Location {
    int line = 1;
    int column = 1;
};

struct Diagnostic {
    Location where;
    std::string message;

    std::string str() const;
};

class ParseError : public Error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

struct AlgebraDecl {
    cdga::Presentation presentation;
    Location where;
};

struct MorphismDecl {
    cdga::Morphism morphism;
    Location where;
};

struct SourceFile {
    std::vector<AlgebraDecl> algebras;
    std::vector<MorphismDecl> morphisms;

    const cdga::Presentation* find_algebra(std::string_view name) const;
    const cdga::Morphism* find_morphism(std::string_view name) const;
};

/// Throws ParseError with every diagnostic found (syntax errors stop at the first one).
SourceFile parse(std::string_view text);

/// Parses a polynomial over `algebra` (same syntax as the right-hand side of `d g = ...`).
gca::Polynomial parse_polynomial(const gca::AlgebraPtr& algebra, std::string_view text);

std::string print(const cdga::Presentation& a);
std::string print(const cdga::Morphism& f);
std::string print(const SourceFile& file);

/// Same names, generators, relations, differentials, morphisms and images.
bool same_declarations(const SourceFile& a, const SourceFile& b);

}  // namespace aq::dsl
