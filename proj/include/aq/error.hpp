#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element or symbol was used with an algebra it does not belong to.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// The operation needs a free (relation-less) presentation.
class UnsupportedPresentation : public Error {
public:
    using Error::Error;
};

/// The d1-filtration stalled before exhausting the generators.
class NotNilpotent : public Error {
public:
    using Error::Error;
};

/// Structural validation failed; carries every violation found.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v)
    {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty())
                out += "; ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace aq
