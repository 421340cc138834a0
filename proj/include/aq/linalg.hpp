#pragma once

// Exact linear algebra over Q for cohomology computations.

#include "aq/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace aq::linalg {

using Vector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major initializer; throws ContractViolation on ragged input.
    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector operator*(const Vector& x) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    bool is_zero() const;
    /// [this | b]
    RationalMatrix augmented(const Vector& b) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with first-nonzero-in-column pivoting.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing
};

EchelonForm row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);
/// Basis of {v : M v = 0}, one vector per free column in increasing column order.
std::vector<Vector> kernel_basis(const RationalMatrix& m);
/// Some x with M x = b (free variables set to zero), or nullopt when b is not in the image.
std::optional<Vector> in_image(const RationalMatrix& m, const Vector& b);

/// Incrementally maintained reduced echelon basis of a subspace of Q^n.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t ambient() const noexcept { return dim_; }
    /// v minus its component along the subspace (pivot coordinates cleared).
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Adds v; returns false when v already lies in the span.
    bool insert(const Vector& v);

private:
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero(const Vector& v);

}  // namespace aq::linalg
