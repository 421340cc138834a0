#include "aq/linalg.hpp"

#include "aq/error.hpp"

#include <algorithm>
#include <utility>

namespace aq::linalg {

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ContractViolation("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Vector RationalMatrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector RationalMatrix::operator*(const Vector& x) const
{
    if (x.size() != cols_)
        throw ContractViolation("matrix-vector size mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (a != 0 && x[c] != 0)
                y[r] += a * x[c];
        }
    }
    return y;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw ContractViolation("matrix product size mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                if (other(k, c) != 0)
                    out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix RationalMatrix::augmented(const Vector& b) const
{
    if (b.size() != rows_)
        throw ContractViolation("augmented column has wrong length");
    RationalMatrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        out(r, cols_) = b[r];
    }
    return out;
}

EchelonForm row_reduce(RationalMatrix m)
{
    EchelonForm ef;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row) {
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        }
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) != 0)
                    m(r, c) -= factor * m(row, c);
            }
        }
        ef.pivot_columns.push_back(col);
        ++row;
    }
    ef.reduced = std::move(m);
    return ef;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<Vector> kernel_basis(const RationalMatrix& m)
{
    auto ef = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ef.pivot_columns)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r)
            v[ef.pivot_columns[r]] = -ef.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> in_image(const RationalMatrix& m, const Vector& b)
{
    auto ef = row_reduce(m.augmented(b));
    const std::size_t last = m.cols();
    if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == last)
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r)
        x[ef.pivot_columns[r]] = ef.reduced(r, last);
    return x;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vector SubspaceBasis::reduce(Vector v) const
{
    if (v.size() != dim_)
        throw ContractViolation("vector length does not match subspace ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational factor = v[pivots_[i]];
        if (factor == 0)
            continue;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (rows_[i][c] != 0)
                v[c] -= factor * rows_[i][c];
        }
    }
    return v;
}

bool SubspaceBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SubspaceBasis::insert(const Vector& v)
{
    Vector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return q != 0; });
    if (it == r.end())
        return false;
    std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    Rational inv = 1 / r[pivot];
    for (auto& q : r)
        q *= inv;
    // keep the basis fully reduced at the new pivot
    for (auto& row : rows_) {
        Rational factor = row[pivot];
        if (factor == 0)
            continue;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r[c] != 0)
                row[c] -= factor * r[c];
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace aq::linalg
