#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circparikh/rational.hpp"

namespace circparikh {

/// Square upper-triangular matrix over the rationals with ones on the diagonal.
///
/// Only the strictly upper entries are stored (row-major). Indices are
/// zero-based; element access for a diagonal or lower position yields the
/// fixed 1 or 0. Every value is immutable once built.
class UnitriangularMatrix {
public:
    /// Identity of the given dimension; throws std::invalid_argument if dim < 2.
    explicit UnitriangularMatrix(std::size_t dim);

    /// `upper` lists the dim*(dim-1)/2 strictly upper entries row by row.
    static UnitriangularMatrix from_upper(std::size_t dim, std::vector<Rational> upper);

    /// Validates shape, unit diagonal and zero lower part.
    static UnitriangularMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t row, std::size_t col) const;
    /// Bounds-checked variant of operator().
    const Rational& at(std::size_t row, std::size_t col) const;
    std::span<const Rational> upper() const { return upper_; }

    std::vector<std::vector<Rational>> rows() const;

    friend bool operator==(const UnitriangularMatrix&, const UnitriangularMatrix&) = default;

private:
    UnitriangularMatrix(std::size_t dim, std::vector<Rational> upper);

    std::size_t offset(std::size_t row, std::size_t col) const {
        return row * dim_ - row * (row + 1) / 2 + (col - row - 1);
    }

    std::size_t dim_;
    std::vector<Rational> upper_;
};

/// Throws std::invalid_argument on dimension mismatch.
UnitriangularMatrix multiply(const UnitriangularMatrix& lhs, const UnitriangularMatrix& rhs);
inline UnitriangularMatrix operator*(const UnitriangularMatrix& lhs, const UnitriangularMatrix& rhs) {
    return multiply(lhs, rhs);
}

/// Square-and-multiply; power(A, 0) is the identity.
UnitriangularMatrix power(const UnitriangularMatrix& base, unsigned long exponent);

/// Exact inverse by back substitution (the determinant is always 1).
UnitriangularMatrix inverse(const UnitriangularMatrix& matrix);

/// Checkerboard sign flip: entry (i,j) becomes (-1)^(i+j) times the original.
UnitriangularMatrix alternate(const UnitriangularMatrix& matrix);

/// Strictly upper entries row-major as lowest-terms tokens joined by commas.
/// Equal keys if and only if equal matrices.
std::string matrix_key(const UnitriangularMatrix& matrix);

/// First strictly upper position (row-major) where the two matrices differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const UnitriangularMatrix& lhs,
                                                                    const UnitriangularMatrix& rhs);

}  // namespace circparikh
