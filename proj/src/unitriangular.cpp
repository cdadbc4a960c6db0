#include "circparikh/unitriangular.hpp"

#include <stdexcept>

namespace circparikh {

namespace {

const Rational& zero() {
    static const Rational value(0L);
    return value;
}

const Rational& one() {
    static const Rational value(1L);
    return value;
}

std::size_t upper_count(std::size_t dim) { return dim * (dim - 1) / 2; }

void require_dim(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("unitriangular matrix needs dimension >= 2");
}

}  // namespace

UnitriangularMatrix::UnitriangularMatrix(std::size_t dim) : dim_(dim) {
    require_dim(dim);
    upper_.assign(upper_count(dim), Rational{});
}

UnitriangularMatrix::UnitriangularMatrix(std::size_t dim, std::vector<Rational> upper)
    : dim_(dim), upper_(std::move(upper)) {}

UnitriangularMatrix UnitriangularMatrix::from_upper(std::size_t dim, std::vector<Rational> upper) {
    require_dim(dim);
    if (upper.size() != upper_count(dim)) {
        throw std::invalid_argument("expected " + std::to_string(upper_count(dim)) + " upper entries, got " +
                                    std::to_string(upper.size()));
    }
    return UnitriangularMatrix(dim, std::move(upper));
}

UnitriangularMatrix UnitriangularMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t dim = rows.size();
    require_dim(dim);
    std::vector<Rational> upper;
    upper.reserve(upper_count(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) throw std::invalid_argument("matrix rows must all have length " + std::to_string(dim));
        for (std::size_t j = 0; j < dim; ++j) {
            const Rational& v = rows[i][j];
            if (j < i && !v.is_zero()) throw std::invalid_argument("matrix is not upper triangular");
            if (j == i && v != one()) throw std::invalid_argument("matrix diagonal is not all ones");
            if (j > i) upper.push_back(v);
        }
    }
    return UnitriangularMatrix(dim, std::move(upper));
}

const Rational& UnitriangularMatrix::operator()(std::size_t row, std::size_t col) const {
    if (row == col) return one();
    if (col < row) return zero();
    return upper_[offset(row, col)];
}

const Rational& UnitriangularMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw std::out_of_range("matrix index out of range");
    return (*this)(row, col);
}

std::vector<std::vector<Rational>> UnitriangularMatrix::rows() const {
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
}

UnitriangularMatrix multiply(const UnitriangularMatrix& lhs, const UnitriangularMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(lhs.dim()) + " vs " +
                                    std::to_string(rhs.dim()));
    }
    const std::size_t n = lhs.dim();
    std::vector<Rational> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Diagonal terms k = i and k = j contribute rhs(i,j) and lhs(i,j).
            Rational sum = lhs(i, j) + rhs(i, j);
            for (std::size_t k = i + 1; k < j; ++k) sum += lhs(i, k) * rhs(k, j);
            upper.push_back(std::move(sum));
        }
    }
    return UnitriangularMatrix::from_upper(n, std::move(upper));
}

UnitriangularMatrix power(const UnitriangularMatrix& base, unsigned long exponent) {
    UnitriangularMatrix result(base.dim());
    UnitriangularMatrix square = base;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * square;
        exponent >>= 1;
        if (exponent > 0) square = square * square;
    }
    return result;
}

UnitriangularMatrix inverse(const UnitriangularMatrix& matrix) {
    const std::size_t n = matrix.dim();
    // B(i,j) = -sum_{i<k<=j} A(i,k) B(k,j), filled bottom-up within each column.
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        b[j][j] = Rational(1L);
        for (std::size_t i = j; i-- > 0;) {
            Rational sum;
            for (std::size_t k = i + 1; k <= j; ++k) sum += matrix(i, k) * b[k][j];
            b[i][j] = -sum;
        }
    }
    std::vector<Rational> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) upper.push_back(std::move(b[i][j]));
    }
    return UnitriangularMatrix::from_upper(n, std::move(upper));
}

UnitriangularMatrix alternate(const UnitriangularMatrix& matrix) {
    const std::size_t n = matrix.dim();
    std::vector<Rational> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            upper.push_back((i + j) % 2 == 0 ? matrix(i, j) : -matrix(i, j));
        }
    }
    return UnitriangularMatrix::from_upper(n, std::move(upper));
}

std::string matrix_key(const UnitriangularMatrix& matrix) {
    std::string key;
    bool first = true;
    for (const auto& entry : matrix.upper()) {
        if (!first) key += ',';
        key += entry.to_string();
        first = false;
    }
    return key;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const UnitriangularMatrix& lhs,
                                                                    const UnitriangularMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        for (std::size_t j = i + 1; j < lhs.dim(); ++j) {
            if (lhs(i, j) != rhs(i, j)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace circparikh
