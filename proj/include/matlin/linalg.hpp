#ifndef MATLIN_LINALG_HPP
#define MATLIN_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "matlin/rational.hpp"

namespace matlin {

/// Dense row-major matrix of exact rationals. Column indices are 0-based
/// here; the matroid layer maps them to element labels.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rat> row(std::size_t r) const;
    std::vector<Rat> column(std::size_t c) const;

    /// Submatrix made of the given columns, in the given order.
    RatMatrix select_columns(std::span<const std::size_t> cols) const;
    RatMatrix transposed() const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;  ///< strictly increasing
    std::size_t rank = 0;
};

RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rank of the submatrix on the chosen columns; 0 for an empty selection.
std::size_t column_rank(const RatMatrix& m, std::span<const std::size_t> cols);

/// Rows form a basis of the right kernel {v : m v = 0}; there are
/// cols - rank(m) of them, normalized so each has a 1 in its free column.
RatMatrix kernel_basis(const RatMatrix& m);

std::vector<Rat> multiply(const RatMatrix& m, std::span<const Rat> v);

}  // namespace matlin

#endif
