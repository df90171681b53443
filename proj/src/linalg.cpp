#include "matlin/linalg.hpp"

#include <stdexcept>

namespace matlin {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

std::vector<Rat> RatMatrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rat> RatMatrix::column(std::size_t c) const {
    std::vector<Rat> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
    RatMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
            out(r, j) = (*this)(r, cols[j]);
        }
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

RrefResult rref(const RatMatrix& m) {
    RrefResult res{m, {}, 0};
    RatMatrix& a = res.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(sel, k), a(pivot_row, k));

        const Rat inv = 1 / a(pivot_row, c);
        for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, c) == 0) continue;
            const Rat factor = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= factor * a(pivot_row, k);
        }
        res.pivots.push_back(c);
        ++pivot_row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::size_t column_rank(const RatMatrix& m, std::span<const std::size_t> cols) {
    if (cols.empty()) return 0;
    return rank(m.select_columns(cols));
}

RatMatrix kernel_basis(const RatMatrix& m) {
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    RatMatrix basis(m.cols() - red.rank, m.cols());
    std::size_t out_row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out_row, free) = 1;
        for (std::size_t i = 0; i < red.rank; ++i) basis(out_row, red.pivots[i]) = -red.matrix(i, free);
        ++out_row;
    }
    return basis;
}

std::vector<Rat> multiply(const RatMatrix& m, std::span<const Rat> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in multiply");
    std::vector<Rat> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

}  // namespace matlin
