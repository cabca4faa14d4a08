#include "ringcode/fq_matrix.hpp"

#include <stdexcept>

namespace ringcode {

FqMatrix::FqMatrix(FqPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

void FqMatrix::append_row(std::span<const fq_t> v) {
    if (v.size() != cols_) throw std::invalid_argument("FqMatrix::append_row: size mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
    reduced_ = false;
}

std::size_t FqMatrix::row_reduce() {
    const Fq& f = *field_;
    std::size_t pivot_row = 0;
    pivots_.clear();
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pivot_row, c));
        const fq_t s = f.inv(at(pivot_row, col));
        for (std::size_t c = col; c < cols_; ++c) at(pivot_row, c) = f.mul(s, at(pivot_row, c));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const fq_t factor = at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                at(r, c) = f.sub(at(r, c), f.mul(factor, at(pivot_row, c)));
        }
        pivots_.push_back(col);
        ++pivot_row;
    }
    rows_ = pivot_row;
    a_.resize(rows_ * cols_);
    reduced_ = true;
    return rows_;
}

std::size_t FqMatrix::rank() const {
    if (!reduced_) throw std::logic_error("FqMatrix::rank: call row_reduce first");
    return rows_;
}

const std::vector<std::size_t>& FqMatrix::pivots() const {
    if (!reduced_) throw std::logic_error("FqMatrix::pivots: call row_reduce first");
    return pivots_;
}

std::vector<fq_t> FqMatrix::reduce_vector(std::span<const fq_t> v) const {
    if (!reduced_) throw std::logic_error("FqMatrix::reduce_vector: call row_reduce first");
    if (v.size() != cols_) throw std::invalid_argument("FqMatrix::reduce_vector: size mismatch");
    const Fq& f = *field_;
    std::vector<fq_t> rem(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_; ++r) {
        const fq_t factor = rem[pivots_[r]];
        if (factor == 0) continue;
        for (std::size_t c = pivots_[r]; c < cols_; ++c)
            rem[c] = f.sub(rem[c], f.mul(factor, at(r, c)));
    }
    return rem;
}

bool FqMatrix::in_row_space(std::span<const fq_t> v) const {
    const auto rem = reduce_vector(v);
    for (fq_t x : rem)
        if (x != 0) return false;
    return true;
}

bool FqMatrix::same_row_space(const FqMatrix& other) const {
    if (!reduced_ || !other.reduced_) throw std::logic_error("same_row_space: reduce both matrices first");
    return cols_ == other.cols_ && a_ == other.a_;
}

std::optional<std::vector<fq_t>> FqMatrix::solve(std::span<const fq_t> rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("FqMatrix::solve: rhs size mismatch");
    const Fq& f = *field_;
    // Augmented copy [A | rhs].
    std::vector<fq_t> m((cols_ + 1) * rows_);
    const std::size_t w = cols_ + 1;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m[r * w + c] = at(r, c);
        m[r * w + cols_] = rhs[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols_ && pr < rows_; ++col) {
        std::size_t sel = pr;
        while (sel < rows_ && m[sel * w + col] == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pr)
            for (std::size_t c = 0; c < w; ++c) std::swap(m[sel * w + c], m[pr * w + c]);
        const fq_t s = f.inv(m[pr * w + col]);
        for (std::size_t c = col; c < w; ++c) m[pr * w + c] = f.mul(s, m[pr * w + c]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const fq_t factor = m[r * w + col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < w; ++c)
                m[r * w + c] = f.sub(m[r * w + c], f.mul(factor, m[pr * w + c]));
        }
        pivot_col.push_back(col);
        ++pr;
    }
    for (std::size_t r = pr; r < rows_; ++r)
        if (m[r * w + cols_] != 0) return std::nullopt;
    std::vector<fq_t> x(cols_, 0);
    for (std::size_t r = 0; r < pr; ++r) x[pivot_col[r]] = m[r * w + cols_];
    return x;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

}  // namespace ringcode
