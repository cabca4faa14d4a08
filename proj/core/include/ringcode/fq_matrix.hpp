#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringcode/fq.hpp"

namespace ringcode {

/// Dense matrix over F_q with row-reduction, rank, membership and solving.
/// Entries are element codes of the attached field context.
class FqMatrix {
  public:
    FqMatrix(FqPtr field, std::size_t rows, std::size_t cols);

    const Fq& field() const { return *field_; }
    FqPtr field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    fq_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    fq_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::span<const fq_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

    void append_row(std::span<const fq_t> v);

    /// In-place Gauss-Jordan to reduced row-echelon form; returns the rank.
    /// Zero rows are dropped, so rows() == rank afterwards. Pivot columns are
    /// strictly increasing.
    std::size_t row_reduce();

    bool reduced() const { return reduced_; }
    std::size_t rank() const;
    const std::vector<std::size_t>& pivots() const;

    /// Reduces v against the pivot rows (requires reduced()); the remainder is
    /// zero exactly when v lies in the row space.
    std::vector<fq_t> reduce_vector(std::span<const fq_t> v) const;
    bool in_row_space(std::span<const fq_t> v) const;

    /// RREF is canonical per row space, so equality of reduced matrices
    /// decides row-space equality.
    bool same_row_space(const FqMatrix& other) const;

    /// Solves this * x = rhs by Gaussian elimination on the augmented matrix;
    /// returns any solution (free variables set to 0) or nullopt.
    std::optional<std::vector<fq_t>> solve(std::span<const fq_t> rhs) const;

    bool operator==(const FqMatrix& other) const;

  private:
    FqPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<fq_t> a_;
    bool reduced_ = false;
    std::vector<std::size_t> pivots_;
};

}  // namespace ringcode
