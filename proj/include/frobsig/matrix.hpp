#ifndef FROBSIG_MATRIX_HPP
#define FROBSIG_MATRIX_HPP

#include <optional>
#include <vector>

#include "prime_field.hpp"

namespace frobsig {

// Dense matrix over F_p. Desk scale: exactness beats sparsity here.
class FpMatrix {
   public:
    FpMatrix(PrimeField field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    fp_t& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    fp_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    fp_t* row(size_t r) { return data_.data() + r * cols_; }
    const fp_t* row(size_t r) const { return data_.data() + r * cols_; }

   private:
    PrimeField field_;
    size_t rows_, cols_;
    std::vector<fp_t> data_;
};

// Incremental row echelon form; rows are inserted one at a time and reduced
// against the current pivots. Supports rank, kernel, and consistent solves.
class RowEchelon {
   public:
    RowEchelon(PrimeField field, size_t cols) : field_(field), cols_(cols) {}

    // Reduces the row and stores it if nonzero. Returns true if rank grew.
    bool insert(std::vector<fp_t> row);

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Reduce a row in place against the pivots (no insertion).
    void reduce(std::vector<fp_t>& row) const;

    // Basis of {v : M v = 0} for the row space inserted so far.
    std::vector<std::vector<fp_t>> kernel_basis() const;

    const std::vector<std::vector<fp_t>>& rows() const { return rows_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }

   private:
    PrimeField field_;
    size_t cols_;
    std::vector<std::vector<fp_t>> rows_;  // echelonized, pivot coeff 1
    std::vector<size_t> pivots_;           // pivot column of each stored row
};

int matrix_rank(const FpMatrix& m);

// One solution of m x = rhs with free variables set to 0, or nullopt.
std::optional<std::vector<fp_t>> solve_linear(const FpMatrix& m, const std::vector<fp_t>& rhs);

std::vector<std::vector<fp_t>> kernel_basis(const FpMatrix& m);

}  // namespace frobsig

#endif
