#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toric/gf.hpp"

namespace toric {

/// Dense row-major matrix over a fixed field; entries are canonical values.
class FqMatrix {
  public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {a_.data() + i * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }

    bool is_zero() const;
    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    static FqMatrix identity(FieldPtr field, std::size_t n);
    static FqMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);

  private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    FqMatrix R;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row echelon form with deterministic pivoting: leftmost column
/// first, topmost nonzero row as pivot.
RrefResult rref(const FqMatrix& M);

std::size_t rank(const FqMatrix& M);

/// Basis of {v : M v = 0}, one vector per free column in ascending column
/// order.  Vectors are exact annihilators and linearly independent.
std::vector<std::vector<std::uint32_t>> kernel_basis(const FqMatrix& M);

struct Solution {
    std::vector<std::uint32_t> x;  // particular solution, free variables = 0
    std::size_t nullity;           // cols - rank; 0 certifies uniqueness
};

/// Solves M x = b; nullopt when inconsistent.
std::optional<Solution> solve(const FqMatrix& M, std::span<const std::uint32_t> b);

FqMatrix transpose(const FqMatrix& M);
FqMatrix matmul(const FqMatrix& A, const FqMatrix& B);

/// v * M for a row vector v of length M.rows().
std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const FqMatrix& M);

/// A stacked on top of B (same column count).
FqMatrix stack(const FqMatrix& A, const FqMatrix& B);

}  // namespace toric
