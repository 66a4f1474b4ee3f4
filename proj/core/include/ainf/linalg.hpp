#pragma once

#include "ainf/graded.hpp"

#include <optional>
#include <vector>

namespace ainf {

/// Dense rational matrix; only used on single-degree blocks, which stay small.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot columns in order.
    /// Pivot choice is the first nonzero entry in row order, so the result
    /// depends only on the input.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    /// Basis of {x : Mx = 0}; one vector per free column, 1 at that column.
    std::vector<std::vector<Scalar>> nullspace() const;
    /// Some x with Mx = b (free variables set to zero), or nullopt.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    /// Throws InvalidInput when singular.
    Matrix inverse() const;

    std::vector<Scalar> multiply(const std::vector<Scalar>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Incrementally maintained echelon basis of sparse vectors. `insert`
/// reports whether the new vector enlarged the span.
class EchelonBasis {
public:
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    /// Residue of v after reduction against the stored rows.
    Vector reduce(Vector v) const;
    std::size_t rank() const { return rows_.size(); }
    /// Pivot (leading) indices of the stored rows.
    std::vector<BasisIndex> pivots() const;
    const std::map<BasisIndex, Vector>& rows() const { return rows_; }

private:
    std::map<BasisIndex, Vector> rows_;  // pivot -> row with coefficient 1 at pivot
};

/// Matrix block of L from source degree `from` to degree from + shift, rows
/// and columns in basis order of the respective degree.
Matrix degree_block(const GradedLinearMap& L, int from);

/// Solves L(x) = target for homogeneous target; nullopt when unsolvable.
/// Throws MalformedInput for a non-homogeneous target.
std::optional<Vector> solve_linear(const GradedLinearMap& L, const Vector& target);

/// Per-degree rank of L (indexed by source degree).
std::map<int, std::size_t> ranks_by_degree(const GradedLinearMap& L);

}  // namespace ainf
