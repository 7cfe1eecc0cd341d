#ifndef KF_MATRIX_HPP
#define KF_MATRIX_HPP

// Dense exact rational matrices: determinant (fraction-free Bareiss
// elimination), linear solve, and the signature of a symmetric matrix via
// congruence diagonalization (Sylvester's law of inertia).

#include "kf/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kf {

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const RatMatrix& other) const = default;

    // Submatrix with one row and one column removed.
    RatMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

    bool is_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination on a common
// denominator clearing of the input.  Throws on non-square input.
Rat det(const RatMatrix& m);

// Exact determinant by cofactor expansion along the first row.  Exponential;
// retained as an independent oracle for tests only.
Rat det_cofactor(const RatMatrix& m);

// Solves m x = v exactly.  Throws on dimension mismatch or singular m.
std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& v);

// Number of positive minus number of negative eigenvalues of a symmetric
// matrix, computed exactly by symmetric congruence diagonalization.
// Throws on non-symmetric input.
int signature(const RatMatrix& m);

// Reusable exact solver for the affine systems A c = b with many right-hand
// sides over one coefficient matrix: performs Gauss-Jordan elimination once,
// recording the row operations, and answers each rhs in O(rows^2).  Also
// exposes the rank and a basis of the null space.
class AffineSolver {
public:
    explicit AffineSolver(RatMatrix a);

    std::size_t rank() const { return pivot_cols_.size(); }
    std::size_t cols() const { return rref_.cols(); }
    const std::vector<std::vector<Rat>>& kernel_basis() const { return kernel_; }

    // Particular solution of A c = b, or nothing when the system is
    // inconsistent.  Throws on dimension mismatch.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

private:
    RatMatrix rref_; // reduced row echelon form of the input
    RatMatrix ops_;  // row-operation matrix: ops_ * input = rref_
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::vector<Rat>> kernel_;
};

} // namespace kf

#endif // KF_MATRIX_HPP
