#include "kf/matrix.hpp"

#include <utility>

namespace kf {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
    RatMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw Error::computation("matrix product dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

namespace {

// Row-wise denominator clearing: returns an integer matrix together with the
// product of the per-row scale factors, so det(input) = det(integer)/scale.
std::pair<std::vector<std::vector<Int>>, Int> clear_denominators(const RatMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    Int scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int d = denominator(m.at(i, j));
            row_lcm = boost::multiprecision::lcm(row_lcm, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& e = m.at(i, j);
            a[i][j] = numerator(e) * (row_lcm / denominator(e));
        }
        scale *= row_lcm;
    }
    return {std::move(a), scale};
}

} // namespace

Rat det(const RatMatrix& m) {
    if (!m.square())
        throw Error::computation("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    auto [a, scale] = clear_denominators(m);

    // Bareiss fraction-free elimination: all divisions are exact.
    Int sign = 1;
    Int prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev_pivot;
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    return Rat(sign * a[n - 1][n - 1], scale);
}

Rat det_cofactor(const RatMatrix& m) {
    if (!m.square())
        throw Error::computation("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rat acc = 0;
    Rat sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) != 0)
            acc += sign * m.at(0, j) * det_cofactor(m.minor_matrix(0, j));
        sign = -sign;
    }
    return acc;
}

std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& v) {
    if (!m.square())
        throw Error::computation("solve requires a square matrix");
    const std::size_t n = m.rows();
    if (v.size() != n)
        throw Error::computation("solve dimension mismatch");

    // Exact Gaussian elimination on the augmented system.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = v[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n)
            throw Error::computation("solve: singular matrix");
        std::swap(a[k], a[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

AffineSolver::AffineSolver(RatMatrix a) : rref_(std::move(a)) {
    const std::size_t rows = rref_.rows();
    const std::size_t cols = rref_.cols();
    ops_ = RatMatrix::identity(rows);

    // Gauss-Jordan elimination, mirroring every row operation into ops_ so
    // that ops_ * original == rref_ afterwards.
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && rref_.at(r, col) == 0) ++r;
        if (r == rows) continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(rref_.at(r, j), rref_.at(pivot_row, j));
            for (std::size_t j = 0; j < rows; ++j)
                std::swap(ops_.at(r, j), ops_.at(pivot_row, j));
        }
        const Rat pivot = rref_.at(pivot_row, col);
        if (pivot != 1) {
            for (std::size_t j = 0; j < cols; ++j) rref_.at(pivot_row, j) /= pivot;
            for (std::size_t j = 0; j < rows; ++j) ops_.at(pivot_row, j) /= pivot;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            const Rat factor = rref_.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                rref_.at(i, j) -= factor * rref_.at(pivot_row, j);
            for (std::size_t j = 0; j < rows; ++j)
                ops_.at(i, j) -= factor * ops_.at(pivot_row, j);
        }
        pivot_cols_.push_back(col);
        ++pivot_row;
    }

    // Null-space basis: one vector per free column, with -1 in the free slot
    // so that rref * vector == 0 reads off directly from the pivot rows.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols_) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = -1;
        for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
            v[pivot_cols_[i]] = rref_.at(i, free_col);
        kernel_.push_back(std::move(v));
    }
}

std::optional<std::vector<Rat>> AffineSolver::solve(const std::vector<Rat>& b) const {
    const std::size_t rows = rref_.rows();
    if (b.size() != rows)
        throw Error::computation("affine solve dimension mismatch");
    // Transformed right-hand side under the recorded row operations.
    std::vector<Rat> t(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            if (ops_.at(i, j) != 0 && b[j] != 0) t[i] += ops_.at(i, j) * b[j];
    for (std::size_t i = pivot_cols_.size(); i < rows; ++i)
        if (t[i] != 0) return std::nullopt;
    std::vector<Rat> x(rref_.cols(), Rat(0));
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = t[i];
    return x;
}

int signature(const RatMatrix& m) {
    if (!m.is_symmetric())
        throw Error::computation("signature requires a symmetric matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int positives = 0, negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Bring a nonzero entry onto the diagonal by a congruence move.
            std::size_t d = k + 1;
            while (d < n && a[d][d] == 0) ++d;
            if (d < n) {
                std::swap(a[k], a[d]);
                for (std::size_t i = k; i < n; ++i) std::swap(a[i][k], a[i][d]);
            } else {
                std::size_t j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) continue; // zero row/column: contributes nothing
                // Add row/column j to row/column k: diagonal becomes 2 a_kj.
                for (std::size_t c = k; c < n; ++c) a[k][c] += a[j][c];
                for (std::size_t r = k; r < n; ++r) a[r][k] += a[r][j];
            }
        }
        Rat pivot = a[k][k];
        if (pivot > 0) ++positives;
        else ++negatives;
        // Row operations alone produce the symmetric Schur complement in the
        // trailing block; the matching column operation only clears row k.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat factor = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    }
    return positives - negatives;
}

} // namespace kf
