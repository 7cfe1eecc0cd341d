#ifndef KF_UPOLY_HPP
#define KF_UPOLY_HPP

// Polynomials in one variable U over the two-element field, and Smith-type
// diagonalization of matrices over that (principal ideal) ring.  These are
// the coefficient objects of minus-flavored chain complexes, whose
// differentials carry U-power weights.

#include "kf/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kf {

// Coefficient bitmask: bit k holds the coefficient of U^k.
class UPoly {
public:
    UPoly() : bits_(0) {}
    explicit UPoly(const Int& bits) : bits_(bits) {}

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return monomial(0); }
    static UPoly monomial(unsigned power);

    bool is_zero() const { return bits_ == 0; }
    bool is_monomial() const;
    // Degree of the highest term; -1 for the zero polynomial.
    int degree() const;
    // Degree of the lowest term (U-valuation); -1 for the zero polynomial.
    int valuation() const;

    bool coefficient(unsigned power) const;

    UPoly operator+(const UPoly& other) const { return UPoly(bits_ ^ other.bits_); }
    UPoly& operator+=(const UPoly& other) { bits_ ^= other.bits_; return *this; }
    UPoly operator*(const UPoly& other) const;

    // Euclidean division: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).  Throws on division by zero.
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    bool divisible_by(const UPoly& divisor) const;

    bool operator==(const UPoly& other) const = default;

    std::string str() const; // e.g. "U^3 + U + 1", "0"

private:
    Int bits_;
};

class UPolyMatrix {
public:
    UPolyMatrix() : rows_(0), cols_(0) {}
    UPolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static UPolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    UPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const UPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const UPolyMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<UPoly> entries_;
};

UPolyMatrix operator*(const UPolyMatrix& a, const UPolyMatrix& b);

// Diagonalization a = p · diag · q over F2[U] with p, q invertible
// (accumulated from elementary operations; explicit inverses included).
// Diagonal entries satisfy the divisibility chain d0 | d1 | ... ; on the
// graded monomial matrices produced by chain complexes they come out as
// powers of U.
struct SmithResult {
    std::vector<UPoly> diagonal; // length min(rows, cols)
    UPolyMatrix p, p_inv;        // rows x rows
    UPolyMatrix q, q_inv;        // cols x cols
    std::size_t rank = 0;        // number of nonzero diagonal entries

    UPolyMatrix reassemble(std::size_t rows, std::size_t cols) const;
};

SmithResult u_smith_reduce(const UPolyMatrix& a);

} // namespace kf

#endif // KF_UPOLY_HPP
