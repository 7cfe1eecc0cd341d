#include "kf/upoly.hpp"

namespace kf {

UPoly UPoly::monomial(unsigned power) {
    Int b = 0;
    boost::multiprecision::bit_set(b, power);
    return UPoly(b);
}

bool UPoly::is_monomial() const {
    return !is_zero() && (bits_ & (bits_ - 1)) == 0;
}

int UPoly::degree() const {
    if (is_zero()) return -1;
    return static_cast<int>(boost::multiprecision::msb(bits_));
}

int UPoly::valuation() const {
    if (is_zero()) return -1;
    return static_cast<int>(boost::multiprecision::lsb(bits_));
}

bool UPoly::coefficient(unsigned power) const {
    return boost::multiprecision::bit_test(bits_, power);
}

UPoly UPoly::operator*(const UPoly& other) const {
    if (is_zero() || other.is_zero()) return zero();
    Int acc = 0;
    Int a = bits_;
    while (a != 0) {
        unsigned k = boost::multiprecision::lsb(a);
        boost::multiprecision::bit_unset(a, k);
        acc ^= other.bits_ << k;
    }
    return UPoly(acc);
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero())
        throw Error::computation("polynomial division by zero");
    Int q = 0;
    Int r = bits_;
    const int db = divisor.degree();
    while (r != 0) {
        int dr = static_cast<int>(boost::multiprecision::msb(r));
        if (dr < db) break;
        unsigned shift = static_cast<unsigned>(dr - db);
        boost::multiprecision::bit_set(q, shift);
        r ^= divisor.bits_ << shift;
    }
    return {UPoly(q), UPoly(r)};
}

bool UPoly::divisible_by(const UPoly& divisor) const {
    if (is_zero()) return true;
    if (divisor.is_zero()) return false;
    return divmod(divisor).second.is_zero();
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (!coefficient(static_cast<unsigned>(k))) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) out += "1";
        else if (k == 1) out += "U";
        else out += "U^" + std::to_string(k);
    }
    return out;
}

UPolyMatrix UPolyMatrix::identity(std::size_t n) {
    UPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UPoly::one();
    return m;
}

UPolyMatrix operator*(const UPolyMatrix& a, const UPolyMatrix& b) {
    if (a.cols() != b.rows())
        throw Error::computation("UPolyMatrix product dimension mismatch");
    UPolyMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const UPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    return out;
}

UPolyMatrix SmithResult::reassemble(std::size_t rows, std::size_t cols) const {
    UPolyMatrix d(rows, cols);
    for (std::size_t t = 0; t < diagonal.size(); ++t) d.at(t, t) = diagonal[t];
    return p * d * q;
}

namespace {

// Elementary-operation bookkeeping for a = p · work · q.  Over F2,
// subtraction is addition, so every elementary matrix is self-inverse up to
// the same added term and the updates below stay exact.
struct SmithState {
    UPolyMatrix work, p, p_inv, q, q_inv;

    explicit SmithState(const UPolyMatrix& a)
        : work(a),
          p(UPolyMatrix::identity(a.rows())),
          p_inv(UPolyMatrix::identity(a.rows())),
          q(UPolyMatrix::identity(a.cols())),
          q_inv(UPolyMatrix::identity(a.cols())) {}

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work.at(r1, j), work.at(r2, j));
        for (std::size_t i = 0; i < p.rows(); ++i) std::swap(p.at(i, r1), p.at(i, r2));
        for (std::size_t j = 0; j < p_inv.cols(); ++j) std::swap(p_inv.at(r1, j), p_inv.at(r2, j));
    }

    void swap_cols(std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < work.rows(); ++i) std::swap(work.at(i, c1), work.at(i, c2));
        for (std::size_t j = 0; j < q.cols(); ++j) std::swap(q.at(c1, j), q.at(c2, j));
        for (std::size_t i = 0; i < q_inv.rows(); ++i) std::swap(q_inv.at(i, c1), q_inv.at(i, c2));
    }

    // work: row_dst += c * row_src
    void add_row(std::size_t dst, std::size_t src, const UPoly& c) {
        if (c.is_zero()) return;
        for (std::size_t j = 0; j < work.cols(); ++j)
            work.at(dst, j) += c * work.at(src, j);
        for (std::size_t i = 0; i < p.rows(); ++i)
            p.at(i, src) += c * p.at(i, dst);
        for (std::size_t j = 0; j < p_inv.cols(); ++j)
            p_inv.at(dst, j) += c * p_inv.at(src, j);
    }

    // work: col_dst += c * col_src
    void add_col(std::size_t dst, std::size_t src, const UPoly& c) {
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < work.rows(); ++i)
            work.at(i, dst) += c * work.at(i, src);
        for (std::size_t j = 0; j < q.cols(); ++j)
            q.at(src, j) += c * q.at(dst, j);
        for (std::size_t i = 0; i < q_inv.rows(); ++i)
            q_inv.at(i, dst) += c * q_inv.at(i, src);
    }
};

} // namespace

SmithResult u_smith_reduce(const UPolyMatrix& a) {
    SmithState s(a);
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = rows < cols ? rows : cols;

    std::size_t t = 0;
    for (; t < steps; ++t) {
        // Locate a minimal-degree nonzero entry in the trailing block.
        bool found = false;
        std::size_t bi = t, bj = t;
        int best_deg = -1;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const UPoly& e = s.work.at(i, j);
                if (e.is_zero()) continue;
                if (!found || e.degree() < best_deg) {
                    found = true;
                    bi = i;
                    bj = j;
                    best_deg = e.degree();
                }
            }
        if (!found) break;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);

        for (;;) {
            // Reduce column t by the pivot; a nonzero remainder strictly
            // drops the minimal degree, so this loop terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.work.at(i, t).is_zero()) continue;
                auto [quot, rem] = s.work.at(i, t).divmod(s.work.at(t, t));
                s.add_row(i, t, quot);
                if (!rem.is_zero()) {
                    s.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.work.at(t, j).is_zero()) continue;
                auto [quot, rem] = s.work.at(t, j).divmod(s.work.at(t, t));
                s.add_col(j, t, quot);
                if (!rem.is_zero()) {
                    s.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Enforce the divisibility chain: drag a non-divisible entry
            // into row t and keep reducing.
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < rows && !fixed_up; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed_up; ++j) {
                    if (s.work.at(i, j).divisible_by(s.work.at(t, t))) continue;
                    s.add_row(t, i, UPoly::one());
                    fixed_up = true;
                }
            if (!fixed_up) break;
        }
    }

    SmithResult out;
    out.p = s.p;
    out.p_inv = s.p_inv;
    out.q = s.q;
    out.q_inv = s.q_inv;
    out.diagonal.resize(steps);
    for (std::size_t k = 0; k < steps; ++k) out.diagonal[k] = s.work.at(k, k);
    out.rank = t;
    return out;
}

} // namespace kf
