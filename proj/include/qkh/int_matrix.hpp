#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qkh {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers.  Row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMat: dim mismatch");
        IntMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& v = a(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) r(i, j) += v * b(k, j);
            }
        return r;
    }

    friend IntMat operator-(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMat: dim mismatch");
        IntMat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

/// Result of a Smith normal form computation: U*M*V = D with U, V unimodular
/// and D diagonal with d_1 | d_2 | ... (nonnegative diagonal).
/// Uinv and Vinv are the inverses of U and V.
struct SmithForm {
    IntMat D, U, V, Uinv, Vinv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
    std::vector<BigInt> diag;
};

namespace detail {

inline void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[a] += c*row[b]
inline void add_row(IntMat& m, std::size_t a, std::size_t b, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += c * m(b, j);
}
inline void add_col(IntMat& m, std::size_t a, std::size_t b, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += c * m(i, b);
}
inline void negate_row(IntMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}
inline void negate_col(IntMat& m, std::size_t a) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

}  // namespace detail

/// Smith normal form over Z with transform tracking.  Pivoting picks the
/// smallest nonzero entry of the remaining block to bound growth.
inline SmithForm smith_normal_form(const IntMat& M) {
    using namespace detail;
    SmithForm s;
    s.D = M;
    s.U = IntMat::identity(M.rows());
    s.V = IntMat::identity(M.cols());
    s.Uinv = IntMat::identity(M.rows());
    s.Vinv = IntMat::identity(M.cols());
    IntMat& D = s.D;
    IntMat& U = s.U;
    IntMat& V = s.V;
    const std::size_t R = M.rows(), C = M.cols();
    std::size_t t = 0;

    while (t < R && t < C) {
        // locate smallest-magnitude nonzero entry in the block [t..R)x[t..C)
        std::size_t pi = t, pj = t;
        BigInt best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (D(i, j) == 0) continue;
                BigInt a = abs(D(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // block is zero
        if (pi != t) {
            swap_rows(D, t, pi);
            swap_rows(U, t, pi);
            swap_cols(s.Uinv, t, pi);
        }
        if (pj != t) {
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            swap_rows(s.Vinv, t, pj);
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
            negate_col(s.Uinv, t);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (D(i, t) == 0) continue;
            BigInt q = D(i, t) / D(t, t);
            add_row(D, i, t, -q);
            add_row(U, i, t, -q);
            add_col(s.Uinv, t, i, q);
            if (D(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (D(t, j) == 0) continue;
            BigInt q = D(t, j) / D(t, t);
            add_col(D, j, t, -q);
            add_col(V, j, t, -q);
            add_row(s.Vinv, t, j, q);
            if (D(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick pivot, remainders are smaller

        // ensure divisibility: pivot must divide the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C && divides; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    add_row(D, t, i, 1);
                    add_row(U, t, i, 1);
                    add_col(s.Uinv, i, t, -1);
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }

    for (std::size_t i = 0; i < std::min(R, C); ++i) {
        if (D(i, i) != 0) {
            s.diag.push_back(D(i, i));
            ++s.rank;
        }
    }
    return s;
}

/// Solve M x = b over Z.  Returns false if no integral solution exists.
/// Uses a precomputed SmithForm of M.
inline bool solve_with_snf(const SmithForm& s, const std::vector<BigInt>& b,
                           std::vector<BigInt>& x) {
    const std::size_t R = s.U.cols(), C = s.V.rows();
    if (b.size() != R) throw std::invalid_argument("solve_with_snf: size mismatch");
    // U M V = D => M = U^{-1} D V^{-1}; solve D y = U b, x = V y.
    std::vector<BigInt> ub(R, 0);
    for (std::size_t i = 0; i < R; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < R; ++j)
            if (s.U(i, j) != 0 && b[j] != 0) acc += s.U(i, j) * b[j];
        ub[i] = acc;
    }
    std::vector<BigInt> y(C, 0);
    for (std::size_t i = 0; i < R; ++i) {
        BigInt d = (i < C && i < s.D.rows()) ? s.D(i, i) : BigInt(0);
        if (d == 0) {
            if (ub[i] != 0) return false;
        } else {
            if (ub[i] % d != 0) return false;
            y[i] = ub[i] / d;
        }
    }
    x.assign(C, 0);
    for (std::size_t i = 0; i < C; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < C; ++j)
            if (s.V(i, j) != 0 && y[j] != 0) acc += s.V(i, j) * y[j];
        x[i] = acc;
    }
    return true;
}

/// Basis of the integer kernel of M (columns of the result span ker over Z).
inline std::vector<std::vector<BigInt>> kernel_basis(const SmithForm& s) {
    const std::size_t C = s.V.rows();
    std::vector<std::vector<BigInt>> out;
    for (std::size_t j = s.rank; j < C; ++j) {
        std::vector<BigInt> col(C);
        for (std::size_t i = 0; i < C; ++i) col[i] = s.V(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace qkh
