#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkh/group_ring.hpp"
#include "qkh/int_matrix.hpp"

namespace qkh {

/// Labeled basis element of a bigraded free Z[G]-module.
struct BasisElement {
    std::string label;
    int qdeg = 0;
    int adeg = 0;
    int hdeg = 0;

    bool operator==(const BasisElement& o) const {
        return label == o.label && qdeg == o.qdeg && adeg == o.adeg && hdeg == o.hdeg;
    }
};

/// Sparse matrix over Z[G].  Entries indexed (row, col); no stored zeros.
class GRMatrix {
public:
    GRMatrix() : rows_(0), cols_(0) {}
    GRMatrix(CyclicGroup g, std::size_t rows, std::size_t cols)
        : group_(g), rows_(rows), cols_(cols) {}

    static GRMatrix identity(CyclicGroup g, std::size_t n) {
        GRMatrix m(g, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, GroupRingElem::constant(g, 1));
        return m;
    }

    const CyclicGroup& group() const { return group_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, const GroupRingElem& v) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("GRMatrix::set");
        if (v.is_zero())
            entries_.erase({i, j});
        else
            entries_[{i, j}] = v;
    }

    void add(std::size_t i, std::size_t j, const GroupRingElem& v) {
        if (v.is_zero()) return;
        auto it = entries_.find({i, j});
        if (it == entries_.end()) {
            set(i, j, v);
        } else {
            GroupRingElem s = it->second + v;
            if (s.is_zero())
                entries_.erase(it);
            else
                it->second = s;
        }
    }

    GroupRingElem get(std::size_t i, std::size_t j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? GroupRingElem::zero(group_) : it->second;
    }

    const std::map<std::pair<std::size_t, std::size_t>, GroupRingElem>& entries() const {
        return entries_;
    }

    bool is_zero() const { return entries_.empty(); }

    friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("GRMatrix: dim mismatch");
        if (a.group_ != b.group_) throw std::invalid_argument("GRMatrix: group mismatch");
        GRMatrix r(a.group_, a.rows_, b.cols_);
        // group b's entries by row for the sparse product
        std::vector<std::vector<std::pair<std::size_t, const GroupRingElem*>>> brows(b.rows_);
        for (const auto& [ij, v] : b.entries_) brows[ij.first].push_back({ij.second, &v});
        for (const auto& [ij, v] : a.entries_) {
            auto [i, k] = ij;
            for (const auto& [j, w] : brows[k]) r.add(i, j, v * (*w));
        }
        return r;
    }

    friend GRMatrix operator+(const GRMatrix& a, const GRMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("GRMatrix: dim mismatch");
        GRMatrix r = a;
        for (const auto& [ij, v] : b.entries_) r.add(ij.first, ij.second, v);
        return r;
    }

    friend GRMatrix operator-(const GRMatrix& a, const GRMatrix& b) { return a + b.scaled(-1); }

    GRMatrix scaled(std::int64_t c) const {
        GRMatrix r(group_, rows_, cols_);
        if (c == 0) return r;
        for (const auto& [ij, v] : entries_) r.set(ij.first, ij.second, v.scaled(c));
        return r;
    }

    GRMatrix scaled(const GroupRingElem& c) const {
        GRMatrix r(group_, rows_, cols_);
        for (const auto& [ij, v] : entries_) r.set(ij.first, ij.second, v * c);
        return r;
    }

    bool operator==(const GRMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const GRMatrix& o) const { return !(*this == o); }

    /// q |-> 1 entrywise; result over the trivial group Z[Z/1] = Z.
    GRMatrix specialize_q1() const {
        CyclicGroup triv(1);
        GRMatrix r(triv, rows_, cols_);
        for (const auto& [ij, v] : entries_)
            r.add(ij.first, ij.second, GroupRingElem::constant(triv, v.specialize_q1()));
        return r;
    }

    /// Restriction of scalars for finite G of order r: every basis element
    /// expands to r integer generators e (x) q^0..q^{r-1} and q acts as the
    /// cyclic shift.  Entry q^k contributes the k-step shift permutation.
    IntMat restrict_scalars() const {
        if (!group_.is_finite())
            throw std::domain_error("restrict_scalars: infinite group");
        const std::size_t r = static_cast<std::size_t>(group_.order);
        IntMat m(rows_ * r, cols_ * r);
        for (const auto& [ij, v] : entries_) {
            auto [i, j] = ij;
            for (const auto& [e, c] : v.terms())
                for (std::size_t t = 0; t < r; ++t)
                    m(i * r + (t + static_cast<std::size_t>(e)) % r, j * r + t) += c;
        }
        return m;
    }

    /// Apply to a coordinate vector over Z[G].
    std::vector<GroupRingElem> apply(const std::vector<GroupRingElem>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("GRMatrix::apply: size mismatch");
        std::vector<GroupRingElem> y(rows_, GroupRingElem::zero(group_));
        for (const auto& [ij, v] : entries_) {
            if (x[ij.second].is_zero()) continue;
            y[ij.first] += v * x[ij.second];
        }
        return y;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [ij, v] : entries_)
            s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") = " +
                 v.to_string() + "\n";
        return s;
    }

private:
    CyclicGroup group_;
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, GroupRingElem> entries_;
};

}  // namespace qkh
