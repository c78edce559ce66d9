#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qkh/gr_matrix.hpp"

namespace qkh {

/// Chain complex of bigraded free Z[G]-modules with designated bases.
/// Differentials decrease the homological grading: d_i : C_i -> C_{i-1}.
struct GradedComplexZG {
    CyclicGroup group;
    std::map<int, std::vector<BasisElement>> chain_groups;  // hdeg -> ordered basis
    std::map<int, GRMatrix> diffs;                          // hdeg i -> d_i

    std::size_t rank(int i) const {
        auto it = chain_groups.find(i);
        return it == chain_groups.end() ? 0 : it->second.size();
    }

    const GRMatrix* diff(int i) const {
        auto it = diffs.find(i);
        return it == diffs.end() ? nullptr : &it->second;
    }

    /// d o d = 0 and degree preservation, as exact identities.
    /// Returns an error description on failure.
    std::optional<std::string> validate() const {
        for (const auto& [i, d] : diffs) {
            if (d.rows() != rank(i - 1) || d.cols() != rank(i))
                return "differential d_" + std::to_string(i) + " has wrong shape";
            const auto& src = chain_groups.at(i);
            const auto& dst = chain_groups.at(i - 1);
            for (const auto& [ij, v] : d.entries()) {
                const BasisElement& r = dst[ij.first];
                const BasisElement& c = src[ij.second];
                if (r.qdeg != c.qdeg || r.adeg != c.adeg)
                    return "differential d_" + std::to_string(i) + " breaks (qdeg,adeg) at " +
                           c.label + " -> " + r.label;
            }
            auto lower = diffs.find(i - 1);
            if (lower != diffs.end()) {
                GRMatrix sq = lower->second * d;
                if (!sq.is_zero()) return "d o d != 0 entering degree " + std::to_string(i - 2);
            }
        }
        return std::nullopt;
    }

    /// q |-> 1; result lives over the trivial group (Z).
    GradedComplexZG specialize_q1() const {
        GradedComplexZG c;
        c.group = CyclicGroup(1);
        c.chain_groups = chain_groups;
        for (const auto& [i, d] : diffs) c.diffs.emplace(i, d.specialize_q1());
        return c;
    }
};

/// A degree-0 chain map between complexes, one matrix per hdeg.
struct ChainMapZG {
    const GradedComplexZG* source = nullptr;
    const GradedComplexZG* target = nullptr;
    std::map<int, GRMatrix> mats;  // hdeg -> matrix C_i -> D_i

    GRMatrix matrix(int i) const {
        auto it = mats.find(i);
        if (it != mats.end()) return it->second;
        return GRMatrix(source->group, target->rank(i), source->rank(i));
    }
};

/// Mapping cone of f : C -> D.  cone(f)_h = C_{h-1} (+) D_h with
/// differential (c, x) |-> (-d_C c, f(c) + d_D x).
inline GradedComplexZG mapping_cone(const ChainMapZG& f) {
    const GradedComplexZG& C = *f.source;
    const GradedComplexZG& D = *f.target;
    GradedComplexZG cone;
    cone.group = C.group;

    std::set<int> degs;
    for (const auto& [i, b] : C.chain_groups)
        if (!b.empty()) degs.insert(i + 1);
    for (const auto& [i, b] : D.chain_groups)
        if (!b.empty()) degs.insert(i);

    for (int h : degs) {
        std::vector<BasisElement> basis;
        auto cit = C.chain_groups.find(h - 1);
        if (cit != C.chain_groups.end())
            for (const auto& b : cit->second) {
                BasisElement e = b;
                e.label = "C:" + e.label;
                e.hdeg = h;
                basis.push_back(e);
            }
        auto dit = D.chain_groups.find(h);
        if (dit != D.chain_groups.end())
            for (const auto& b : dit->second) {
                BasisElement e = b;
                e.label = "D:" + e.label;
                basis.push_back(e);
            }
        cone.chain_groups[h] = std::move(basis);
    }

    for (int h : degs) {
        std::size_t cs = C.rank(h - 1), ds = D.rank(h);
        std::size_t cs1 = C.rank(h - 2), ds1 = D.rank(h - 1);
        GRMatrix d(C.group, cs1 + ds1, cs + ds);
        if (const GRMatrix* dc = C.diff(h - 1))
            for (const auto& [ij, v] : dc->entries()) d.add(ij.first, ij.second, v.scaled(-1));
        if (const GRMatrix* dd = D.diff(h))
            for (const auto& [ij, v] : dd->entries()) d.add(cs1 + ij.first, cs + ij.second, v);
        auto fit = f.mats.find(h - 1);
        if (fit != f.mats.end())
            for (const auto& [ij, v] : fit->second.entries()) d.add(cs1 + ij.first, ij.second, v);
        cone.diffs.emplace(h, std::move(d));
    }
    return cone;
}

/// Homology of one (hdeg, qdeg, adeg) sector.
struct HomologySector {
    int hdeg = 0, qdeg = 0, adeg = 0;
    std::size_t free_rank = 0;           // rank over Z after restriction of scalars
    std::vector<BigInt> torsion;         // invariant factors > 1, divisibility chain
    std::optional<IntMat> q_action;      // action of q on the chosen generators
};

struct HomologySummary {
    std::vector<HomologySector> sectors;

    bool is_zero() const {
        for (const auto& s : sectors)
            if (s.free_rank != 0 || !s.torsion.empty()) return false;
        return true;
    }

    std::size_t total_free_rank() const {
        std::size_t n = 0;
        for (const auto& s : sectors) n += s.free_rank;
        return n;
    }

    const HomologySector* sector(int q, int a) const {
        for (const auto& s : sectors)
            if (s.qdeg == q && s.adeg == a) return &s;
        return nullptr;
    }
};

namespace detail {

// Solve K X = B columnwise over Z; K given by its SmithForm. Throws if
// some column has no integral solution.
inline IntMat solve_matrix(const SmithForm& K, const IntMat& B) {
    IntMat X(K.V.rows(), B.cols());
    std::vector<BigInt> b(B.rows()), x;
    for (std::size_t j = 0; j < B.cols(); ++j) {
        for (std::size_t i = 0; i < B.rows(); ++i) b[i] = B(i, j);
        if (!solve_with_snf(K, b, x))
            throw std::logic_error("homology: image does not lie in kernel lattice");
        for (std::size_t i = 0; i < x.size(); ++i) X(i, j) = x[i];
    }
    return X;
}

}  // namespace detail

/// Homology of C at homological degree i, split by (qdeg, adeg).
/// Requires finite G (restriction of scalars); the q-action on the chosen
/// generators is recorded when with_q_action is set.
inline HomologySummary homology(const GradedComplexZG& C, int i, bool with_q_action = false) {
    if (!C.group.is_finite())
        throw std::domain_error("homology: unsupported for infinite G");
    const std::size_t r = static_cast<std::size_t>(C.group.order);

    HomologySummary out;
    auto git = C.chain_groups.find(i);
    if (git == C.chain_groups.end() || git->second.empty()) return out;
    const auto& basis = git->second;

    // sector split: the differentials preserve (qdeg, adeg)
    std::set<std::pair<int, int>> sectors;
    for (const auto& b : basis) sectors.insert({b.qdeg, b.adeg});

    auto sector_indices = [&](int deg, int q, int a) {
        std::vector<std::size_t> idx;
        auto it = C.chain_groups.find(deg);
        if (it == C.chain_groups.end()) return idx;
        for (std::size_t t = 0; t < it->second.size(); ++t)
            if (it->second[t].qdeg == q && it->second[t].adeg == a) idx.push_back(t);
        return idx;
    };

    for (auto [q, a] : sectors) {
        auto mid = sector_indices(i, q, a);
        auto low = sector_indices(i - 1, q, a);
        auto high = sector_indices(i + 1, q, a);

        // integer matrices of the restricted differentials on this sector
        auto build = [&](const GRMatrix* d, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
            IntMat m(rows.size() * r, cols.size() * r);
            if (!d) return m;
            std::map<std::size_t, std::size_t> rpos, cpos;
            for (std::size_t t = 0; t < rows.size(); ++t) rpos[rows[t]] = t;
            for (std::size_t t = 0; t < cols.size(); ++t) cpos[cols[t]] = t;
            for (const auto& [ij, v] : d->entries()) {
                auto ri = rpos.find(ij.first);
                auto ci = cpos.find(ij.second);
                if (ri == rpos.end() || ci == cpos.end()) continue;
                for (const auto& [e, c] : v.terms())
                    for (std::size_t t = 0; t < r; ++t)
                        m(ri->second * r + (t + static_cast<std::size_t>(e)) % r,
                          ci->second * r + t) += c;
            }
            return m;
        };

        IntMat A = build(C.diff(i), low, mid);       // d_i on the sector
        IntMat B = build(C.diff(i + 1), mid, high);  // d_{i+1} on the sector

        SmithForm sa = smith_normal_form(A);
        auto ker = kernel_basis(sa);
        const std::size_t kdim = ker.size();

        HomologySector sec;
        sec.hdeg = i;
        sec.qdeg = q;
        sec.adeg = a;

        if (kdim == 0) {
            if (sec.free_rank || !sec.torsion.empty()) out.sectors.push_back(sec);
            continue;
        }

        IntMat K(mid.size() * r, kdim);
        for (std::size_t j = 0; j < kdim; ++j)
            for (std::size_t t = 0; t < ker[j].size(); ++t) K(t, j) = ker[j][t];
        SmithForm sk = smith_normal_form(K);

        IntMat X = detail::solve_matrix(sk, B);
        SmithForm sx = smith_normal_form(X);

        sec.free_rank = kdim - sx.rank;
        for (const auto& d : sx.diag)
            if (d > 1) sec.torsion.push_back(d);

        if (with_q_action && C.group.order >= 1) {
            // generators of the homology sector: g_j = K * (Uinv_X e_j) for the
            // coordinates j that survive (torsion > 1 or free)
            std::vector<std::size_t> keep;
            for (std::size_t j = 0; j < kdim; ++j) {
                BigInt d = (j < sx.rank) ? sx.diag[j] : BigInt(0);
                if (d == 0 || d > 1) keep.push_back(j);
            }
            IntMat act(keep.size(), keep.size());
            for (std::size_t jj = 0; jj < keep.size(); ++jj) {
                std::size_t j = keep[jj];
                // chain representative of generator j
                std::vector<BigInt> g(mid.size() * r, 0);
                for (std::size_t t = 0; t < mid.size() * r; ++t) {
                    BigInt acc = 0;
                    for (std::size_t u = 0; u < kdim; ++u)
                        if (sx.Uinv(u, j) != 0 && K(t, u) != 0) acc += K(t, u) * sx.Uinv(u, j);
                    g[t] = acc;
                }
                // apply q: cyclic shift within each block of size r
                std::vector<BigInt> qg(g.size(), 0);
                for (std::size_t b = 0; b < mid.size(); ++b)
                    for (std::size_t t = 0; t < r; ++t) qg[b * r + (t + 1) % r] = g[b * r + t];
                // back to kernel coordinates, then to the SNF basis of X
                std::vector<BigInt> c;
                if (!solve_with_snf(sk, qg, c))
                    throw std::logic_error("homology: q-action leaves kernel lattice");
                for (std::size_t ii = 0; ii < keep.size(); ++ii) {
                    std::size_t u = keep[ii];
                    BigInt acc = 0;
                    for (std::size_t w = 0; w < kdim; ++w)
                        if (sx.U(u, w) != 0 && c[w] != 0) acc += sx.U(u, w) * c[w];
                    BigInt d = (u < sx.rank) ? sx.diag[u] : BigInt(0);
                    if (d > 1) {
                        acc %= d;
                        if (acc < 0) acc += d;
                    }
                    act(ii, jj) = acc;
                }
            }
            sec.q_action = act;
        }

        if (sec.free_rank || !sec.torsion.empty()) out.sectors.push_back(sec);
    }
    return out;
}

}  // namespace qkh
