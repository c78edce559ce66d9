#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkh {

/// Cyclic group G = <q>.  order == 0 encodes the infinite group Z;
/// otherwise order = r >= 1 and exponents are normalized into [0, r).
struct CyclicGroup {
    std::int64_t order = 0;

    CyclicGroup() = default;
    explicit CyclicGroup(std::int64_t r) : order(r) {
        if (r < 0) throw std::invalid_argument("CyclicGroup: order must be >= 0");
    }
    static CyclicGroup infinite() { return CyclicGroup(0); }

    bool is_finite() const { return order != 0; }

    std::int64_t normalize(std::int64_t e) const {
        if (order == 0) return e;
        std::int64_t m = e % order;
        if (m < 0) m += order;
        return m;
    }

    bool operator==(const CyclicGroup& o) const { return order == o.order; }
    bool operator!=(const CyclicGroup& o) const { return order != o.order; }

    std::string to_string() const {
        return order == 0 ? std::string("Z") : ("Z/" + std::to_string(order));
    }
};

/// Element of the group ring Z[G].  Terms are kept sorted by exponent,
/// exponents normalized for finite G, and zero coefficients dropped.
class GroupRingElem {
public:
    GroupRingElem() = default;
    explicit GroupRingElem(CyclicGroup g) : group_(g) {}

    static GroupRingElem zero(CyclicGroup g) { return GroupRingElem(g); }

    static GroupRingElem constant(CyclicGroup g, std::int64_t c) {
        GroupRingElem e(g);
        if (c != 0) e.terms_.push_back({0, c});
        return e;
    }

    /// c * q^exp
    static GroupRingElem monomial(CyclicGroup g, std::int64_t exp, std::int64_t c = 1) {
        GroupRingElem e(g);
        if (c != 0) e.terms_.push_back({g.normalize(exp), c});
        return e;
    }

    const CyclicGroup& group() const { return group_; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Coefficient of q^exp (after normalization).
    std::int64_t coeff(std::int64_t exp) const {
        std::int64_t e = group_.normalize(exp);
        for (const auto& [x, c] : terms_)
            if (x == e) return c;
        return 0;
    }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
        a.check_group(b);
        GroupRingElem r(a.group_);
        std::map<std::int64_t, std::int64_t> acc;
        for (const auto& [e, c] : a.terms_) acc[e] += c;
        for (const auto& [e, c] : b.terms_) acc[e] += c;
        for (const auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, c});
        return r;
    }

    friend GroupRingElem operator-(const GroupRingElem& a) {
        GroupRingElem r(a.group_);
        r.terms_ = a.terms_;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
        return a + (-b);
    }

    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        a.check_group(b);
        GroupRingElem r(a.group_);
        std::map<std::int64_t, std::int64_t> acc;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_)
                acc[a.group_.normalize(e1 + e2)] += c1 * c2;
        for (const auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, c});
        return r;
    }

    GroupRingElem& operator+=(const GroupRingElem& b) { return *this = *this + b; }
    GroupRingElem& operator*=(const GroupRingElem& b) { return *this = *this * b; }

    GroupRingElem scaled(std::int64_t c) const {
        GroupRingElem r(group_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    /// Multiplication by q^exp.
    GroupRingElem shifted(std::int64_t exp) const {
        GroupRingElem r(group_);
        for (const auto& [e, c] : terms_) r.terms_.push_back({group_.normalize(e + exp), c});
        std::sort(r.terms_.begin(), r.terms_.end());
        return r;
    }

    /// Ring map q |-> 1 (sum of coefficients).
    std::int64_t specialize_q1() const {
        std::int64_t s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const GroupRingElem& o) const {
        return group_ == o.group_ && terms_ == o.terms_;
    }
    bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += c >= 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            std::int64_t ac = c >= 0 ? c : -c;
            if (ac != 1 || e == 0) s += std::to_string(ac);
            if (e != 0) {
                if (ac != 1) s += "*";
                s += "q";
                if (e != 1) s += "^" + std::to_string(e);
            }
            first = false;
        }
        return s;
    }

private:
    void check_group(const GroupRingElem& o) const {
        if (group_ != o.group_)
            throw std::invalid_argument("GroupRingElem: group mismatch");
    }

    CyclicGroup group_;
    // sorted by exponent, no zero coefficients
    std::vector<std::pair<std::int64_t, std::int64_t>> terms_;
};

inline GroupRingElem gr_add(const GroupRingElem& a, const GroupRingElem& b) { return a + b; }
inline GroupRingElem gr_mul(const GroupRingElem& a, const GroupRingElem& b) { return a * b; }
inline GroupRingElem gr_neg(const GroupRingElem& a) { return -a; }

}  // namespace qkh
