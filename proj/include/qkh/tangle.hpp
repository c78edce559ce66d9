#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkh {

enum class SliceKind { Cup, Cap, Pos, Neg };

struct Slice {
    SliceKind kind;
    int pos;  // 1-based strand position

    bool operator==(const Slice& o) const { return kind == o.kind && pos == o.pos; }
};

/// Morse-word tangle diagram: n_left strands in, slices applied left to
/// right, n_right strands out.  CUP(i) inserts two strands at position i,
/// CAP(i) joins strands i, i+1, crossings act on strands i, i+1.
struct TangleWord {
    int n_left = 0;
    int n_right = 0;
    std::vector<Slice> slices;

    static TangleWord identity(int n) {
        TangleWord t;
        t.n_left = t.n_right = n;
        return t;
    }

    int crossing_count() const {
        int c = 0;
        for (const auto& s : slices)
            if (s.kind == SliceKind::Pos || s.kind == SliceKind::Neg) ++c;
        return c;
    }

    int positive_count() const {
        int c = 0;
        for (const auto& s : slices)
            if (s.kind == SliceKind::Pos) ++c;
        return c;
    }

    int negative_count() const {
        int c = 0;
        for (const auto& s : slices)
            if (s.kind == SliceKind::Neg) ++c;
        return c;
    }

    bool is_planar() const { return crossing_count() == 0; }

    /// Strand-count consistency.  Returns the failing slice index, or nullopt.
    std::optional<std::size_t> first_invalid_slice() const {
        if (n_left < 0 || n_right < 0) return 0;
        int cur = n_left;
        for (std::size_t i = 0; i < slices.size(); ++i) {
            const Slice& s = slices[i];
            switch (s.kind) {
                case SliceKind::Cup:
                    if (s.pos < 1 || s.pos > cur + 1) return i;
                    cur += 2;
                    break;
                case SliceKind::Cap:
                    if (cur < 2 || s.pos < 1 || s.pos > cur - 1) return i;
                    cur -= 2;
                    break;
                case SliceKind::Pos:
                case SliceKind::Neg:
                    if (cur < 2 || s.pos < 1 || s.pos > cur - 1) return i;
                    break;
            }
        }
        if (cur != n_right) return slices.size();
        return std::nullopt;
    }

    void validate() const {
        auto bad = first_invalid_slice();
        if (bad)
            throw std::invalid_argument("TangleWord: inconsistent strand counts at slice " +
                                        std::to_string(*bad));
    }

    bool operator==(const TangleWord& o) const {
        return n_left == o.n_left && n_right == o.n_right && slices == o.slices;
    }
    bool operator<(const TangleWord& o) const {
        if (n_left != o.n_left) return n_left < o.n_left;
        if (n_right != o.n_right) return n_right < o.n_right;
        if (slices.size() != o.slices.size()) return slices.size() < o.slices.size();
        for (std::size_t i = 0; i < slices.size(); ++i) {
            if (slices[i].kind != o.slices[i].kind) return slices[i].kind < o.slices[i].kind;
            if (slices[i].pos != o.slices[i].pos) return slices[i].pos < o.slices[i].pos;
        }
        return false;
    }

    /// Horizontal composition: this, then t (gluing t to the right).
    TangleWord then(const TangleWord& t) const {
        if (n_right != t.n_left) throw std::invalid_argument("TangleWord::then: boundary mismatch");
        TangleWord r;
        r.n_left = n_left;
        r.n_right = t.n_right;
        r.slices = slices;
        r.slices.insert(r.slices.end(), t.slices.begin(), t.slices.end());
        return r;
    }

    std::string to_string() const {
        std::string s = "(" + std::to_string(n_left) + "," + std::to_string(n_right) + ")[";
        for (std::size_t i = 0; i < slices.size(); ++i) {
            if (i) s += ",";
            switch (slices[i].kind) {
                case SliceKind::Cup: s += "cup"; break;
                case SliceKind::Cap: s += "cap"; break;
                case SliceKind::Pos: s += "pos"; break;
                case SliceKind::Neg: s += "neg"; break;
            }
            s += std::to_string(slices[i].pos);
        }
        return s + "]";
    }
};

/// Vertex of the cube of resolutions.
struct ResolutionVertex {
    std::vector<int> bits;

    int weight() const {
        int w = 0;
        for (int b : bits) w += b;
        return w;
    }
};

/// 0/1 resolution.  For a positive crossing the 0-resolution is the identity
/// smoothing and the 1-resolution is CAP then CUP; a negative crossing is the
/// opposite.
inline TangleWord resolve(const TangleWord& t, const ResolutionVertex& v) {
    if (static_cast<int>(v.bits.size()) != t.crossing_count())
        throw std::invalid_argument("resolve: wrong vertex length");
    TangleWord r;
    r.n_left = t.n_left;
    r.n_right = t.n_right;
    std::size_t ci = 0;
    for (const auto& s : t.slices) {
        if (s.kind == SliceKind::Cup || s.kind == SliceKind::Cap) {
            r.slices.push_back(s);
            continue;
        }
        bool one = v.bits[ci++] == 1;
        bool turnback = (s.kind == SliceKind::Pos) ? one : !one;
        if (turnback) {
            r.slices.push_back({SliceKind::Cap, s.pos});
            r.slices.push_back({SliceKind::Cup, s.pos});
        }
        // identity smoothing contributes no slice
    }
    return r;
}

/// Sign assignment for the cube: edge flipping coordinate j gets
/// (-1)^{# of 1s before j}.
inline int sign_assignment(const ResolutionVertex& v, const ResolutionVertex& w) {
    if (v.bits.size() != w.bits.size()) throw std::invalid_argument("sign_assignment: length");
    int j = -1;
    for (std::size_t i = 0; i < v.bits.size(); ++i) {
        if (v.bits[i] == w.bits[i]) continue;
        if (v.bits[i] != 0 || w.bits[i] != 1 || j >= 0)
            throw std::invalid_argument("sign_assignment: not an edge");
        j = static_cast<int>(i);
    }
    if (j < 0) throw std::invalid_argument("sign_assignment: not an edge");
    int ones = 0;
    for (int i = 0; i < j; ++i) ones += v.bits[i];
    return ones % 2 == 0 ? 1 : -1;
}

/// T with k horizontal strands added above and n-k below; (n,n) -> (2n,2n).
inline TangleWord add_strands(const TangleWord& t, int k) {
    if (t.n_left != t.n_right) throw std::invalid_argument("add_strands: (n,n) word required");
    int n = t.n_left;
    if (k < 0 || k > n) throw std::invalid_argument("add_strands: k out of range");
    TangleWord r;
    r.n_left = r.n_right = 2 * n;
    r.slices = t.slices;
    for (auto& s : r.slices) s.pos += n - k;  // shift above the n-k bottom strands
    return r;
}

// ---------------------------------------------------------------------------
// Crossing-free word tracing at segment granularity.
//
// Each maximal strand segment receives a unique id.  A segment starts at a
// left endpoint or a cup and ends at a right endpoint or a cap.  Crossing
// sites of a resolved word are recorded so saddles can be located.
// ---------------------------------------------------------------------------

/// Endpoint of a traced planar word.
struct WordEnd {
    bool left;   // left boundary?
    int index;   // 1-based strand position on that boundary
    bool operator<(const WordEnd& o) const {
        if (left != o.left) return left;
        return index < o.index;
    }
    bool operator==(const WordEnd& o) const { return left == o.left && index == o.index; }
};

/// Site of a resolved crossing in a crossing-free word: the segment ids on
/// either side.  For an identity smoothing, (a, b) are the two parallel
/// segments (lower, upper).  For a turnback smoothing, (a, b) are the two
/// segments meeting the cap (lower, upper) and (c, d) the two leaving the
/// cup.
struct CrossingSite {
    bool turnback = false;
    int a = -1, b = -1;  // incoming (west) segments at the site, lower then upper
    int c = -1, d = -1;  // outgoing (east) segments (identity: same as a,b)
};

/// Result of tracing a crossing-free word.
struct WordTrace {
    int n_left = 0, n_right = 0;
    int num_segments = 0;
    // connections between segments (cups, caps) as an adjacency list of
    // (segment, segment) joins; each segment has at most one join at each end
    std::vector<std::pair<int, int>> joins;
    std::vector<int> left_seg;   // left boundary position (0-based) -> segment id
    std::vector<int> right_seg;  // likewise for the right boundary
    std::vector<CrossingSite> sites;  // per crossing of the original word
    // geometry: for each segment, the (slice_x, height_y) at which it was
    // created; used only for deterministic ordering decisions
    std::vector<std::pair<int, int>> seg_birth;
};

/// Trace a crossing-free word, assigning segment ids.  If `sites` tracking is
/// requested the word must come from resolve() of a word whose crossings are
/// marked via the parallel `site_slices` positions (slice indices into the
/// ORIGINAL word are not needed; sites are detected as cap/cup pairs injected
/// by resolve or as identity smoothings located by resolved_site_positions).
inline WordTrace trace_word(const TangleWord& w) {
    w.validate();
    if (!w.is_planar()) throw std::invalid_argument("trace_word: word has crossings");
    WordTrace tr;
    tr.n_left = w.n_left;
    tr.n_right = w.n_right;
    std::vector<int> cur;  // current strand segment ids, bottom to top
    for (int i = 0; i < w.n_left; ++i) {
        cur.push_back(tr.num_segments++);
        tr.left_seg.push_back(cur.back());
        tr.seg_birth.push_back({0, i});
    }
    int x = 0;
    for (const auto& s : w.slices) {
        ++x;
        if (s.kind == SliceKind::Cup) {
            int u = tr.num_segments++;
            int v = tr.num_segments++;
            tr.seg_birth.push_back({x, s.pos - 1});
            tr.seg_birth.push_back({x, s.pos});
            tr.joins.push_back({u, v});
            cur.insert(cur.begin() + (s.pos - 1), {u, v});
        } else if (s.kind == SliceKind::Cap) {
            int u = cur[s.pos - 1];
            int v = cur[s.pos];
            tr.joins.push_back({u, v});
            cur.erase(cur.begin() + (s.pos - 1), cur.begin() + (s.pos + 1));
        } else {
            throw std::logic_error("trace_word: unexpected crossing");
        }
    }
    tr.right_seg = cur;
    return tr;
}

/// Resolve a word at vertex v and trace it, recording the crossing sites.
inline std::pair<WordTrace, TangleWord> trace_resolution(const TangleWord& t,
                                                         const ResolutionVertex& v) {
    if (static_cast<int>(v.bits.size()) != t.crossing_count())
        throw std::invalid_argument("trace_resolution: wrong vertex length");
    TangleWord resolved;
    resolved.n_left = t.n_left;
    resolved.n_right = t.n_right;

    WordTrace tr;
    tr.n_left = t.n_left;
    tr.n_right = t.n_right;
    std::vector<int> cur;
    for (int i = 0; i < t.n_left; ++i) {
        cur.push_back(tr.num_segments++);
        tr.left_seg.push_back(cur.back());
        tr.seg_birth.push_back({0, i});
    }
    std::size_t ci = 0;
    int x = 0;
    for (const auto& s : t.slices) {
        ++x;
        if (s.kind == SliceKind::Cup) {
            int u = tr.num_segments++;
            int v2 = tr.num_segments++;
            tr.seg_birth.push_back({x, s.pos - 1});
            tr.seg_birth.push_back({x, s.pos});
            tr.joins.push_back({u, v2});
            cur.insert(cur.begin() + (s.pos - 1), {u, v2});
            resolved.slices.push_back(s);
        } else if (s.kind == SliceKind::Cap) {
            tr.joins.push_back({cur[s.pos - 1], cur[s.pos]});
            cur.erase(cur.begin() + (s.pos - 1), cur.begin() + (s.pos + 1));
            resolved.slices.push_back(s);
        } else {
            bool one = v.bits[ci++] == 1;
            bool turnback = (s.kind == SliceKind::Pos) ? one : !one;
            CrossingSite site;
            if (!turnback) {
                site.turnback = false;
                site.a = cur[s.pos - 1];
                site.b = cur[s.pos];
                site.c = site.a;
                site.d = site.b;
            } else {
                site.turnback = true;
                site.a = cur[s.pos - 1];
                site.b = cur[s.pos];
                tr.joins.push_back({site.a, site.b});
                int u = tr.num_segments++;
                int v2 = tr.num_segments++;
                tr.seg_birth.push_back({x, s.pos - 1});
                tr.seg_birth.push_back({x, s.pos});
                tr.joins.push_back({u, v2});
                cur[s.pos - 1] = u;
                cur[s.pos] = v2;
                resolved.slices.push_back({SliceKind::Cap, s.pos});
                resolved.slices.push_back({SliceKind::Cup, s.pos});
            }
            tr.sites.push_back(site);
        }
    }
    tr.right_seg = cur;
    return {tr, resolved};
}

/// A circle of an annular closure.
struct AnnularCircle {
    int id = 0;
    std::vector<int> seam_points;  // 1-based strand indices met at the seam
    bool essential = false;        // odd number of seam points
    std::vector<int> segments;     // traversal order of constituent segments
    int order_key = 0;             // deterministic ordering key
};

/// Circle configuration of the annular closure of an (n,n) word.
/// Circles are ordered: essential circles by innermost seam point
/// (innermost -> outermost), then trivial circles by smallest segment id.
struct AnnularConfig {
    int n = 0;  // seam intersection count
    std::vector<AnnularCircle> circles;

    int essential_count() const {
        int c = 0;
        for (const auto& z : circles) c += z.essential ? 1 : 0;
        return c;
    }

    /// Index into `circles` of the circle containing segment seg.
    int circle_of_segment(int seg) const {
        for (std::size_t i = 0; i < circles.size(); ++i)
            for (int s : circles[i].segments)
                if (s == seg) return static_cast<int>(i);
        return -1;
    }
};

/// Closure of a traced (n,n) word: right boundary i glued to left boundary i
/// through the seam.  Wrap arcs are numbered by strand index (1-based);
/// innermost = 1.
inline AnnularConfig trace_closure(const WordTrace& tr) {
    if (tr.n_left != tr.n_right)
        throw std::invalid_argument("trace_closure: (n,n) word required");
    AnnularConfig cfg;
    cfg.n = tr.n_left;

    // adjacency on segments: joins plus wrap arcs (tagged by strand index)
    std::map<int, std::vector<std::pair<int, int>>> adj;  // seg -> (other, wrap index or 0)
    for (const auto& [a, b] : tr.joins) {
        adj[a].push_back({b, 0});
        adj[b].push_back({a, 0});
    }
    for (int i = 0; i < tr.n_left; ++i) {
        int a = tr.right_seg[i];
        int b = tr.left_seg[i];
        adj[a].push_back({b, i + 1});
        adj[b].push_back({a, i + 1});
    }
    // every segment has exactly two incidences; trace cycles
    std::set<int> seen;
    int id = 0;
    for (int s = 0; s < tr.num_segments; ++s) {
        if (seen.count(s)) continue;
        AnnularCircle z;
        z.id = id++;
        // walk the cycle: at each step pick the unused incidence
        std::set<std::pair<int, std::size_t>> used_inc;
        int cur = s;
        std::size_t in_slot = adj[cur].size();  // sentinel: no incoming edge yet
        while (true) {
            seen.insert(cur);
            z.segments.push_back(cur);
            std::size_t next_slot = adj[cur].size();
            for (std::size_t t = 0; t < adj[cur].size(); ++t) {
                if (t == in_slot) continue;
                if (used_inc.count({cur, t})) continue;
                next_slot = t;
                break;
            }
            if (next_slot == adj[cur].size()) break;  // cycle closed
            used_inc.insert({cur, next_slot});
            auto [nxt, wrap] = adj[cur][next_slot];
            if (wrap > 0) z.seam_points.push_back(wrap);
            // mark the matching incidence on the far side as the in-edge
            std::size_t back = adj[nxt].size();
            for (std::size_t t = 0; t < adj[nxt].size(); ++t) {
                if (adj[nxt][t].first == cur && adj[nxt][t].second == wrap &&
                    !used_inc.count({nxt, t})) {
                    back = t;
                    break;
                }
            }
            used_inc.insert({nxt, back});
            cur = nxt;
            in_slot = back;
            if (cur == s) {
                // check whether all incidences at s are used; if so stop
                bool done = true;
                for (std::size_t t = 0; t < adj[s].size(); ++t)
                    if (!used_inc.count({s, t})) done = false;
                if (done) break;
            }
        }
        std::sort(z.seam_points.begin(), z.seam_points.end());
        z.essential = z.seam_points.size() % 2 == 1;
        cfg.circles.push_back(std::move(z));
    }

    // deterministic order: essential circles by innermost seam point, then
    // trivial circles by smallest segment id
    std::sort(cfg.circles.begin(), cfg.circles.end(),
              [](const AnnularCircle& a, const AnnularCircle& b) {
                  if (a.essential != b.essential) return a.essential;
                  if (a.essential)
                      return a.seam_points.front() < b.seam_points.front();
                  int sa = *std::min_element(a.segments.begin(), a.segments.end());
                  int sb = *std::min_element(b.segments.begin(), b.segments.end());
                  return sa < sb;
              });
    for (std::size_t i = 0; i < cfg.circles.size(); ++i)
        cfg.circles[i].order_key = static_cast<int>(i);
    return cfg;
}

enum class SaddleKind { Merge, Split };

/// Elementary edge saddle between two resolutions of the same word.
struct SaddleData {
    SaddleKind kind;
    int crossing = -1;               // index of the flipped crossing
    std::vector<int> before_circles; // indices into the source AnnularConfig
    std::vector<int> after_circles;  // indices into the target AnnularConfig
};

/// Classify the saddle along the edge v <_1 w of the cube of T.
inline SaddleData edge_saddle(const TangleWord& t, const ResolutionVertex& v,
                              const ResolutionVertex& w) {
    int j = -1;
    for (std::size_t i = 0; i < v.bits.size(); ++i) {
        if (v.bits[i] == w.bits[i]) continue;
        if (v.bits[i] != 0 || w.bits[i] != 1 || j >= 0)
            throw std::invalid_argument("edge_saddle: not an edge");
        j = static_cast<int>(i);
    }
    if (j < 0) throw std::invalid_argument("edge_saddle: not an edge");

    auto [trv, rv] = trace_resolution(t, v);
    auto [trw, rw] = trace_resolution(t, w);
    AnnularConfig cv = trace_closure(trv);
    AnnularConfig cw = trace_closure(trw);

    SaddleData s;
    s.crossing = j;
    const CrossingSite& sv = trv.sites[j];
    const CrossingSite& sw = trw.sites[j];
    int c1 = cv.circle_of_segment(sv.a);
    int c2 = cv.circle_of_segment(sv.b);
    int d1 = cw.circle_of_segment(sw.a);
    int d2 = cw.circle_of_segment(sw.b);
    if (c1 != c2) {
        s.kind = SaddleKind::Merge;
        s.before_circles = {c1, c2};
        if (d1 != d2) throw std::logic_error("edge_saddle: inconsistent surgery");
        s.after_circles = {d1};
    } else {
        s.kind = SaddleKind::Split;
        s.before_circles = {c1};
        if (d1 == d2) throw std::logic_error("edge_saddle: inconsistent surgery");
        s.after_circles = {d1, d2};
    }
    return s;
}

}  // namespace qkh
