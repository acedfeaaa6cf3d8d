#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "turnreach/turn_sequence.hpp"

namespace turnreach {

struct Point {
    long long x = 0;
    long long y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

inline Point dir_vector(Axis a) {
    switch (a) {
        case Axis::PlusX: return {1, 0};
        case Axis::PlusY: return {0, 1};
        case Axis::MinusX: return {-1, 0};
        case Axis::MinusY: return {0, -1};
    }
    return {1, 0};
}

inline Axis axis_of_vector(Point v) {
    if (v.x > 0 && v.y == 0) return Axis::PlusX;
    if (v.x < 0 && v.y == 0) return Axis::MinusX;
    if (v.x == 0 && v.y > 0) return Axis::PlusY;
    if (v.x == 0 && v.y < 0) return Axis::MinusY;
    throw std::invalid_argument("not an axis vector");
}

struct BoundingBox {
    long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    long long width() const { return xmax - xmin; }
    long long height() const { return ymax - ymin; }
    void include(Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    static BoundingBox of_point(Point p) { return {p.x, p.x, p.y, p.y}; }
    bool operator==(const BoundingBox&) const = default;
};

// Axis-parallel closed segment. For these, box overlap is exact intersection.
struct Segment {
    Point a, b;

    bool horizontal() const { return a.y == b.y; }
    long long lo_x() const { return std::min(a.x, b.x); }
    long long hi_x() const { return std::max(a.x, b.x); }
    long long lo_y() const { return std::min(a.y, b.y); }
    long long hi_y() const { return std::max(a.y, b.y); }
};

inline bool segments_touch(const Segment& s, const Segment& t) {
    return s.lo_x() <= t.hi_x() && t.lo_x() <= s.hi_x() &&
           s.lo_y() <= t.hi_y() && t.lo_y() <= s.hi_y();
}

struct DegenerateBendError : std::runtime_error {
    DegenerateBendError() : std::runtime_error("zero-length or collinear consecutive segments") {}
};
struct LengthMismatchError : std::runtime_error {
    LengthMismatchError() : std::runtime_error("lengths.size() must be n+1") {}
};
struct NonPositiveLengthError : std::runtime_error {
    NonPositiveLengthError() : std::runtime_error("segment lengths must be >= 1") {}
};

// Rectilinear chain from the origin, first segment east. Stored as the full
// vertex list: o, the n bend points, and the endpoint.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<Point> vertices) : v_(std::move(vertices)) {}

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t segment_count() const { return v_.empty() ? 0 : v_.size() - 1; }
    Segment segment(std::size_t k) const { return {v_[k], v_[k + 1]}; }
    Point endpoint() const { return v_.back(); }

    BoundingBox bbox() const {
        BoundingBox b = BoundingBox::of_point(v_.front());
        for (Point p : v_) b.include(p);
        return b;
    }

    // Structural validity: starts at o, first segment east, alternating
    // axis-parallel segments of positive length.
    bool well_formed() const {
        if (v_.size() < 2) return false;
        if (v_.front() != Point{0, 0}) return false;
        if (v_[1].y != 0 || v_[1].x < 1) return false;
        for (std::size_t k = 0; k + 1 < v_.size(); ++k) {
            Point d = v_[k + 1] - v_[k];
            if ((d.x == 0) == (d.y == 0)) return false; // diagonal or zero
            if (k > 0) {
                Point prev = v_[k] - v_[k - 1];
                if ((prev.x == 0) == (d.x == 0)) return false; // no alternation
            }
        }
        return true;
    }

    bool operator==(const Chain&) const = default;

private:
    std::vector<Point> v_;
};

inline Chain realize(const TurnSequence& s, const std::vector<long long>& lengths) {
    if (lengths.size() != s.size() + 1) throw LengthMismatchError{};
    for (long long len : lengths)
        if (len < 1) throw NonPositiveLengthError{};
    PrefixProfile prof = PrefixProfile::of(s);
    std::vector<Point> v;
    v.reserve(lengths.size() + 1);
    Point cur{0, 0};
    v.push_back(cur);
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        Point d = dir_vector(prof.directions[k]);
        cur = {cur.x + d.x * lengths[k], cur.y + d.y * lengths[k]};
        v.push_back(cur);
    }
    return Chain(std::move(v));
}

inline Chain realize_unit(const TurnSequence& s) {
    return realize(s, std::vector<long long>(s.size() + 1, 1));
}

// Touching counts as intersection: non-adjacent segments must be disjoint
// point sets. Adjacent perpendicular segments intersect exactly at the bend.
inline bool is_simple(const Chain& c) {
    if (!c.well_formed()) return false;
    const std::size_t m = c.segment_count();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j)
            if (segments_touch(c.segment(i), c.segment(j))) return false;
    return true;
}

inline TurnSequence turns_of(const Chain& c) {
    const auto& v = c.vertices();
    if (v.size() < 2) throw DegenerateBendError{};
    std::vector<Turn> turns;
    turns.reserve(v.size() - 2);
    for (std::size_t k = 0; k + 2 < v.size(); ++k) {
        Point d1 = v[k + 1] - v[k];
        Point d2 = v[k + 2] - v[k + 1];
        if ((d1.x == 0 && d1.y == 0) || (d2.x == 0 && d2.y == 0)) throw DegenerateBendError{};
        long long cross = d1.x * d2.y - d1.y * d2.x;
        if (cross == 0) throw DegenerateBendError{};
        turns.push_back(cross > 0 ? Turn::L : Turn::R);
    }
    return TurnSequence(std::move(turns));
}

enum class Isometry { Rot90Ccw, Rot90Cw, ReflectX };

inline Point apply_isometry(Point p, Isometry op) {
    switch (op) {
        case Isometry::Rot90Ccw: return {-p.y, p.x};
        case Isometry::Rot90Cw: return {p.y, -p.x};
        case Isometry::ReflectX: return {p.x, -p.y};
    }
    return p;
}

// Raw bend list: rotations break first-segment-east normalization, so the
// result is not packaged as a Chain.
inline std::vector<Point> apply_isometry(const Chain& c, Isometry op) {
    std::vector<Point> out;
    out.reserve(c.vertices().size());
    for (Point p : c.vertices()) out.push_back(apply_isometry(p, op));
    return out;
}

inline Chain reflect_x_chain(const Chain& c) {
    return Chain(apply_isometry(c, Isometry::ReflectX));
}

// Reverse traversal renormalized to a chain: start at the old endpoint,
// rotate so the first segment heads east. Realizes reverse_complement of
// the original sequence; |endpoint| is preserved.
inline Chain reverse_chain(const Chain& c) {
    const auto& v = c.vertices();
    std::vector<Point> rev(v.rbegin(), v.rend());
    Point base = rev.front();
    for (Point& p : rev) p = p - base;
    Point d = rev[1];
    int quarter_turns = 0;
    Axis a = axis_of_vector(d);
    switch (a) {
        case Axis::PlusX: quarter_turns = 0; break;
        case Axis::PlusY: quarter_turns = 3; break; // rotate cw once
        case Axis::MinusX: quarter_turns = 2; break;
        case Axis::MinusY: quarter_turns = 1; break;
    }
    for (int t = 0; t < quarter_turns; ++t)
        for (Point& p : rev) p = apply_isometry(p, Isometry::Rot90Ccw);
    return Chain(std::move(rev));
}

} // namespace turnreach
