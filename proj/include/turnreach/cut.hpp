#pragma once

#include <stdexcept>
#include <vector>

#include "turnreach/geometry.hpp"

namespace turnreach {

struct InvalidCutError : std::runtime_error {
    explicit InvalidCutError(const std::string& why) : std::runtime_error("invalid cut: " + why) {}
};
struct IncompatibleTargetError : std::runtime_error {
    IncompatibleTargetError() : std::runtime_error("endpoint incompatible with cut target") {}
};

// Unbounded monotone staircase curve on the doubled grid. Vertices have odd
// coordinates so the curve never meets integer grid points; rays extend to
// +-infinity in the monotone axis from the first/last vertex. A y-monotone
// cut crosses only horizontal segments of a chain, an x-monotone cut only
// vertical ones; stretch() verifies this.
struct Cut {
    enum class Monotone { X, Y };
    Monotone monotone = Monotone::Y;
    std::vector<Point> verts; // doubled coordinates, odd; nondecreasing in monotone axis

    bool crosses_horizontal() const { return monotone == Monotone::Y; }

    // Curve coordinate at an even doubled position along the monotone axis.
    long long at(long long pos) const {
        const bool ym = monotone == Monotone::Y;
        auto mono = [&](const Point& p) { return ym ? p.y : p.x; };
        auto cross = [&](const Point& p) { return ym ? p.x : p.y; };
        if (pos <= mono(verts.front())) return cross(verts.front());
        if (pos >= mono(verts.back())) return cross(verts.back());
        for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
            long long a = mono(verts[i]), b = mono(verts[i + 1]);
            if (a <= pos && pos <= b && cross(verts[i]) == cross(verts[i + 1]))
                return cross(verts[i]);
        }
        throw std::logic_error("cut evaluation failed");
    }
};

inline Cut vertical_line_cut(long long sign) { // x = sign/2, doubled x = sign
    Cut c;
    c.monotone = Cut::Monotone::Y;
    c.verts = {{sign, -1}, {sign, 1}};
    return c;
}

inline Cut horizontal_line_cut(long long sign) { // y = sign/2
    Cut c;
    c.monotone = Cut::Monotone::X;
    c.verts = {{-1, sign}, {1, sign}};
    return c;
}

enum class CutTarget { VPlus, HPlus, TowardYAxisLeft, TowardYAxisRight, TowardXAxisUp, TowardXAxisDown };

inline Cut standard_cut(const Chain& chain, CutTarget target) {
    Point p = chain.endpoint();
    auto sgn = [](long long v) { return v > 0 ? 1LL : -1LL; };
    switch (target) {
        case CutTarget::VPlus:
            if (p.x == 0) throw IncompatibleTargetError{};
            return vertical_line_cut(sgn(p.x));
        case CutTarget::HPlus:
            if (p.y == 0) throw IncompatibleTargetError{};
            return horizontal_line_cut(sgn(p.y));
        case CutTarget::TowardYAxisLeft:
        case CutTarget::TowardYAxisRight: {
            if (p.x != 0 || p.y == 0) throw IncompatibleTargetError{};
            // Hugs x = +-1/2 with a detour past the origin row; the detour side
            // keeps o and p separated because o's only incident segment heads east.
            long long hug = target == CutTarget::TowardYAxisLeft ? 1 : -1;
            Cut c;
            c.monotone = Cut::Monotone::Y;
            c.verts = {{hug, -1}, {-hug, -1}, {-hug, 1}, {hug, 1}};
            return c;
        }
        case CutTarget::TowardXAxisUp:
        case CutTarget::TowardXAxisDown: {
            if (p.y != 0 || p.x == 0) throw IncompatibleTargetError{};
            long long t = chain.vertices()[1].x; // first bend
            long long hug = target == CutTarget::TowardXAxisDown ? 1 : -1;
            Cut c;
            c.monotone = Cut::Monotone::X;
            c.verts = {{-1, hug}, {-1, -hug}, {2 * t + 1, -hug}, {2 * t + 1, hug}};
            return c;
        }
    }
    throw IncompatibleTargetError{};
}

namespace detail {

// Count crossings of the cut with a doubled-grid segment of the wrong
// orientation (jog pieces crossing it).
inline int jog_crossings(const Cut& cut, long long fixed, long long lo, long long hi) {
    const bool ym = cut.monotone == Cut::Monotone::Y;
    int count = 0;
    for (std::size_t i = 0; i + 1 < cut.verts.size(); ++i) {
        const Point &a = cut.verts[i], &b = cut.verts[i + 1];
        long long am = ym ? a.y : a.x, bm = ym ? b.y : b.x;
        long long ac = ym ? a.x : a.y, bc = ym ? b.x : b.y;
        if (am != bm) continue; // not a jog piece
        if (am <= lo || am >= hi) continue;
        long long jlo = std::min(ac, bc), jhi = std::max(ac, bc);
        if (jlo < fixed && fixed < jhi) ++count;
    }
    return count;
}

} // namespace detail

// Lengthen every segment crossed by the cut by d, displacing the endpoint
// side. Throws InvalidCutError if the cut fails separation, crosses nothing,
// or crosses a segment of the wrong orientation.
inline Chain stretch(const Chain& chain, const Cut& cut, long long d) {
    if (d < 1) throw std::invalid_argument("stretch amount must be positive");
    const bool ym = cut.monotone == Cut::Monotone::Y;

    auto side = [&](Point v) -> int { // doubled-grid point
        long long pos = ym ? v.y : v.x;
        long long coord = ym ? v.x : v.y;
        long long f = cut.at(pos);
        return coord > f ? 1 : -1;
    };

    // The side opposite the origin translates. When the cut also separates o
    // from p the endpoint moves with it; otherwise (both on the origin side,
    // as in a pure widening stretch) the endpoint stays put.
    int so = side(Point{0, 0});
    int sp = -so;

    int right_orientation = 0;
    for (std::size_t k = 0; k < chain.segment_count(); ++k) {
        Segment s = chain.segment(k);
        Segment sd{{2 * s.a.x, 2 * s.a.y}, {2 * s.b.x, 2 * s.b.y}};
        if (sd.horizontal() == cut.crosses_horizontal()) {
            if (sd.horizontal()) {
                long long f = cut.at(sd.a.y);
                if (sd.lo_x() < f && f < sd.hi_x()) ++right_orientation;
            } else {
                long long f = cut.at(sd.a.x);
                if (sd.lo_y() < f && f < sd.hi_y()) ++right_orientation;
            }
        } else {
            long long fixed = sd.horizontal() ? sd.a.y : sd.a.x;
            long long lo = sd.horizontal() ? sd.lo_x() : sd.lo_y();
            long long hi = sd.horizontal() ? sd.hi_x() : sd.hi_y();
            if (detail::jog_crossings(cut, fixed, lo, hi) > 0)
                throw InvalidCutError("crosses a segment of the wrong orientation");
        }
    }
    if (right_orientation == 0) throw InvalidCutError("crosses no segment");

    Point shift = ym ? Point{sp * d, 0} : Point{0, sp * d};
    std::vector<Point> out;
    out.reserve(chain.vertices().size());
    for (Point v : chain.vertices()) {
        Point v2{2 * v.x, 2 * v.y};
        out.push_back(side(v2) == sp ? v + shift : v);
    }
    Chain result(std::move(out));
    if (!is_simple(result) || !(turns_of(result) == turns_of(chain)))
        throw std::logic_error("stretch produced an invalid chain");
    return result;
}

// Row/column insertion: translate everything strictly beyond the grid line
// (between h and h+1) by delta, keeping the origin fixed. Always yields a
// valid chain realizing the same sequence; crossing segments lengthen.
inline Chain insert_gap(const Chain& chain, bool vertical_cut, long long h, long long delta) {
    if (delta < 0) throw std::invalid_argument("gap must be nonnegative");
    if (delta == 0) return chain;
    const bool origin_beyond = vertical_cut ? (0 > h) : (0 > h);
    std::vector<Point> out;
    out.reserve(chain.vertices().size());
    for (Point v : chain.vertices()) {
        long long c = vertical_cut ? v.x : v.y;
        bool beyond = c > h;
        long long move = origin_beyond ? (beyond ? 0 : -delta) : (beyond ? delta : 0);
        if (vertical_cut)
            out.push_back({v.x + move, v.y});
        else
            out.push_back({v.x, v.y + move});
    }
    return Chain(std::move(out));
}

} // namespace turnreach
