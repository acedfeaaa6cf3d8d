#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "turnreach/geometry.hpp"

namespace turnreach {

struct WhiskerError : std::runtime_error {
    WhiskerError() : std::runtime_error("polygon has a whisker (incident edges overlap)") {}
};
struct NotOrdinaryError : std::runtime_error {
    NotOrdinaryError() : std::runtime_error("polygon is not ordinary") {}
};
struct DegenerateClosureError : std::runtime_error {
    DegenerateClosureError() : std::runtime_error("endpoint coincides with the origin") {}
};

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long n, long long d) {
        long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) return {0, 1};
        if (d < 0) { n = -n; d = -d; }
        return {n / g, d / g};
    }
    bool operator==(const Rational&) const = default;
};

// Closed rectilinear vertex cycle on the doubled grid, so unit offsets can
// stand in for the epsilon perturbations of the closing construction.
struct RectPolygon {
    std::vector<Point> vertices; // doubled coordinates; closed implicitly

    std::size_t size() const { return vertices.size(); }
    Segment edge(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }
};

namespace rotation_detail {

inline Point unit_dir(Point a, Point b) {
    Point d = b - a;
    if ((d.x == 0) == (d.y == 0)) throw std::invalid_argument("degenerate or diagonal polygon edge");
    long long n = std::max(std::llabs(d.x), std::llabs(d.y));
    return {d.x / n, d.y / n};
}

} // namespace rotation_detail

// Sum of vertex deflections: +1/4 per left turn, -1/4 per right, 0 through a
// straight vertex. Opposite consecutive directions are a whisker.
inline Rational rotation_number(const RectPolygon& p) {
    const std::size_t n = p.size();
    if (n < 4) throw std::invalid_argument("rectilinear polygon needs >= 4 vertices");
    long long quarters = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Point d1 = rotation_detail::unit_dir(p.vertices[i], p.vertices[(i + 1) % n]);
        Point d2 = rotation_detail::unit_dir(p.vertices[(i + 1) % n], p.vertices[(i + 2) % n]);
        if (d1.x == -d2.x && d1.y == -d2.y) throw WhiskerError{};
        quarters += d1.x * d2.y - d1.y * d2.x; // +1 ccw, -1 cw, 0 straight
    }
    return Rational::make(quarters, 4);
}

// Count of transversal self-crossings. Verifies ordinariness along the way:
// any positive-length overlap of two edges, any T-touch, or any shared point
// of three edges disqualifies the polygon.
inline int self_intersections(const RectPolygon& p) {
    const std::size_t n = p.size();
    std::vector<std::pair<Point, int>> hits; // crossing point -> count
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            Segment a = p.edge(i), b = p.edge(j);
            if (!segments_touch(a, b)) continue;
            if (a.horizontal() == b.horizontal()) {
                // Collinear or parallel contact.
                if (adjacent) continue; // shared vertex only (whisker checked elsewhere)
                throw NotOrdinaryError{};
            }
            const Segment& h = a.horizontal() ? a : b;
            const Segment& v = a.horizontal() ? b : a;
            Point x{v.a.x, h.a.y};
            if (adjacent) continue;
            bool interior_h = h.lo_x() < x.x && x.x < h.hi_x();
            bool interior_v = v.lo_y() < x.y && x.y < v.hi_y();
            if (!(interior_h && interior_v)) throw NotOrdinaryError{}; // T-touch
            ++crossings;
            for (auto& [q, c] : hits)
                if (q == x && ++c >= 2) throw NotOrdinaryError{}; // three edges meet
            hits.push_back({x, 1});
        }
    }
    return crossings;
}

// Closes a chain whose endpoint lies on the x-axis into an ordinary polygon:
// first/last segments lying on the axis are deleted, interior segments lying
// on it are shifted one doubled-grid unit upward, then the endpoints are
// joined along the axis.
inline RectPolygon ordinary_from_chain(const Chain& chain) {
    if (chain.endpoint().y != 0) throw std::invalid_argument("endpoint must lie on the x-axis");
    if (chain.endpoint() == Point{0, 0}) throw DegenerateClosureError{};

    std::vector<Point> v;
    for (Point q : chain.vertices()) v.push_back({2 * q.x, 2 * q.y});

    auto on_axis = [](Point a, Point b) { return a.y == 0 && b.y == 0; };
    // Drop the first segment while it lies on the axis.
    while (v.size() >= 3 && on_axis(v[0], v[1])) v.erase(v.begin());
    while (v.size() >= 3 && on_axis(v[v.size() - 1], v[v.size() - 2])) v.pop_back();
    if (v.size() < 3) throw DegenerateClosureError{};

    // Shift interior axis segments up by one (half-integer) unit.
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (on_axis(v[i], v[i + 1])) {
            v[i].y = 1;
            v[i + 1].y = 1;
        }
    }

    RectPolygon p;
    p.vertices = std::move(v);
    return p;
}

// Vertical segments of the chain meeting the closed segment from the origin
// to the endpoint (touching counts as meeting).
inline int count_vertical_intersections_with_op(const Chain& chain) {
    Point p = chain.endpoint();
    if (p.y != 0) throw std::invalid_argument("endpoint must lie on the x-axis");
    long long lo = std::min<long long>(0, p.x), hi = std::max<long long>(0, p.x);
    int count = 0;
    for (std::size_t k = 0; k < chain.segment_count(); ++k) {
        Segment s = chain.segment(k);
        if (s.horizontal()) continue;
        if (s.a.x >= lo && s.a.x <= hi && s.lo_y() <= 0 && s.hi_y() >= 0) ++count;
    }
    return count;
}

} // namespace turnreach
