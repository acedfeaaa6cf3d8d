#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "turnreach/geometry.hpp"
#include "turnreach/turn_sequence.hpp"

namespace turnreach {

struct AxisMismatchError : std::runtime_error {
    AxisMismatchError() : std::runtime_error("closest-point axes differ from hook directions") {}
};

// Theorem 3 shapes: the east ray for the empty word, a quadrant for
// staircases, otherwise a union of at most four axis-orthogonal halfplanes
// through the closest reachable axis points.
struct ReachableSet {
    enum class Kind { EastRay, Quadrant, HalfplaneUnion };

    struct Halfplane {
        Axis axis;            // which signed axis the boundary line crosses
        long long coordinate; // signed closest coordinate on that axis
    };

    Kind kind = Kind::EastRay;
    Point corner;                     // Quadrant only
    std::vector<Halfplane> halfplanes; // HalfplaneUnion only
};

// closest maps each reachable signed axis to the (positive) distance of its
// closest reachable point.
inline ReachableSet characterize(const TurnSequence& s, const std::map<Axis, long long>& closest) {
    ReachableSet out;
    if (s.empty()) {
        if (!closest.empty()) throw AxisMismatchError{};
        out.kind = ReachableSet::Kind::EastRay;
        return out;
    }
    if (is_staircase(s)) {
        if (!closest.empty()) throw AxisMismatchError{};
        out.kind = ReachableSet::Kind::Quadrant;
        long long n = static_cast<long long>(s.size());
        out.corner = {1 + n / 2, s.at(1) == Turn::L ? (n + 1) / 2 : -((n + 1) / 2)};
        return out;
    }
    out.kind = ReachableSet::Kind::HalfplaneUnion;
    for (int a = 0; a < 4; ++a) {
        Axis axis = static_cast<Axis>(a);
        bool hook = has_hook_dir(s, hook_dir_of_axis(axis));
        auto it = closest.find(axis);
        if (hook != (it != closest.end())) throw AxisMismatchError{};
        if (!hook) continue;
        if (it->second < 1) throw AxisMismatchError{};
        Point d = dir_vector(axis);
        long long signed_coord = (d.x + d.y) * it->second;
        out.halfplanes.push_back({axis, signed_coord});
    }
    return out;
}

inline bool contains(const ReachableSet& set, Point q) {
    switch (set.kind) {
        case ReachableSet::Kind::EastRay:
            return q.y == 0 && q.x >= 1;
        case ReachableSet::Kind::Quadrant: {
            bool x_ok = set.corner.x > 0 ? q.x >= set.corner.x : q.x <= set.corner.x;
            bool y_ok = set.corner.y > 0 ? q.y >= set.corner.y : q.y <= set.corner.y;
            return x_ok && y_ok;
        }
        case ReachableSet::Kind::HalfplaneUnion:
            for (const auto& h : set.halfplanes) {
                switch (h.axis) {
                    case Axis::PlusX:
                        if (q.x >= h.coordinate) return true;
                        break;
                    case Axis::MinusX:
                        if (q.x <= h.coordinate) return true;
                        break;
                    case Axis::PlusY:
                        if (q.y >= h.coordinate) return true;
                        break;
                    case Axis::MinusY:
                        if (q.y <= h.coordinate) return true;
                        break;
                }
            }
            return false;
    }
    return false;
}

struct Connectivity {
    bool set_connected = true;
    bool complement_connected = true;
};

// Decided symbolically under 4-adjacency: a halfplane union disconnects only
// as two opposite parallel halfplanes (the case Theorem 4 rules out); its
// complement is an axis-aligned box of lattice points containing the origin.
inline Connectivity connectivity(const ReachableSet& set) {
    Connectivity c;
    if (set.kind != ReachableSet::Kind::HalfplaneUnion) return c;
    if (set.halfplanes.size() == 2) {
        Axis a = set.halfplanes[0].axis, b = set.halfplanes[1].axis;
        bool both_x = (a == Axis::PlusX || a == Axis::MinusX) && (b == Axis::PlusX || b == Axis::MinusX);
        bool both_y = (a == Axis::PlusY || a == Axis::MinusY) && (b == Axis::PlusY || b == Axis::MinusY);
        if ((both_x || both_y) && a != b) c.set_connected = false;
    }
    // Complement: the intersection of closed complements is a lattice box
    // containing the origin; lattice boxes are 4-connected.
    c.complement_connected = true;
    return c;
}

} // namespace turnreach
