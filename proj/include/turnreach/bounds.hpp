#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turnreach/turn_sequence.hpp"

namespace turnreach {

struct UnreachableError : std::runtime_error {
    explicit UnreachableError(Axis a)
        : std::runtime_error(std::string("axis ") + axis_name(a) + " unreachable (no matching hook)") {}
};
struct UnsupportedExcessError : std::runtime_error {
    UnsupportedExcessError() : std::runtime_error("negative excess: mirror the sequence first") {}
};

// A bound value together with the lemma/theorem case that produced it; when
// the expression is a min over measures, both operands are retained.
struct BoundValue {
    long long value = 0;
    std::string formula;
    std::vector<long long> operands;
};

inline bool plus_x_monotone(const TurnSequence& s) {
    for (const Hook& h : find_hooks(s))
        if (h.dir == HookDir::Up || h.dir == HookDir::Down) return false;
    return true;
}

inline bool axis_reachable(const TurnSequence& s, Axis a) {
    return has_hook_dir(s, hook_dir_of_axis(a));
}

namespace bound_detail {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline bool has_prefix_value(const TurnSequence& s, int w) {
    return boundary_indices(s, w).has_value();
}

} // namespace bound_detail

// Theorem 5 table. Requires excess >= 0 and a left hook.
inline BoundValue upper_x_minus(const TurnSequence& s) {
    const int d = s.excess();
    if (d < 0) throw UnsupportedExcessError{};
    if (!axis_reachable(s, Axis::MinusX)) throw UnreachableError(Axis::MinusX);
    Measures m = measures(s);
    const long long stair = m.sp(Axis::MinusX, Axis::PlusY);
    const bool last_r = s.turns().back() == Turn::R;
    if (d == 0) return {2, "T5:d0", {}};
    if (d == 1) return {stair + 1, "T5:d1", {stair}};
    if (d == 2) {
        if (last_r) return {2, "T5:d2,last=R", {}};
        return {stair + 2, "T5:d2,last=L", {stair}};
    }
    long long q = (d + 2) / 4;
    if (last_r && d % 4 == 2) return {q + 1, "T5:d>=3,last=R,d=2mod4", {}};
    return {q, "T5:d>=3", {}};
}

// Theorem 9 table. Requires excess >= 0 and a left hook.
inline BoundValue lower_x_minus(const TurnSequence& s) {
    const int d = s.excess();
    if (d < 0) throw UnsupportedExcessError{};
    if (!axis_reachable(s, Axis::MinusX)) throw UnreachableError(Axis::MinusX);
    const long long q = (d + 2) / 4;
    const bool last_r = s.turns().back() == Turn::R;
    switch (d % 4) {
        case 0:
        case 1: return {std::llabs(q - 1) + 1, "T9:d=0,1mod4", {}};
        case 2:
            if (last_r) return {q + 1, "T9:d=2mod4,last=R", {}};
            return {std::llabs(q - 2) + 2, "T9:d=2mod4,last=L", {}};
        default: return {q, "T9:d=3mod4", {}};
    }
}

// Theorem 6 dispatch over Lemmas 5-10. Requires excess >= 0 and a right hook.
inline BoundValue upper_x_plus(const TurnSequence& s) {
    const int d = s.excess();
    if (d < 0) throw UnsupportedExcessError{};
    if (!axis_reachable(s, Axis::PlusX)) throw UnreachableError(Axis::PlusX);
    Measures m = measures(s);
    const long long mo = m.mo(Axis::PlusX);
    const long long mp = m.mp(Axis::PlusX);
    const long long so_ne = m.so(Axis::PlusX, Axis::PlusY);
    const long long so_se = m.so(Axis::PlusX, Axis::MinusY);
    const long long sp_ne = m.sp(Axis::PlusX, Axis::PlusY);
    const long long sp_se = m.sp(Axis::PlusX, Axis::MinusY);
    const bool first_l = s.at(1) == Turn::L;

    if (plus_x_monotone(s)) return {mo, "L6:monotone", {mo}};

    switch (d) {
        case 0: {
            long long a = mo + std::max(sp_ne, sp_se);
            long long b = mp + (first_l ? so_ne : so_se);
            return {std::min(a, b) + 2, first_l ? "L7d0:first=L" : "L7d0:first=R", {a, b}};
        }
        case 1: {
            long long a = mo + sp_ne + 1;
            long long b = mp + (first_l ? so_ne : so_se) + 2;
            return {std::min(a, b), first_l ? "L7:first=L" : "L7:first=R", {a, b}};
        }
        case 2:
            if (first_l) return {so_ne + 2, "L5:d2,first=L", {so_ne}};
            return {2, "L5:d2,first=R", {}};
        case 3: {
            if (!first_l) return {2, "L8:first=R", {}};
            bool m1 = bound_detail::has_prefix_value(s, -1);
            bool p5 = bound_detail::has_prefix_value(s, 5);
            if (m1 && p5) return {std::min(so_ne, sp_se) + 2, "L8:first=L,both", {so_ne, sp_se}};
            if (m1) return {so_ne + 2, "L8:first=L,-1", {so_ne}};
            return {sp_se + 2, "L8:first=L,5", {sp_se}};
        }
        case 4: {
            if (!first_l) return {std::min(so_se, sp_ne) + 3, "L10:first=R", {so_se, sp_ne}};
            bool m1 = bound_detail::has_prefix_value(s, -1);
            bool p5 = bound_detail::has_prefix_value(s, 5);
            if (m1 && p5) return {std::min(so_ne, sp_se) + 3, "L10:first=L,both", {so_ne, sp_se}};
            if (m1) return {so_ne + 3, "L10:first=L,-1", {so_ne}};
            return {sp_se + 3, "L10:first=L,5", {sp_se}};
        }
        case 5:
            if (first_l) return {2, "L9:first=L", {}};
            return {std::min(so_se, sp_ne) + 2, "L9:first=R", {so_se, sp_ne}};
        default: {
            long long q = (d + 2) / 4;
            if (d % 4 == 2) {
                if (first_l) return {q, "L5:d>=6,2mod4,first=L", {}};
                return {q + 1, "L5:d>=6,2mod4,first=R", {}};
            }
            long long a = mo + 2;
            long long b = mp + (first_l ? 1 : 2);
            return {std::min(a, b) + q, first_l ? "L5:d>=6,first=L" : "L5:d>=6,first=R", {a, b}};
        }
    }
}

// Theorem 8 dispatch over Lemmas 11-14. Requires excess >= 0 and a right hook.
inline BoundValue lower_x_plus(const TurnSequence& s) {
    const int d = s.excess();
    if (d < 0) throw UnsupportedExcessError{};
    if (!axis_reachable(s, Axis::PlusX)) throw UnreachableError(Axis::PlusX);
    Measures m = measures(s);
    const long long so_ne = m.so(Axis::PlusX, Axis::PlusY);
    const long long so_se = m.so(Axis::PlusX, Axis::MinusY);
    const long long sp_ne = m.sp(Axis::PlusX, Axis::PlusY);
    const long long sp_se = m.sp(Axis::PlusX, Axis::MinusY);
    const bool first_l = s.at(1) == Turn::L;
    const long long q = (d + 2) / 4;

    switch (d % 4) {
        case 1:
            if (!first_l) return {std::min(so_se, sp_ne) + q + 1, "L11:first=R", {so_se, sp_ne}};
            return {std::llabs(q - 1) + 2, "L11:first=L", {}};
        case 3:
            if (first_l) return {std::min(so_ne, sp_se) + std::llabs(q - 2) + 1, "L12:first=L", {so_ne, sp_se}};
            return {q + 1, "L12:first=R", {}};
        case 2:
            if (first_l) return {std::llabs(q - 2) + 2, "L13:first=L", {}};
            return {q + 1, "L13:first=R", {}};
        default:
            if (d == 4) return {3, "L14:d=4", {}};
            if (d == 0) {
                long long v = first_l ? std::min({so_ne, sp_se, 2LL}) : std::min({so_se, sp_ne, 2LL});
                return {v + 2, first_l ? "L14:d=0,first=L" : "L14:d=0,first=R", {}};
            }
            if (first_l) return {std::min({so_ne, sp_se, 2LL}) + q, "L14:d>=8,first=L", {so_ne, sp_se}};
            return {q + 2, "L14:d>=8,first=R", {}};
    }
}

struct AxisBounds {
    bool reachable = false;
    std::optional<BoundValue> lower;
    std::optional<BoundValue> upper;
};

// Bounds for one signed axis of an arbitrary sequence, applying the mirror
// reduction for negative excess and the 90-degree rotation reduction for the
// y-axes (y bounds are the x+ bounds of the augmented sequence, shifted by 1).
inline AxisBounds bounds_for_axis(const TurnSequence& s, Axis axis) {
    AxisBounds out;
    out.reachable = !s.empty() && axis_reachable(s, axis);
    if (!out.reachable) return out;

    auto shift = [](BoundValue b, long long delta, const char* via) {
        b.value += delta;
        b.formula = std::string(via) + "(" + b.formula + ")";
        return b;
    };

    switch (axis) {
        case Axis::MinusX:
        case Axis::PlusX: {
            TurnSequence t = s.excess() >= 0 ? s : mirror(s);
            if (axis == Axis::MinusX) {
                out.lower = lower_x_minus(t);
                out.upper = upper_x_minus(t);
            } else {
                out.lower = lower_x_plus(t);
                out.upper = upper_x_plus(t);
            }
            if (s.excess() < 0) {
                out.lower->formula = "mirror(" + out.lower->formula + ")";
                out.upper->formula = "mirror(" + out.upper->formula + ")";
            }
            return out;
        }
        case Axis::MinusY: {
            // Rotating ccw and prepending L maps (0,-b) to (b+1, 0);
            // for very negative excess go through the mirror image instead.
            TurnSequence t = s.excess() >= -1 ? prepend(s, Turn::L) : prepend(mirror(s), Turn::R);
            out.lower = shift(lower_x_plus(t), -1, "yred");
            out.upper = shift(upper_x_plus(t), -1, "yred");
            return out;
        }
        case Axis::PlusY: {
            TurnSequence t = s.excess() >= 1 ? prepend(s, Turn::R) : prepend(mirror(s), Turn::L);
            out.lower = shift(lower_x_plus(t), -1, "yred");
            out.upper = shift(upper_x_plus(t), -1, "yred");
            return out;
        }
    }
    return out;
}

// Theorem 7: minimum number of vertical segments meeting the closing segment.
struct UnsupportedResidueError : std::runtime_error {
    UnsupportedResidueError()
        : std::runtime_error("excess = 0 mod 4: handled by the drop-last reduction") {}
};

inline long long min_vertical_crossings(const TurnSequence& s) {
    const int d = s.excess();
    if (d < 0) throw UnsupportedExcessError{};
    if (d % 4 == 0) throw UnsupportedResidueError{};
    if (!axis_reachable(s, Axis::PlusX)) throw UnreachableError(Axis::PlusX);
    long long k = d / 4;
    if (s.at(1) == Turn::L) return std::llabs(k - 1) + 1;
    return k + 1;
}

} // namespace turnreach
