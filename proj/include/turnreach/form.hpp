#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "turnreach/cut.hpp"
#include "turnreach/geometry.hpp"
#include "turnreach/turn_sequence.hpp"

namespace turnreach {

inline Point rot_turn(Point v, Turn t) {
    return t == Turn::L ? Point{-v.y, v.x} : Point{v.y, -v.x};
}

namespace form_detail {

enum class Trick { Absorb, Head, Append, Prepend };
// Absorb covers both the tail-absorb (next turn equals t1) and the
// both-mismatch reroute (next turn equals t2); the vertex splice is identical.

struct Step {
    std::size_t k; // 1-based insertion position into the current sequence
    Turn t1;
    Trick trick;
};

struct Plan {
    TurnSequence base;
    std::vector<Step> steps; // in reinsertion order
};

inline Plan make_plan(const TurnSequence& tau) {
    Plan plan;
    std::vector<Turn> cur = tau.turns();
    std::vector<Step> steps;
    for (;;) {
        std::size_t n = cur.size();
        std::size_t k = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (cur[i - 1] != cur[i]) {
                k = i; // 1-based boundary position
                break;
            }
        }
        if (k == 0) break; // single-letter word (or empty): reduced
        Trick trick;
        Turn x = cur[k - 1], y = cur[k];
        if (k + 1 == n)
            trick = Trick::Append;
        else if (cur[k + 1] == x)
            trick = Trick::Absorb; // tail-absorb flavour
        else if (k == 1)
            trick = Trick::Prepend;
        else if (cur[k - 2] == y)
            trick = Trick::Head;
        else
            trick = Trick::Absorb; // both-mismatch flavour
        steps.push_back({k, x, trick});
        cur.erase(cur.begin() + (k - 1), cur.begin() + (k + 1));
    }
    plan.base = TurnSequence(cur);
    plan.steps.assign(steps.rbegin(), steps.rend());
    return plan;
}

struct Builder {
    std::vector<Point> v;
    std::vector<Turn> turns;

    Point seg_dir(std::size_t j) const {
        Point d = v[j + 1] - v[j];
        long long len = std::max(std::llabs(d.x), std::llabs(d.y));
        return {d.x / len, d.y / len};
    }
    long long seg_len(std::size_t j) const {
        Point d = v[j + 1] - v[j];
        return std::max(std::llabs(d.x), std::llabs(d.y));
    }

    // Row/column insertion keeping the origin fixed.
    void gap(bool vertical_cut, long long h, long long delta) {
        if (delta <= 0) return;
        const bool origin_beyond = 0 > h;
        for (Point& p : v) {
            long long c = vertical_cut ? p.x : p.y;
            bool beyond = c > h;
            long long move = origin_beyond ? (beyond ? 0 : -delta) : (beyond ? delta : 0);
            (vertical_cut ? p.x : p.y) += move;
        }
    }

    void widen_segment(std::size_t j, long long min_len = 2) {
        while (seg_len(j) < min_len) {
            Segment s{v[j], v[j + 1]};
            bool horiz = s.horizontal();
            gap(horiz, horiz ? s.lo_x() : s.lo_y(), 1);
        }
    }

    // Clears the grid line adjacent to segment j on side e (unit vector
    // perpendicular to it) by inserting a one-unit gap there.
    void open_lane(std::size_t j, Point e) {
        Segment s{v[j], v[j + 1]};
        if (e.y != 0) {
            gap(false, e.y > 0 ? s.a.y : s.a.y - 1, 1);
        } else {
            gap(true, e.x > 0 ? s.a.x : s.a.x - 1, 1);
        }
    }

    void verify(const char* what) const {
        Chain c{v};
        if (!is_simple(c))
            throw std::logic_error(std::string("form builder produced a non-simple chain in ") + what);
        if (!(turns_of(c).turns() == turns))
            throw std::logic_error(std::string("form builder turn mismatch in ") + what);
    }

    void insert_pair(const Step& st) {
        const Turn t1 = st.t1;
        const Turn t2 = opposite(t1);
        const std::size_t k = st.k;
        switch (st.trick) {
            case Trick::Append: {
                std::size_t j = turns.size(); // last segment index
                widen_segment(j);
                Point d = seg_dir(j);
                Point e = rot_turn(d, t1);
                open_lane(j, e);
                Point p = v.back();
                Point q = p - d;
                v.pop_back();
                v.push_back(q);
                v.push_back(q + e);
                v.push_back(p + e);
                turns.push_back(t1);
                turns.push_back(t2);
                break;
            }
            case Trick::Prepend: {
                widen_segment(0);
                Point d{1, 0};
                Point e = rot_turn(d, t1); // direction of the new second segment
                // New base runs in the lane on the opposite side of the old base.
                open_lane(0, Point{0, -e.y});
                Point lane{0, -e.y};
                long long q = v[1].x - 1; // land with remnant length >= 1
                std::vector<Point> nv;
                nv.reserve(v.size() + 2);
                nv.push_back(lane);
                nv.push_back(Point{q, lane.y});
                nv.push_back(Point{q, 0});
                nv.insert(nv.end(), v.begin() + 1, v.end());
                for (Point& p : nv) p.y -= lane.y;
                v = std::move(nv);
                turns.insert(turns.begin(), {t1, t2});
                break;
            }
            case Trick::Absorb: {
                // Insert between turns k-1 and k, rerouting segment k-1 through
                // the adjacent lane. Works both when turn k equals t1 (the lane
                // exit is absorbed by a shortened tail-first segment) and when it
                // equals t2 (the tail-first segment grows through the old bend).
                std::size_t j = k - 1;
                widen_segment(j);
                Point d = seg_dir(j);
                Point e = rot_turn(d, t1);
                Point f = seg_dir(j + 1);
                if (!(f == e || f == Point{-e.x, -e.y}))
                    throw std::logic_error("absorb trick direction mismatch");
                open_lane(j, e);
                Point bend = v[k];
                Point q = bend - d;
                v.insert(v.begin() + k, {q, q + e});
                v[k + 2] = bend + e;
                turns.insert(turns.begin() + (k - 1), {t1, t2});
                break;
            }
            case Trick::Head: {
                std::size_t j = k - 1;
                widen_segment(j);
                widen_segment(j - 1);
                Point d = seg_dir(j);
                Point e = rot_turn(d, t1);
                if (!(seg_dir(j - 1) == e))
                    throw std::logic_error("head trick direction mismatch");
                open_lane(j, Point{-e.x, -e.y});
                Point bend = v[k - 1];
                Point me{-e.x, -e.y};
                Point a = bend + me;
                Point b = a + d;
                Point c = bend + d;
                v.insert(v.begin() + k, {b, c});
                v[k - 1] = a;
                turns.insert(turns.begin() + (k - 1), {t1, t2});
                break;
            }
        }
        verify(st.trick == Trick::Append ? "append" : st.trick == Trick::Prepend ? "prepend" : "insert");
    }
};

inline Chain spiral_all_left(int d) {
    std::vector<long long> lengths;
    lengths.reserve(d + 1);
    for (int k = 0; k <= d; ++k) lengths.push_back(k / 2 + 1);
    std::vector<Turn> ts(d, Turn::L);
    return realize(TurnSequence(ts), lengths);
}

inline Builder base_builder(const TurnSequence& base) {
    Builder b;
    int d = base.excess();
    assert(d >= 0 && static_cast<std::size_t>(d) == base.size());
    if (d == 0)
        b.v = {{0, 0}, {1, 0}};
    else if (d == 1)
        b.v = {{0, 0}, {1, 0}, {1, 1}};
    else if (d == 2)
        b.v = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    else
        b.v = spiral_all_left(d).vertices();
    b.turns = base.turns();
    return b;
}

inline Chain rebuild(const TurnSequence& tau) {
    Plan plan = make_plan(tau);
    Builder b = base_builder(plan.base);
    for (const Step& st : plan.steps) b.insert_pair(st);
    return Chain(b.v);
}

} // namespace form_detail

// Normal-form realization for |excess| <= 2, used as the building block of
// the winding constructions:
//   always: origin on the left side of the bounding box (xmin == 0);
//   delta = 2: endpoint on the left side heading west, strictly above o;
//   delta = 1: endpoint on the top side heading north;
//   delta = 0: endpoint on the right side heading east, final segment lying
//              in the top (last turn R) or bottom (last turn L) side;
//   delta < 0: mirror images of the above (reflection across the x-axis).
inline Chain form_draw(const TurnSequence& tau) {
    int d = tau.excess();
    if (d < -2 || d > 2) throw std::invalid_argument("form_draw needs |excess| <= 2");
    if (d < 0) return reflect_x_chain(form_draw(mirror(tau)));

    Chain out;
    if (d == 0 && !tau.empty()) {
        Turn last = tau.turns().back();
        Chain head = form_draw(drop_last(tau));
        std::vector<Point> v = head.vertices();
        BoundingBox box = head.bbox();
        long long row = (last == Turn::R) ? box.ymax + 1 : box.ymin - 1;
        v.back().y = row; // extend the final vertical segment one unit past the box
        v.push_back({box.xmax + 1, row});
        out = Chain(std::move(v));
    } else {
        out = form_detail::rebuild(tau);
    }

    BoundingBox box = out.bbox();
    Point b = out.endpoint();
    auto fail = [&](const char* why) { throw std::logic_error(std::string("form_draw postcondition: ") + why); };
    if (box.xmin != 0) fail("origin not on left side");
    if (d == 2 && !(b.x == 0 && b.y >= 1)) fail("delta=2 exit");
    if (d == 1 && !(b.y == box.ymax && b.x >= 1)) fail("delta=1 exit");
    if (d == 0 && !(b.x == box.xmax && (tau.empty() || b.y == box.ymax || b.y == box.ymin))) fail("delta=0 exit");
    return out;
}

// LR-algorithm: reduce by deleting adjacent LR/RL pairs down to L^d (or
// R^d), then reinsert along freshly opened rows and columns.
inline Chain lr_chain(const TurnSequence& sigma) {
    int d = sigma.excess();
    if (d >= -2 && d <= 2) return form_draw(sigma);
    if (d < 0) return reflect_x_chain(lr_chain(mirror(sigma)));
    return form_detail::rebuild(sigma);
}

struct BoxedChain {
    Chain chain;
    BoundingBox box;
    Point entry;
    Point exit;
};

inline BoxedChain lr_draw(const TurnSequence& sigma) {
    Chain c = lr_chain(sigma);
    return BoxedChain{c, c.bbox(), {0, 0}, c.endpoint()};
}

} // namespace turnreach
