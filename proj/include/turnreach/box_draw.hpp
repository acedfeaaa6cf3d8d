#pragma once

#include <stdexcept>
#include <vector>

#include "turnreach/form.hpp"
#include "turnreach/geometry.hpp"

namespace turnreach {

struct InvalidSplitError : std::runtime_error {
    InvalidSplitError() : std::runtime_error("twobox split index out of range") {}
};
struct NoSuchHookError : std::runtime_error {
    explicit NoSuchHookError(HookDir d)
        : std::runtime_error(std::string("no ") + hook_dir_name(d) + " hook: axis unreachable") {}
};

// Box algorithm: incremental drawing where each new segment either exits the
// current bounding box by one unit (turn differs from the previous) or sweeps
// across the box side and one unit past it (turn repeats).
inline BoxedChain box_draw(const TurnSequence& s) {
    std::vector<Point> v{{0, 0}, {1, 0}};
    BoundingBox box{0, 1, 0, 0};
    Point dir{1, 0};
    for (std::size_t i = 1; i <= s.size(); ++i) {
        Turn t = s.at(i);
        Point nd = rot_turn(dir, t);
        long long len = 1;
        if (i >= 2 && t == s.at(i - 1))
            len = (nd.x != 0 ? box.width() : box.height()) + 1;
        Point tip = v.back();
        Point nxt{tip.x + nd.x * len, tip.y + nd.y * len};
        v.push_back(nxt);
        box.include(nxt);
        dir = nd;
    }
    Chain c(std::move(v));
    return BoxedChain{c, box, {0, 0}, c.endpoint()};
}

namespace twobox_detail {

struct Parts {
    Chain chain;
    std::size_t split;   // the (1-based) split index i
    std::size_t hinge_a; // vertex index of bend i (end of the first part)
    std::size_t hinge_b; // vertex index of bend i+1 (start of the second part)
};

// Places box_draw(sigma_1..sigma_i) and box_draw(reverse_complement of the
// rest) so that their last segments merge into one straight segment.
inline Parts assemble(const TurnSequence& s, std::size_t split) {
    if (split < 1 || split >= s.size()) throw InvalidSplitError{};
    Chain c1 = box_draw(s.sub(1, split)).chain;
    Chain c2 = box_draw(reverse_complement(s.sub(split + 1, s.size()))).chain;

    const auto& v1 = c1.vertices();
    Point d1 = v1.back() - v1[v1.size() - 2];
    long long n1 = std::max(std::llabs(d1.x), std::llabs(d1.y));
    d1 = {d1.x / n1, d1.y / n1};

    // Rotate c2 until its final segment heads opposite to d1.
    std::vector<Point> w = c2.vertices();
    for (int attempt = 0;; ++attempt) {
        Point d2 = w.back() - w[w.size() - 2];
        long long n2 = std::max(std::llabs(d2.x), std::llabs(d2.y));
        d2 = {d2.x / n2, d2.y / n2};
        if (d2.x == -d1.x && d2.y == -d1.y) break;
        if (attempt >= 4) throw std::logic_error("twobox rotation failed");
        for (Point& p : w) p = apply_isometry(p, Isometry::Rot90Ccw);
    }
    // Translate so that c2's endpoint sits one unit past c1's endpoint.
    Point target = v1.back() + d1;
    Point offset = target - w.back();
    for (Point& p : w) p = p + offset;

    std::vector<Point> out(v1.begin(), v1.end() - 1); // drop p(C1)
    for (std::size_t i = w.size() - 1; i-- > 0;) out.push_back(w[i]);

    Parts parts;
    parts.split = split;
    parts.hinge_a = v1.size() - 2;     // bend i
    parts.hinge_b = v1.size() - 1;     // bend i+1 (= last bend of C2)
    parts.chain = Chain(std::move(out));
    if (!is_simple(parts.chain) || !(turns_of(parts.chain) == s))
        throw std::logic_error("twobox assembly failed");
    return parts;
}

} // namespace twobox_detail

inline Chain twobox_draw(const TurnSequence& s, std::size_t split) {
    return twobox_detail::assemble(s, split).chain;
}

// Lemma 3 witness: split at the first hook of the requested direction,
// TwoBox-draw, then slide the far part onto the axis by lengthening one of
// the two segments flanking the hook segment.
inline Chain axis_witness(const TurnSequence& s, Axis axis) {
    HookDir want = hook_dir_of_axis(axis);
    std::size_t hook_index = 0;
    for (const Hook& h : find_hooks(s)) {
        if (h.dir == want) {
            hook_index = h.index;
            break;
        }
    }
    if (hook_index == 0) throw NoSuchHookError(want);

    twobox_detail::Parts parts = twobox_detail::assemble(s, hook_index);
    std::vector<Point> v = parts.chain.vertices();
    const std::size_t ia = parts.hinge_a; // bend i: hook segment = [ia, ia+1]
    Point p = v.back();

    bool vertical_hook = (axis == Axis::PlusY || axis == Axis::MinusY);
    long long off = vertical_hook ? p.x : p.y;
    if (off != 0) {
        Point need = vertical_hook ? Point{off > 0 ? -1 : 1, 0} : Point{0, off > 0 ? -1 : 1};
        Point before = v[ia] - v[ia - 1];
        long long nb = std::max(std::llabs(before.x), std::llabs(before.y));
        before = {before.x / nb, before.y / nb};
        std::size_t from = (before == need) ? ia : ia + 2;
        if (!(before == need)) {
            Point after = v[ia + 2] - v[ia + 1];
            long long na = std::max(std::llabs(after.x), std::llabs(after.y));
            after = {after.x / na, after.y / na};
            if (!(after == need)) throw std::logic_error("axis witness: no flank heads to the axis");
        }
        long long amount = std::llabs(off);
        for (std::size_t k = from; k < v.size(); ++k)
            v[k] = v[k] + Point{need.x * amount, need.y * amount};
    }

    Chain out(std::move(v));
    if (!is_simple(out) || !(turns_of(out) == s))
        throw std::logic_error("axis witness produced an invalid chain");
    Point q = out.endpoint();
    bool on_axis = vertical_hook ? (q.x == 0 && ((axis == Axis::PlusY) == (q.y > 0)) && q.y != 0)
                                 : (q.y == 0 && ((axis == Axis::PlusX) == (q.x > 0)) && q.x != 0);
    if (!on_axis) throw std::logic_error("axis witness missed the axis");
    return out;
}

} // namespace turnreach
