#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "turnreach/geometry.hpp"

namespace turnreach {

struct TimeoutError : std::runtime_error {
    TimeoutError() : std::runtime_error("oracle time budget exhausted") {}
};

struct OracleConfig {
    long long lmax = 4;
    long long window = 20; // endpoints recorded within [-window, window]^2
    std::vector<long long> escalation; // increasing lmax values for convergence checks
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static OracleConfig defaults(std::size_t n) {
        OracleConfig c;
        long long nn = static_cast<long long>(n);
        c.lmax = nn + 2;
        c.window = 3 * nn + 5;
        c.escalation = {std::max<long long>(1, nn), nn + 2, nn + 4};
        return c;
    }
};

struct OracleResult {
    std::set<Point> reachable;                      // within window
    std::array<std::optional<long long>, 4> closest; // per Axis: min |coordinate| on that signed axis
    bool converged = true;
};

namespace detail {

class Enumerator {
public:
    Enumerator(const TurnSequence& s, const OracleConfig& cfg)
        : cfg_(cfg), dirs_(PrefixProfile::of(s).directions), n_(s.size()) {
        verts_.reserve(n_ + 2);
        verts_.push_back({0, 0});
        // remaining_[k]: max total length of segments k..n
        remaining_.assign(n_ + 2, 0);
        for (std::size_t k = n_ + 1; k-- > 0;)
            remaining_[k] = remaining_[k + 1] + cfg_.lmax;
    }

    OracleResult run() {
        extend(0);
        return std::move(result_);
    }

private:
    void record(Point p) {
        if (std::abs(p.x) <= cfg_.window && std::abs(p.y) <= cfg_.window)
            result_.reachable.insert(p);
        if (p.y == 0 && p.x != 0) {
            Axis a = p.x > 0 ? Axis::PlusX : Axis::MinusX;
            auto& best = result_.closest[static_cast<int>(a)];
            if (!best || std::abs(p.x) < *best) best = std::abs(p.x);
        }
        if (p.x == 0 && p.y != 0) {
            Axis a = p.y > 0 ? Axis::PlusY : Axis::MinusY;
            auto& best = result_.closest[static_cast<int>(a)];
            if (!best || std::abs(p.y) < *best) best = std::abs(p.y);
        }
    }

    bool can_still_matter(Point q, std::size_t k) const {
        long long budget = remaining_[k];
        long long dx = std::max({q.x - cfg_.window, -cfg_.window - q.x, 0LL});
        long long dy = std::max({q.y - cfg_.window, -cfg_.window - q.y, 0LL});
        if (std::max(dx, dy) <= budget) return true;
        // Could still improve a closest-axis record outside the window.
        for (int a = 0; a < 4; ++a) {
            long long best = result_.closest[a] ? *result_.closest[a] - 1
                                                : std::numeric_limits<long long>::max() / 4;
            if (best < 1) continue;
            // Signed-axis segment from 1 to best along axis a.
            Point lo = dir_vector(static_cast<Axis>(a));
            long long ax_lo = 1, ax_hi = best;
            long long main = lo.x != 0 ? q.x * (lo.x) : q.y * (lo.y); // coordinate along axis direction
            long long off = lo.x != 0 ? std::abs(q.y) : std::abs(q.x);
            long long dmain = 0;
            if (main < ax_lo) dmain = ax_lo - main;
            else if (main > ax_hi) dmain = main - ax_hi;
            if (std::max(dmain, off) <= budget) return true;
        }
        return false;
    }

    void extend(std::size_t k) {
        if (++ticks_ % 4096 == 0 && cfg_.deadline &&
            std::chrono::steady_clock::now() > *cfg_.deadline)
            throw TimeoutError{};
        Point cur = verts_.back();
        if (k == n_ + 1) {
            record(cur);
            return;
        }
        if (!can_still_matter(cur, k)) return;
        Point d = dir_vector(dirs_[k]);
        for (long long len = 1; len <= cfg_.lmax; ++len) {
            Point nxt{cur.x + d.x * len, cur.y + d.y * len};
            Segment seg{cur, nxt};
            bool ok = true;
            // segments 0..k-2 are non-adjacent to segment k
            for (std::size_t j = 0; j + 1 < k; ++j) {
                if (segments_touch(seg, {verts_[j], verts_[j + 1]})) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                // longer lengths only extend this segment further; a touch on a
                // shorter prefix persists, but a longer segment may first touch at
                // greater length, so keep scanning.
                continue;
            }
            verts_.push_back(nxt);
            extend(k + 1);
            verts_.pop_back();
        }
    }

    const OracleConfig& cfg_;
    std::vector<Axis> dirs_;
    std::size_t n_;
    std::vector<Point> verts_;
    std::vector<long long> remaining_;
    OracleResult result_;
    mutable unsigned long long ticks_ = 0;
};

} // namespace detail

// Exhaustive enumeration of simple realizations with per-segment lengths in
// [1, lmax], with incremental self-intersection pruning.
inline OracleResult enumerate(const TurnSequence& s, const OracleConfig& cfg) {
    return detail::Enumerator(s, cfg).run();
}

inline std::optional<long long> exact_closest(const TurnSequence& s, Axis axis, const OracleConfig& cfg) {
    OracleResult r = enumerate(s, cfg);
    return r.closest[static_cast<int>(axis)];
}

// Convergence probe: runs the escalation ladder and reports whether the
// closest-axis answers were stable across the last two steps.
inline OracleResult enumerate_with_escalation(const TurnSequence& s, OracleConfig cfg) {
    if (cfg.escalation.empty()) return enumerate(s, cfg);
    OracleResult prev, cur;
    for (std::size_t i = 0; i < cfg.escalation.size(); ++i) {
        cfg.lmax = cfg.escalation[i];
        prev = std::move(cur);
        cur = enumerate(s, cfg);
        if (i > 0) cur.converged = (cur.closest == prev.closest);
    }
    return cur;
}

// Closure of a point set under the Stretching Lemma's three rules,
// intersected with the window [-window, window]^2.
inline std::set<Point> stretched_closure(const std::set<Point>& points, long long window) {
    std::set<Point> out;
    auto add_quadrant = [&](Point p) {
        long long sx = p.x > 0 ? 1 : -1, sy = p.y > 0 ? 1 : -1;
        for (long long i = 0;; ++i) {
            long long x = p.x + sx * i;
            if (std::abs(x) > window) break;
            if ((sx > 0 && x > window) || (sx < 0 && x < -window)) break;
            for (long long j = 0;; ++j) {
                long long y = p.y + sy * j;
                if (std::abs(y) > window) break;
                out.insert({x, y});
            }
        }
    };
    for (Point p : points) {
        if (std::abs(p.x) <= window && std::abs(p.y) <= window) out.insert(p);
        if (p.x != 0 && p.y != 0) {
            add_quadrant(p);
        } else if (p.x == 0 && p.y != 0) {
            long long sy = p.y > 0 ? 1 : -1;
            for (long long x = -window; x <= window; ++x)
                for (long long j = 0; std::abs(p.y + sy * j) <= window; ++j)
                    out.insert({x, p.y + sy * j});
        } else if (p.y == 0 && p.x != 0) {
            long long sx = p.x > 0 ? 1 : -1;
            for (long long y = -window; y <= window; ++y)
                for (long long i = 0; std::abs(p.x + sx * i) <= window; ++i)
                    out.insert({p.x + sx * i, y});
        }
    }
    return out;
}

} // namespace turnreach
