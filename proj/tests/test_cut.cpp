#include <catch2/catch_amalgamated.hpp>

#include "turnreach/cut.hpp"
#include "turnreach/oracle.hpp"

using namespace turnreach;

namespace {

std::vector<TurnSequence> all_sequences(std::size_t n) {
    std::vector<TurnSequence> out;
    for (std::size_t len = 0; len <= n; ++len)
        for (std::size_t mask = 0; mask < (1u << len); ++mask) {
            std::vector<Turn> ts;
            for (std::size_t i = 0; i < len; ++i)
                ts.push_back((mask >> i) & 1 ? Turn::R : Turn::L);
            out.emplace_back(std::move(ts));
        }
    return out;
}

// All simple realizations with lengths in [1, lmax].
void for_each_simple(const TurnSequence& s, long long lmax,
                     const std::function<void(const Chain&)>& fn) {
    std::vector<long long> lengths(s.size() + 1, 1);
    for (;;) {
        Chain c = realize(s, lengths);
        if (is_simple(c)) fn(c);
        std::size_t i = 0;
        while (i < lengths.size() && lengths[i] == lmax) lengths[i++] = 1;
        if (i == lengths.size()) break;
        ++lengths[i];
    }
}

} // namespace

TEST_CASE("stretch with straight vertical cut", "[cut]") {
    Chain c({{0, 0}, {1, 0}, {1, 1}});
    Chain out = stretch(c, vertical_line_cut(1), 3);
    CHECK(out.vertices() == std::vector<Point>{{0, 0}, {4, 0}, {4, 1}});

    // Both horizontal segments of the U cross x = 1/2 and stretch in
    // opposite directions; the endpoint stays put.
    Chain u({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    out = stretch(u, vertical_line_cut(1), 2);
    CHECK(out.vertices() == std::vector<Point>{{0, 0}, {3, 0}, {3, 1}, {0, 1}});
}

TEST_CASE("invalid cuts are rejected", "[cut]") {
    Chain c({{0, 0}, {1, 0}, {1, 1}});
    // A vertical line far east of the chain separates nothing.
    Cut far = vertical_line_cut(9);
    CHECK_THROWS_AS(stretch(c, far, 1), InvalidCutError);
}

TEST_CASE("standard cuts and their preconditions", "[cut]") {
    Chain c = realize(TurnSequence::parse("L"), {2, 3}); // endpoint (2,3)
    Cut v = standard_cut(c, CutTarget::VPlus);
    CHECK(v.monotone == Cut::Monotone::Y);
    CHECK(stretch(c, v, 2).endpoint() == Point{4, 3});
    Cut h = standard_cut(c, CutTarget::HPlus);
    CHECK(stretch(c, h, 2).endpoint() == Point{2, 5});
    CHECK_THROWS_AS(standard_cut(c, CutTarget::TowardYAxisLeft), IncompatibleTargetError);

    // Endpoint on the y-axis: LL realized as a U ending at (0,2).
    Chain u = realize(TurnSequence::parse("LL"), {1, 2, 1});
    REQUIRE(u.endpoint() == Point{0, 2});
    Chain left = stretch(u, standard_cut(u, CutTarget::TowardYAxisLeft), 3);
    CHECK(left.endpoint() == Point{-3, 2});
    Chain right = stretch(u, standard_cut(u, CutTarget::TowardYAxisRight), 2);
    CHECK(right.endpoint() == Point{2, 2});

    // Endpoint on the x-axis: a LLLL spiral closing back to (-1, 0).
    Chain sp = realize(TurnSequence::parse("LLLL"), {4, 2, 6, 2, 1});
    REQUIRE(sp.endpoint() == Point{-1, 0});
    Chain up = stretch(sp, standard_cut(sp, CutTarget::TowardXAxisUp), 2);
    CHECK(up.endpoint() == Point{-1, 2});
    Chain down = stretch(sp, standard_cut(sp, CutTarget::TowardXAxisDown), 2);
    CHECK(down.endpoint() == Point{-1, -2});
}

TEST_CASE("insert_gap keeps chains valid", "[cut]") {
    Chain u({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    Chain g = insert_gap(u, false, 0, 2);
    CHECK(g.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 3}, {0, 3}});
    CHECK(is_simple(g));
    // o-preserving flip: gap west of the origin moves nothing here.
    CHECK(insert_gap(u, true, -3, 1).vertices() == u.vertices());
}

TEST_CASE("stretching lemma closure on enumerated chains", "[cut][property]") {
    // For every simple chain with small lengths and every target (i,j),
    // composing the standard cuts reaches p + (sgn(a) i, sgn(b) j).
    for (const TurnSequence& s : all_sequences(5)) {
        for_each_simple(s, 2, [&](const Chain& chain) {
            Point p = chain.endpoint();
            if (p.x != 0 && p.y != 0) {
                for (int i = 0; i <= 2; ++i)
                    for (int j = 0; j <= 2; ++j) {
                        Chain c = chain;
                        if (i > 0) c = stretch(c, standard_cut(c, CutTarget::VPlus), i);
                        if (j > 0) c = stretch(c, standard_cut(c, CutTarget::HPlus), j);
                        Point q = c.endpoint();
                        long long sx = p.x > 0 ? 1 : -1, sy = p.y > 0 ? 1 : -1;
                        REQUIRE(q == Point{p.x + sx * i, p.y + sy * j});
                        REQUIRE(is_simple(c));
                        REQUIRE(turns_of(c) == s);
                    }
            } else if (p.x == 0 && p.y != 0) {
                for (int i = -2; i <= 2; ++i) {
                    Chain c = chain;
                    if (i < 0) c = stretch(c, standard_cut(c, CutTarget::TowardYAxisLeft), -i);
                    if (i > 0) c = stretch(c, standard_cut(c, CutTarget::TowardYAxisRight), i);
                    c = stretch(c, standard_cut(c, CutTarget::HPlus), 1);
                    long long sy = p.y > 0 ? 1 : -1;
                    REQUIRE(c.endpoint() == Point{p.x + i, p.y + sy});
                    REQUIRE(is_simple(c));
                }
            } else if (p.y == 0 && p.x != 0 && !s.empty()) {
                // The x-axis cuts need at least one turn (the first-bend detour).
                for (int j = -2; j <= 2; ++j) {
                    Chain c = chain;
                    if (j > 0) c = stretch(c, standard_cut(c, CutTarget::TowardXAxisUp), j);
                    if (j < 0) c = stretch(c, standard_cut(c, CutTarget::TowardXAxisDown), -j);
                    c = stretch(c, standard_cut(c, CutTarget::VPlus), 1);
                    long long sx = p.x > 0 ? 1 : -1;
                    REQUIRE(c.endpoint() == Point{p.x + sx, p.y + j});
                    REQUIRE(is_simple(c));
                }
            }
        });
    }
}
