#include <catch2/catch_amalgamated.hpp>

#include "turnreach/box_draw.hpp"
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

bool endpoint_at_corner(const Chain& c, const BoundingBox& b) {
    Point p = c.endpoint();
    return (p.x == b.xmin || p.x == b.xmax) && (p.y == b.ymin || p.y == b.ymax);
}

// I3: some box side incident to the endpoint carries no chain segment of
// positive length.
bool free_incident_side(const Chain& c, const BoundingBox& b) {
    Point p = c.endpoint();
    auto side_free = [&](bool horizontal, long long coord, long long lo, long long hi) {
        for (std::size_t k = 0; k < c.segment_count(); ++k) {
            Segment s = c.segment(k);
            if (s.horizontal() != horizontal) continue;
            if (horizontal && s.a.y == coord && std::min(hi, s.hi_x()) > std::max(lo, s.lo_x()))
                return false;
            if (!horizontal && s.a.x == coord && std::min(hi, s.hi_y()) > std::max(lo, s.lo_y()))
                return false;
        }
        return true;
    };
    bool ok = false;
    if (p.y == b.ymin) ok = ok || side_free(true, b.ymin, b.xmin, b.xmax);
    if (p.y == b.ymax) ok = ok || side_free(true, b.ymax, b.xmin, b.xmax);
    if (p.x == b.xmin) ok = ok || side_free(false, b.xmin, b.ymin, b.ymax);
    if (p.x == b.xmax) ok = ok || side_free(false, b.xmax, b.ymin, b.ymax);
    return ok;
}

} // namespace

TEST_CASE("box algorithm examples", "[box]") {
    BoxedChain b = box_draw(TurnSequence::parse(""));
    CHECK(b.box == BoundingBox{0, 1, 0, 0});
    b = box_draw(TurnSequence::parse("L"));
    CHECK(b.box.width() == 1);
    CHECK(b.box.height() == 1);
    b = box_draw(TurnSequence::parse("RR"));
    CHECK(b.box.width() == 2);
    CHECK(b.box.height() == 1);
}

TEST_CASE("box invariants I1-I3 at every prefix", "[box][property]") {
    for (const TurnSequence& s : all_sequences(9)) {
        for (std::size_t i = 0; i <= s.size(); ++i) {
            TurnSequence pre = s.sub(1, i);
            BoxedChain bc = box_draw(pre);
            REQUIRE(is_simple(bc.chain));
            REQUIRE(turns_of(bc.chain) == pre);
            long long w = 1 + static_cast<long long>(i) / 2;
            long long h = (static_cast<long long>(i) + 1) / 2;
            REQUIRE(bc.box.width() == w);
            REQUIRE(bc.box.height() == h);
            REQUIRE(endpoint_at_corner(bc.chain, bc.box));
            REQUIRE(free_incident_side(bc.chain, bc.box));
        }
    }
}

TEST_CASE("twobox produces simple realizations within the size bound", "[box][property]") {
    for (const TurnSequence& s : all_sequences(9)) {
        if (s.size() < 2) continue;
        long long cap = (static_cast<long long>(s.size()) + 2) / 2 + 2;
        for (std::size_t split = 1; split < s.size(); ++split) {
            Chain c = twobox_draw(s, split);
            REQUIRE(is_simple(c));
            REQUIRE(turns_of(c) == s);
            BoundingBox b = c.bbox();
            REQUIRE(b.width() <= cap);
            REQUIRE(b.height() <= cap);
        }
    }
    CHECK_THROWS_AS(twobox_draw(TurnSequence::parse("RLLR"), 0), InvalidSplitError);
}

TEST_CASE("axis witness small cases", "[box]") {
    Chain c = axis_witness(TurnSequence::parse("RR"), Axis::MinusY);
    CHECK(c.endpoint().x == 0);
    CHECK(c.endpoint().y <= -1);

    c = axis_witness(TurnSequence::parse("LL"), Axis::PlusY);
    CHECK(c.endpoint().x == 0);
    CHECK(c.endpoint().y >= 1);

    CHECK_THROWS_AS(axis_witness(TurnSequence::parse("LRLR"), Axis::PlusX), NoSuchHookError);
}

TEST_CASE("axis witness succeeds iff the matching hook exists", "[box][property]") {
    for (const TurnSequence& s : all_sequences(8)) {
        for (int a = 0; a < 4; ++a) {
            Axis axis = static_cast<Axis>(a);
            bool hook = has_hook_dir(s, hook_dir_of_axis(axis));
            if (hook) {
                Chain c = axis_witness(s, axis); // throws on an internal failure
                REQUIRE(is_simple(c));
                REQUIRE(turns_of(c) == s);
            } else {
                REQUIRE_THROWS_AS(axis_witness(s, axis), NoSuchHookError);
            }
        }
    }
}
