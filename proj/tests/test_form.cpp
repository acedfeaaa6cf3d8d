#include <catch2/catch_amalgamated.hpp>

#include "turnreach/form.hpp"

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

} // namespace

TEST_CASE("form_draw bases", "[form]") {
    CHECK(form_draw(TurnSequence::parse("")).vertices() == std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(form_draw(TurnSequence::parse("L")).endpoint() == Point{1, 1});
    CHECK(form_draw(TurnSequence::parse("LL")).endpoint() == Point{0, 1});
}

TEST_CASE("lr_draw small examples", "[form]") {
    // LR reduces to the empty word; reconstruction inserts one jog.
    BoxedChain lr = lr_draw(TurnSequence::parse("LR"));
    CHECK(lr.chain.segment_count() == 3);
    CHECK(is_simple(lr.chain));
    // Spiral base for LLL wraps counterclockwise.
    BoxedChain lll = lr_draw(TurnSequence::parse("LLL"));
    CHECK(turns_of(lll.chain).str() == "LLL");
    // RL: delta 0, endpoints on opposite sides, last segment within one side.
    BoxedChain rl = lr_draw(TurnSequence::parse("RL"));
    BoundingBox box = rl.chain.bbox();
    CHECK((rl.exit.x == box.xmax));
}

TEST_CASE("form_draw postconditions hold exhaustively", "[form][property]") {
    for (const TurnSequence& s : all_sequences(11)) {
        int d = s.excess();
        if (d < -2 || d > 2) continue;
        Chain c = form_draw(s); // internal postcondition checks throw on failure
        REQUIRE(is_simple(c));
        REQUIRE(turns_of(c) == s);
        BoundingBox box = c.bbox();
        Point b = c.endpoint();
        REQUIRE(box.xmin == 0);
        switch (d) {
            case 2:
                REQUIRE(b.x == 0);
                REQUIRE(b.y >= 1);
                break;
            case 1:
                REQUIRE(b.y == box.ymax);
                break;
            case 0:
                REQUIRE(b.x == box.xmax);
                if (!s.empty()) REQUIRE((b.y == box.ymax || b.y == box.ymin));
                break;
            case -1:
                REQUIRE(b.y == box.ymin);
                break;
            case -2:
                REQUIRE(b.x == 0);
                REQUIRE(b.y <= -1);
                break;
        }
    }
}

TEST_CASE("lemma 4: endpoints on box sides for small excess", "[form][property]") {
    for (const TurnSequence& s : all_sequences(12)) {
        int d = s.excess();
        if (d < -2 || d > 2) continue;
        BoxedChain bc = lr_draw(s);
        BoundingBox box = bc.box;
        auto on_side = [&](Point p) {
            return p.x == box.xmin || p.x == box.xmax || p.y == box.ymin || p.y == box.ymax;
        };
        REQUIRE(on_side(bc.entry));
        REQUIRE(on_side(bc.exit));
        if (d == 0 && !s.empty()) {
            // Last segment contained in one box side.
            Segment last = bc.chain.segment(bc.chain.segment_count() - 1);
            REQUIRE(last.horizontal());
            REQUIRE((last.a.y == box.ymin || last.a.y == box.ymax));
        }
    }
}

TEST_CASE("lr_chain is valid for arbitrary excess", "[form][property]") {
    for (const TurnSequence& s : all_sequences(10)) {
        Chain c = lr_chain(s);
        REQUIRE(is_simple(c));
        REQUIRE(turns_of(c) == s);
    }
    // A couple of long lopsided words exercise the spiral base.
    for (const char* w : {"LLLLLLLLLLLLLL", "LLLLLRLLLLRLLL", "RRRRRRRRRRRL"}) {
        Chain c = lr_chain(TurnSequence::parse(w));
        REQUIRE(is_simple(c));
        REQUIRE(turns_of(c).str() == w);
    }
}
