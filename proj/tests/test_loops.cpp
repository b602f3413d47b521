#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "folia/loops.hpp"

using namespace folia;
using namespace folia::testfx;

namespace {

Chart slant_chart(long window = 16) {
    return build_chart({chord("F", top(9, 10), bot(9, 10)), chord("G", top(2, 5), bot(2, 5))},
                       Model::AnnulusCover, window);
}

}  // namespace

TEST_CASE("loops are equal up to rotation composed with a deck power") {
    Chart chart = slant_chart();
    TransverseLoop g = make_loop(chart, {{"G", 0}, {"F", 0}}, 1);
    TransverseLoop rot = make_loop(chart, {{"F", 0}, {"G", 1}}, 1);
    TransverseLoop shifted = make_loop(chart, {{"G", 2}, {"F", 2}}, 1);
    CHECK(loop_equivalent(g, rot));
    CHECK(loop_equivalent(g, shifted));
    TransverseLoop doubled = make_loop(chart, {{"G", 0}, {"F", 0}, {"G", 1}, {"F", 1}}, 2);
    CHECK_FALSE(loop_equivalent(g, doubled));
}

TEST_CASE("proper powers are not prime") {
    Chart chart = slant_chart();
    CHECK(is_prime(make_loop(chart, {{"G", 0}, {"F", 0}}, 1)));
    CHECK_FALSE(is_prime(make_loop(chart, {{"G", 0}, {"F", 0}, {"G", 1}, {"F", 1}}, 2)));
}

TEST_CASE("a simple line has trivial loop invariants") {
    // A one-slant chart: [F] skips no other leaf, so it carries a line.
    Chart chart = build_chart({chord("F", top(9, 10), bot(9, 10))}, Model::AnnulusCover, 16);
    TransverseLoop g = make_loop(chart, {{"F", 0}}, 1);
    LoopStats st = loop_stats(g, 6);
    CHECK(st.self_count == 0);
    CHECK(st.width == 0);
    CHECK(st.m_gamma == 1);
    CHECK(st.window_used == 6);
    CHECK_THROWS_WITH_AS(loop_stats(g, 100), doctest::Contains("WindowExceeded"), Error);
}

TEST_CASE("window_stats detects the deck-translate crossing of a finite chain") {
    Chart chart = crossing_chart();
    TransversePath p = validate_path(chart, crossing_chain());
    LoopStats st = window_stats(p, 8);
    CHECK(st.self_count == 1);
    REQUIRE(st.width.has_value());
    CHECK(*st.width == 1);
    CHECK(st.m_gamma == 1 * 1 * 2 + 1);
}

TEST_CASE("pb_reduce returns the primitive simple loop") {
    Chart chart = build_chart({chord("F", top(9, 10), bot(9, 10))}, Model::AnnulusCover, 16);
    PeriodicPath line = validate_periodic(chart, {{"F", 0}, {"F", 1}}, 2);
    PBResult res = pb_reduce(line);
    REQUIRE(res.loop.has_value());
    CHECK(res.loop->periodic.base.leaves == std::vector<ChordId>{{"F", 0}});
    CHECK(res.loop->periodic.shift == 1);
    CHECK_FALSE(res.obstruction.has_value());
}

TEST_CASE("pb_reduce reports the obstructing witness on a self-crossing carrier") {
    Chart chart = crossing_chart();
    // Not a valid line: the finite crossing chain fed in as periodic carrier.
    PeriodicPath carrier{TransversePath{&chart, crossing_chain()}, 1};
    PBResult res = pb_reduce(carrier);
    CHECK_FALSE(res.loop.has_value());
    REQUIRE(res.obstruction.has_value());
    CHECK(res.obstruction->phi.id.base == "F");
}

TEST_CASE("ths_certificate checks rank and zero sum") {
    CHECK(ths_certificate({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK_FALSE(ths_certificate({{1, 0}, {-1, 0}}));       // rank 1
    CHECK_FALSE(ths_certificate({{1, 2}, {2, 1}}));        // nonzero sum
    CHECK_FALSE(ths_certificate({}));
}
