#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "fixtures.hpp"

using namespace folia;
using namespace folia::testfx;

namespace {

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("boundary keys realize the cyclic order") {
    BoundaryKey b0{0, Rat(0)}, b1{0, Rat(1, 2)}, t0{1, Rat(0)}, t1{1, Rat(-1, 2)};
    CHECK(b0 < b1);
    CHECK(b1 < t0);       // bottom section before top section
    CHECK(t1 < t0);       // top descending: larger value -> earlier key
    CHECK(boundary_key(Model::AnnulusCover, top(1, 2)) == t1);
    CHECK(boundary_key(Model::Disk, bot(1, 2)) == b1);
}

TEST_CASE("in_open_arc is endpoint-exclusive and wraps") {
    BoundaryKey a{0, Rat(1, 4)}, b{0, Rat(3, 4)}, k{0, Rat(1, 2)};
    CHECK(in_open_arc(a, b, k));
    CHECK_FALSE(in_open_arc(a, b, a));
    CHECK_FALSE(in_open_arc(a, b, b));
    CHECK_FALSE(in_open_arc(b, a, k));
    CHECK(in_open_arc(b, a, BoundaryKey{0, Rat(7, 8)}));  // wrapped arc
    CHECK(in_open_arc(b, a, BoundaryKey{0, Rat(1, 8)}));
}

TEST_CASE("nested disk chords build and compare") {
    Chart chart = build_chart({disk_chord("a", Rat(0), Rat(1, 2)),
                               disk_chord("b", Rat(1, 8), Rat(3, 8))},
                              Model::Disk);
    const Chord &a = chart.base_chord("a"), &b = chart.base_chord("b");
    CHECK(side_of(Model::Disk, a, b) == Side::RightSide);
    CHECK(side_of(Model::Disk, b, a) == Side::LeftSide);
    CHECK(compare_chords(Model::Disk, a, b) == Comparison::RMuInRLambda);
    CHECK(compare_chords(Model::Disk, b, a) == Comparison::RInRMu);
}

TEST_CASE("interleaving endpoints are rejected") {
    CHECK(chords_interleave(Model::Disk, disk_chord("a", Rat(0), Rat(1, 2)),
                            disk_chord("b", Rat(1, 4), Rat(3, 4))));
    CHECK(error_code([] {
              build_chart({disk_chord("a", Rat(0), Rat(1, 2)),
                           disk_chord("b", Rat(1, 4), Rat(3, 4))},
                          Model::Disk);
          }) == "InterleavingChords");
}

TEST_CASE("duplicate data is rejected") {
    CHECK(error_code([] {
              build_chart({disk_chord("a", Rat(0), Rat(0))}, Model::Disk);
          }) == "DuplicateEndpoint");
    CHECK(error_code([] {
              build_chart({disk_chord("a", Rat(0), Rat(1, 2)),
                           disk_chord("a", Rat(1, 8), Rat(3, 8))},
                          Model::Disk);
          }) == "DuplicateId");
    CHECK(error_code([] {
              build_chart({disk_chord("a", Rat(0), Rat(1, 2)),
                           disk_chord("b", Rat(1, 2), Rat(3, 4))},
                          Model::Disk);
          }) == "DuplicateEndpoint");
}

TEST_CASE("disk coordinates are normalized mod 1") {
    Chart chart = build_chart({disk_chord("a", Rat(5, 4), Rat(-1, 2))}, Model::Disk);
    CHECK(chart.base_chord("a").tail.value == Rat(1, 4));
    CHECK(chart.base_chord("a").head.value == Rat(1, 2));
}

TEST_CASE("strip model translates and windows") {
    Chart chart = crossing_chart(4);
    CHECK(chart.all_chords().size() == 3 * 9);  // bases times window span
    Chord f2 = chart.resolve({"F", 2});
    CHECK(f2.tail.value == Rat(29, 10));
    CHECK(f2.id.shift == 2);
    CHECK(error_code([&] { chart.resolve({"F", 5}); }) == "WindowExceeded");

    Chart disk = build_chart({disk_chord("a", Rat(0), Rat(1, 2))}, Model::Disk);
    CHECK(error_code([&] { disk.resolve({"a", 1}); }) == "WrongModel");
}

TEST_CASE("translate collisions are caught at build time") {
    // A bottom pocket of width 3/2 interleaves its own deck translate.
    CHECK(error_code([] {
              build_chart({chord("c", bot(0), bot(3, 2))}, Model::AnnulusCover, 4);
          }) == "InterleavingChords");
}

TEST_CASE("separation of disjoint chords") {
    Chart chart = build_chart({disk_chord("psi", Rat(3, 13), Rat(6, 13)),
                               disk_chord("a", Rat(1, 13), Rat(2, 13)),
                               disk_chord("b", Rat(4, 13), Rat(5, 13))},
                              Model::Disk);
    const Chord &psi = chart.base_chord("psi"), &a = chart.base_chord("a"),
                &b = chart.base_chord("b");
    CHECK(separates(Model::Disk, psi, a, b));
    CHECK_FALSE(separates(Model::Disk, a, psi, b));
    CHECK(error_code([&] {
              side_of(Model::Disk, psi, disk_chord("x", Rat(4, 13), Rat(1, 13)));
          }) == "NotDisjoint");
}

TEST_CASE("chord ids and rationals round-trip") {
    CHECK(parse_chord_id("F@-2") == ChordId{"F", -2});
    CHECK(parse_chord_id("F") == ChordId{"F", 0});
    CHECK(parse_chord_id("F@-2").str() == "F@-2");
    CHECK(parse_rat("-7/3") == Rat(-7, 3));
    CHECK(format_rat(Rat(-7, 3)) == "-7/3");
    CHECK(format_rat(Rat(4)) == "4");
    CHECK(error_code([] { parse_rat("1/0"); }) == "BadFraction");
    CHECK(error_code([] { parse_rat("x"); }) == "BadFraction");
}
