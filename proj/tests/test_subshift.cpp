#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "folia/subshift.hpp"

using namespace folia;
using namespace folia::testfx;

namespace {

CrossingPair tpair(size_t i, size_t pos, std::vector<size_t> strong = {}) {
    return {i, PairKind::Transverse, pos, std::move(strong)};
}

CrossingPair npair(size_t i) { return {i, PairKind::NonTransverse, 0, {}}; }

std::vector<std::string> rows(const IncidenceMatrix& P) { return render(P); }

}  // namespace

TEST_CASE("diagram validation") {
    CHECK_NOTHROW(make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1), npair(2)}));
    // Involution must be fixed-point free and well formed.
    CHECK_THROWS_WITH_AS(make_diagram(2, {1, 4, 3, 2}, {npair(1), npair(2)}),
                         doctest::Contains("InvalidDiagram"), Error);
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1}, {}), doctest::Contains("InvalidDiagram"),
                         Error);
    // Pairs are named by their smaller encounter, once each.
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {tpair(3, 3), npair(2)}),
                         doctest::Contains("InvalidDiagram"), Error);
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1)}),
                         doctest::Contains("InvalidDiagram"), Error);
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1), tpair(1, 3)}),
                         doctest::Contains("InvalidDiagram"), Error);
    // Positive encounter and strong flags must belong to the pair.
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {tpair(1, 2), npair(2)}),
                         doctest::Contains("InvalidDiagram"), Error);
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1, {2}), npair(2)}),
                         doctest::Contains("InvalidDiagram"), Error);
    // Non-transverse pairs carry no crossing data.
    CrossingPair bad = npair(1);
    bad.positive_encounter = 1;
    CHECK_THROWS_WITH_AS(make_diagram(2, {3, 4, 1, 2}, {bad, npair(2)}),
                         doctest::Contains("InvalidDiagram"), Error);
}

TEST_CASE("incidence matrices of the first worked example") {
    MatrixTriple t = build_matrices(example_diagram(1));
    CHECK(rows(t.strong) == std::vector<std::string>{"0 1 0 0 0", "0 0 1 0 0", "0 0 0 1 0",
                                                     "0 0 0 0 1", "0 0 0 0 0"});
    CHECK(rows(t.left) == std::vector<std::string>{"0 1 0 1 0", "0 0 1 0 0", "0 0 0 1 0",
                                                   "0 0 1 0 1", "0 0 0 0 0"});
    CHECK(rows(t.right) == std::vector<std::string>{"0 1 0 0 0", "0 0 1 0 1", "0 1 0 1 0",
                                                    "0 0 0 0 1", "0 0 0 0 0"});
}

TEST_CASE("strong entries require the strong flag on both encounters") {
    MatrixTriple t3 = build_matrices(example_diagram(3));
    CHECK(rows(t3.strong) == std::vector<std::string>{"0 1 0 1 0", "0 0 1 0 1", "0 1 0 1 0",
                                                      "0 0 1 0 1", "0 0 0 0 0"});
    // Same crossing signs as example 1, so left/right agree with it.
    MatrixTriple t1 = build_matrices(example_diagram(1));
    CHECK(rows(t3.left) == rows(t1.left));
    CHECK(rows(t3.right) == rows(t1.right));
}

TEST_CASE("matrix round-trips through decode_diagram") {
    for (int which = 1; which <= 4; ++which) {
        MatrixTriple t = build_matrices(example_diagram(which));
        MatrixTriple back = build_matrices(decode_diagram(t));
        CHECK(back.strong.m == t.strong.m);
        CHECK(back.left.m == t.left.m);
        CHECK(back.right.m == t.right.m);
    }
}

TEST_CASE("spectral radius distinguishes exact and iterative regimes") {
    MatrixTriple t1 = build_matrices(example_diagram(1));
    MatrixTriple t2 = build_matrices(example_diagram(2));
    MatrixTriple t3 = build_matrices(example_diagram(3));
    CHECK(spectral_radius(t1.strong).exact_zero);  // nilpotent chain
    CHECK(spectral_radius(t1.left).exact_one);     // bare 2-cycle
    CHECK(spectral_radius(t1.right).exact_one);
    CHECK(spectral_radius(t2.right).exact_zero);
    SpectralRadius r2 = spectral_radius(t2.left);
    CHECK_FALSE(r2.exact_zero);
    CHECK_FALSE(r2.exact_one);
    CHECK(std::fabs(r2.value - 1.4655712318767682) < 1e-9);  // root of x^3 - x^2 - 1
    CHECK(std::fabs(spectral_radius(t3.strong).value - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("entropy bounds") {
    MatrixTriple t3 = build_matrices(example_diagram(3));
    CHECK(std::fabs(entropy_lower_bound(t3.strong, 1) - std::log(2.0) / 2) < 1e-9);
    CHECK(entropy_lower_bound(build_matrices(example_diagram(1)).left, 1) == 0.0);
    for (long r = 1; r <= 5; ++r) CHECK(entropy_selfloop_bound(r) == std::log(2.0) / (4 * r));
}

TEST_CASE("admissible words agree with the transfer-matrix count") {
    IncidenceMatrix left = build_matrices(example_diagram(1)).left;
    auto words = admissible_words(left, 4);
    CHECK(words.size() == 7);
    CHECK(word_count(left, 4) == 7);
    // Lexicographic order and switch counting.
    CHECK(words.front().word == std::vector<size_t>{0, 1, 2, 3});
    CHECK(words.front().switches == 0);
    CHECK(words[1].word == std::vector<size_t>{0, 3, 2, 3});
    CHECK(words[1].switches == 2);
    CHECK(words[1].order == 2);  // switches times the base order
    CHECK(admissible_words(left, 4, 5)[1].order == 10);
    CHECK_THROWS_WITH_AS(admissible_words(left, 12, 1, 3), doctest::Contains("ExplosionGuard"),
                         Error);
}

TEST_CASE("palindromic words mirror their halves") {
    auto ws = palindromic_words(2);
    REQUIRE(ws.size() == 4);
    for (const auto& w : ws) {
        REQUIRE(w.size() == 4);
        CHECK(w[0] == w[3]);
        CHECK(w[1] == w[2]);
    }
    CHECK_THROWS_WITH_AS(palindromic_words(12, 8), doctest::Contains("ExplosionGuard"), Error);
}

TEST_CASE("palindrome block loops and class counting") {
    PalindromeFixture fx = example_palindrome_blocks();
    TransversePath b1 = validate_path(fx.chart, fx.block1);
    TransversePath b2 = validate_path(fx.chart, fx.block2);
    long expected[] = {2, 3, 6, 9};  // distinct necklaces with a palindromic representative
    for (int n = 1; n <= 4; ++n) {
        auto loops = build_palindrome_loops(b1, b2, palindromic_words(n, n));
        CHECK(loops.size() == (1u << n));
        CHECK(count_loop_classes(loops) == expected[n - 1]);
    }
    Chart other = crossing_chart();
    TransversePath foreign = validate_path(other, {{"F", 0}});
    CHECK_THROWS_WITH_AS(build_palindrome_loops(b1, foreign, palindromic_words(2)),
                         doctest::Contains("ChartMismatch"), Error);
}

TEST_CASE("word_to_path concatenates bound segments") {
    // Five consecutive slants; segment i is bound to the i-th slant.
    std::vector<Chord> chords;
    for (int i = 0; i < 5; ++i)
        chords.push_back(chord("S" + std::to_string(i), topr(Rat(2 * i + 1, 10)),
                               botr(Rat(2 * i + 1, 10))));
    Chart chart = build_chart(chords, Model::AnnulusCover, 4);
    IncidenceMatrix P = build_matrices(example_diagram(1)).left;
    SegmentBinding binding;
    for (size_t i = 0; i < 5; ++i) binding[i] = {{"S" + std::to_string(i), 0}};
    TransversePath p = word_to_path(chart, P, binding, {0, 1, 2, 3});
    CHECK(p.size() == 4);
    CHECK_THROWS_WITH_AS(word_to_path(chart, P, binding, {0, 2}),
                         doctest::Contains("SpliceInvalid"), Error);
    binding.erase(2);
    CHECK_THROWS_WITH_AS(word_to_path(chart, P, binding, {0, 1, 2, 3}),
                         doctest::Contains("UnboundIndex"), Error);
}
