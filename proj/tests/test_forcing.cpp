#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "folia/forcing.hpp"

using namespace folia;
using namespace folia::testfx;

namespace {

struct Setup {
    Chart chart = crossing_chart();
    TransversePath p, tp;
    AdmissiblePath a1, a2;
    IntersectionWitness w;

    Setup() {
        p = validate_path(chart, crossing_chain());
        tp = shift_path(p, 1);
        a1 = declare_admissible(p, 1, OrderMode::Exact);
        a2 = declare_admissible(tp, 1, OrderMode::Exact);
        w = *crosses_transversally(p, tp);
    }
};

std::vector<ChordId> ids(std::initializer_list<const char*> names) {
    std::vector<ChordId> out;
    for (const char* n : names) out.push_back(parse_chord_id(n));
    return out;
}

}  // namespace

TEST_CASE("declare_admissible validates and upgrades at-most certificates") {
    Setup fx;
    CHECK_THROWS_WITH_AS(declare_admissible(fx.p, 0, OrderMode::Exact),
                         doctest::Contains("InvalidPath"), Error);
    // The chain has side leaves, so an at-most order is in fact attained.
    AdmissiblePath up = declare_admissible(fx.p, 3, OrderMode::AtMost);
    CHECK(up.mode == OrderMode::Exact);
    REQUIRE(up.provenance.size() == 1);
    CHECK(up.provenance.front().find("upgrade") == 0);
}

TEST_CASE("force_cross splices at the witness and adds the orders") {
    Setup fx;
    auto [o1, o2] = force_cross(fx.a1, fx.a2, fx.w);
    CHECK(o1.path.leaves == ids({"A", "F", "F@1", "F@2", "B@1"}));
    CHECK(o2.path.leaves == ids({"A@1", "F@1", "B"}));
    CHECK(o1.order == 2);
    CHECK(o2.order == 2);
    CHECK(o1.disjunction == std::pair<long, long>{1, 1});
    // Both outputs re-validate as transverse paths.
    CHECK(path_error(fx.chart, o1.path.leaves).empty());
    CHECK(path_error(fx.chart, o2.path.leaves).empty());

    IntersectionWitness stale = fx.w;
    stale.t1 = 1;
    CHECK_THROWS_WITH_AS(force_cross(fx.a1, fx.a2, stale), doctest::Contains("StaleWitness"),
                         Error);
}

TEST_CASE("chain_force with two items equals force_cross's first output") {
    Setup fx;
    std::vector<ChainItem> items = {{fx.a1, 0, fx.w.t1}, {fx.a2, fx.w.t2, fx.tp.size() - 1}};
    AdmissiblePath glued = chain_force(items, {fx.w});
    auto [o1, o2] = force_cross(fx.a1, fx.a2, fx.w);
    CHECK(glued.path.leaves == o1.path.leaves);
    CHECK(glued.order == o1.order);

    CHECK_THROWS_WITH_AS(chain_force({items[0]}, {}), doctest::Contains("HypothesisViolation"),
                         Error);
    std::vector<ChainItem> bad = items;
    bad[1].s = 2;  // junction no longer aligned with the witness
    CHECK_THROWS_WITH_AS(chain_force(bad, {fx.w}), doctest::Contains("HypothesisViolation"),
                         Error);
}

TEST_CASE("chain_force_positive rejects negative junctions") {
    Setup fx;
    IntersectionWitness neg = *crosses_transversally(fx.tp, fx.p);
    REQUIRE(neg.sign == Sign::Negative);
    std::vector<ChainItem> items = {{fx.a2, 0, neg.t1}, {fx.a1, neg.t2, fx.p.size() - 1}};
    CHECK_THROWS_WITH_AS(chain_force_positive(items, {neg}), doctest::Contains("SignViolation"),
                         Error);
    CHECK(chain_force(items, {neg}).order == 2);  // the unsigned rule accepts it
}

TEST_CASE("self_power repeats or excises the crossing block") {
    Setup fx;
    IntersectionWitness w = self_witnesses(fx.p, 1).front();
    auto [pw1, rm1] = self_power(fx.a1, w, 1);
    CHECK(pw1.path.leaves == fx.p.leaves);  // q = 1 keeps the chain
    CHECK(pw1.order == fx.a1.order);
    CHECK(rm1.path.leaves == ids({"A", "F", "B@-1"}));
    CHECK(rm1.order == fx.a1.order);

    auto [pw2, rm2] = self_power(fx.a1, w, 2);
    CHECK(pw2.path.leaves == ids({"A", "F", "F@1", "F@2", "B@1"}));
    CHECK(pw2.order == 2 * fx.a1.order);
    CHECK(rm2.path.leaves == rm1.path.leaves);

    CHECK_THROWS_WITH_AS(self_power(fx.a1, w, 0), doctest::Contains("HypothesisViolation"), Error);
    IntersectionWitness stale = w;
    stale.deck = 2;
    CHECK_THROWS_WITH_AS(self_power(fx.a1, stale, 2), doctest::Contains("StaleWitness"), Error);
}

TEST_CASE("remove_self_intersections reaches a crossing-free chain") {
    Setup fx;
    IntersectionWitness w = self_witnesses(fx.p, 1).front();
    AdmissiblePath pw = self_power(fx.a1, w, 3).first;
    AdmissiblePath reduced = remove_self_intersections(pw);
    CHECK(self_witnesses(reduced.path, max_self_deck(reduced.path)).empty());
    CHECK(reduced.order == pw.order);
    CHECK(reduced.path.leaves.front() == pw.path.leaves.front());
    // End leaf preserved up to a deck power.
    CHECK(reduced.path.leaves.back().base == pw.path.leaves.back().base);
    // Idempotent.
    CHECK(remove_self_intersections(reduced).path.leaves == reduced.path.leaves);
}

TEST_CASE("a recurrent positive crossing certifies a linearly admissible loop") {
    Setup fx;
    LinearAdmissibilityCertificate cert =
        loop_from_recurrent_crossing(fx.a1, fx.a2, fx.w, {2, 3});
    CHECK(cert.deck == 2);
    CHECK(cert.q == 2);
    CHECK(cert.period == ids({"F@1", "F@2"}));
    REQUIRE(cert.witnesses.size() == 3);
    CHECK(cert.witnesses[2] == std::pair<long, long>{3, 6});
    CHECK(cert.achieved_ratio == Rat(1, 2));
    CHECK(cert.achieved_ratio >= Rat(1, cert.q));

    CHECK_THROWS_WITH_AS(loop_from_recurrent_crossing(fx.a1, fx.a2, fx.w, {0, 3}),
                         doctest::Contains("HypothesisViolation"), Error);
    IntersectionWitness neg = *crosses_transversally(fx.tp, fx.p);
    CHECK_THROWS_WITH_AS(loop_from_recurrent_crossing(fx.a2, fx.a1, neg, {2, 3}),
                         doctest::Contains("HypothesisViolation"), Error);
}
