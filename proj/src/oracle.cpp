#include "folia/oracle.hpp"

#include <algorithm>
#include <map>

namespace folia {

namespace {

Rat cross3(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sgn(const Rat& r) { return r > 0 ? 1 : r < 0 ? -1 : 0; }

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (sgn(cross3(a, b, p)) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Interiors cross (shared endpoints and endpoint-on-segment contacts are
/// not proper crossings).
bool proper_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int d1 = sgn(cross3(c, d, a)), d2 = sgn(cross3(c, d, b));
    int d3 = sgn(cross3(a, b, c)), d4 = sgn(cross3(a, b, d));
    return d1 * d2 < 0 && d3 * d4 < 0;
}

/// Any contact at all, including touching and collinear overlap.
bool segments_meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (proper_cross(a, b, c, d)) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
           on_segment(c, d, b);
}

Pt midpoint(const Pt& a, const Pt& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

Pt lerp(const Pt& a, const Pt& b, const Rat& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Pt disk_point(const Rat& theta) {
    if (theta == 0) return {Rat(-1), Rat(0)};
    // Monotone rational chart of the circle: theta in (0,1) -> u in R,
    // u -> ((1-u^2)/(1+u^2), 2u/(1+u^2)) traverses the circle ccw.
    Rat u = (2 * theta - 1) / (2 * theta * (1 - theta));
    Rat den = 1 + u * u;
    return {(1 - u * u) / den, 2 * u / den};
}

/// Order-isomorphic disk placement for a set of boundary coordinates: the
/// strip's ideal boundary circle placed at evenly spread rational angles.
std::map<BoundaryKey, Pt> cyclic_placement(Model m, const std::vector<CircleCoord>& coords) {
    std::vector<BoundaryKey> keys;
    for (const auto& c : coords) keys.push_back(boundary_key(m, c));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::map<BoundaryKey, Pt> out;
    long n = static_cast<long>(keys.size());
    for (long j = 0; j < n; ++j) out[keys[j]] = disk_point(Rat(2 * j + 1, 2 * n));
    return out;
}

struct Placed {
    Pt t, h;
};

std::vector<Placed> place_chords(Model m, const std::vector<Chord>& chords) {
    std::vector<Placed> out;
    if (m == Model::Disk) {
        for (const Chord& c : chords)
            out.push_back({disk_point(c.tail.value), disk_point(c.head.value)});
        return out;
    }
    std::vector<CircleCoord> coords;
    for (const Chord& c : chords) {
        coords.push_back(c.tail);
        coords.push_back(c.head);
    }
    auto pos = cyclic_placement(m, coords);
    for (const Chord& c : chords)
        out.push_back({pos.at(boundary_key(m, c.tail)), pos.at(boundary_key(m, c.head))});
    return out;
}

}  // namespace

Pt realize_point(Model m, const CircleCoord& c) {
    if (m == Model::Disk) return disk_point(c.value);
    return {c.value, c.line == BoundaryLine::Bottom ? Rat(0) : Rat(1)};
}

Realization realize(const Chart& chart) {
    Realization real;
    real.model = chart.model();
    std::vector<Chord> chords = chart.all_chords();
    std::vector<Placed> placed = place_chords(chart.model(), chords);
    for (const Placed& p : placed) {
        for (const auto& [t, h] : real.segments)
            if (segments_meet(p.t, p.h, t, h))
                fail("InterleavingChords", "realization segments meet");
        real.segments.emplace_back(p.t, p.h);
    }
    // Each disjoint chord splits exactly one face of the convex region.
    real.faces = 1 + static_cast<long>(real.segments.size());
    return real;
}

Side oracle_side(Model m, const Chord& lambda, const Chord& mu) {
    std::vector<Placed> p = place_chords(m, {lambda, mu});
    if (segments_meet(p[0].t, p[0].h, p[1].t, p[1].h))
        fail("NotDisjoint", lambda.id.str() + " / " + mu.id.str());
    int s = sgn(cross3(p[0].t, p[0].h, midpoint(p[1].t, p[1].h)));
    if (s == 0) fail("NotDisjoint", "degenerate side configuration");
    return s < 0 ? Side::RightSide : Side::LeftSide;
}

bool oracle_separates(Model m, const Chord& psi, const Chord& lambda, const Chord& mu) {
    std::vector<Placed> p = place_chords(m, {psi, lambda, mu});
    int a = sgn(cross3(p[0].t, p[0].h, midpoint(p[1].t, p[1].h)));
    int b = sgn(cross3(p[0].t, p[0].h, midpoint(p[2].t, p[2].h)));
    if (a == 0 || b == 0) fail("NotDisjoint", "degenerate separation configuration");
    return a != b;
}

RelOrder oracle_relative_order(Model m, const Chord& l0, const Chord& l1, const Chord& l2) {
    std::vector<Placed> p = place_chords(m, {l0, l1, l2});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (segments_meet(p[i].t, p[i].h, p[j].t, p[j].h))
                fail("NotDisjoint", "oracle: chords meet");
    for (int i = 0; i < 3; ++i) {
        int a = sgn(cross3(p[i].t, p[i].h, midpoint(p[(i + 1) % 3].t, p[(i + 1) % 3].h)));
        int b = sgn(cross3(p[i].t, p[i].h, midpoint(p[(i + 2) % 3].t, p[(i + 2) % 3].h)));
        if (a != b) fail("SeparationViolation", "oracle: a chord separates the others");
    }
    Pt mid1 = midpoint(p[1].t, p[1].h), mid2 = midpoint(p[2].t, p[2].h);
    const int G = 8;
    std::vector<Pt> anchors;
    for (int i = 1; i <= G; ++i) anchors.push_back(lerp(p[0].t, p[0].h, Rat(i, G + 1)));
    auto connector_ok = [&](const Pt& a, const Pt& target) {
        for (int i = 0; i < 3; ++i)
            if (proper_cross(a, target, p[i].t, p[i].h)) return false;
        return true;
    };
    bool above_vote = false, below_vote = false;
    for (int i = 0; i < G; ++i) {
        if (!connector_ok(anchors[i], mid1)) continue;
        for (int j = 0; j < G; ++j) {
            if (j == i || !connector_ok(anchors[j], mid2)) continue;
            if (segments_meet(anchors[i], mid1, anchors[j], mid2)) continue;
            (j > i ? above_vote : below_vote) = true;
        }
    }
    if (above_vote == below_vote)
        fail("OracleAmbiguous", above_vote ? "both connector orders realizable"
                                           : "no admissible connector pair found");
    return above_vote ? RelOrder::Above : RelOrder::Below;
}

namespace {

const char* order_name(RelOrder o) { return o == RelOrder::Above ? "Above" : "Below"; }

void sweep_configuration(Model m, const std::vector<CircleCoord>& slots,
                         const std::vector<int>& perm, OracleReport& rep) {
    Chord ch[3];
    const char* names[3] = {"a", "b", "c"};
    for (int k = 0; k < 3; ++k) {
        ch[k].id = {names[k], 0};
        ch[k].tail = slots[perm[2 * k]];
        ch[k].head = slots[perm[2 * k + 1]];
    }
    std::vector<Placed> placed = place_chords(m, {ch[0], ch[1], ch[2]});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            bool geo = proper_cross(placed[i].t, placed[i].h, placed[j].t, placed[j].h);
            if (geo != chords_interleave(m, ch[i], ch[j])) {
                ++rep.mismatches;
                rep.details.push_back("interleave disagreement");
                return;
            }
            if (geo) return;  // crossing chords: outside the predicate's domain
        }
    // Cross-validate the side and separation predicates on the disjoint triple.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (side_of(m, ch[i], ch[j]) != oracle_side(m, ch[i], ch[j])) {
                ++rep.mismatches;
                rep.details.push_back("side disagreement");
                return;
            }
        }
    bool separated = false;
    for (int i = 0; i < 3; ++i) {
        bool geo = oracle_separates(m, ch[i], ch[(i + 1) % 3], ch[(i + 2) % 3]);
        if (geo != separates(m, ch[i], ch[(i + 1) % 3], ch[(i + 2) % 3])) {
            ++rep.mismatches;
            rep.details.push_back("separation disagreement");
            return;
        }
        separated = separated || geo;
    }
    if (separated) {
        ++rep.filtered;
        try {
            relative_order(m, ch[0], ch[1], ch[2]);
            rep.separation_filter_consistent = false;
            rep.details.push_back("missing SeparationViolation");
        } catch (const Error& e) {
            if (e.code() != "SeparationViolation") {
                rep.separation_filter_consistent = false;
                rep.details.push_back("wrong error on separated triple: " + std::string(e.code()));
            }
        }
        return;
    }
    ++rep.checked;
    RelOrder got = relative_order(m, ch[0], ch[1], ch[2]);
    RelOrder want = oracle_relative_order(m, ch[0], ch[1], ch[2]);
    if (got != want) {
        ++rep.mismatches;
        rep.details.push_back(std::string("order mismatch: production ") + order_name(got) +
                              ", oracle " + order_name(want));
    }
}

void sweep_slots(Model m, const std::vector<CircleCoord>& slots, OracleReport& rep) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    do {
        sweep_configuration(m, slots, perm, rep);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

OracleReport oracle_sweep() {
    OracleReport rep;
    std::vector<std::vector<Rat>> disk_sets = {
        {Rat(1, 13), Rat(2, 13), Rat(4, 13), Rat(6, 13), Rat(9, 13), Rat(11, 13)},
        {Rat(1, 7), Rat(2, 7), Rat(3, 7), Rat(33, 70), Rat(5, 7), Rat(6, 7)}};
    for (const auto& set : disk_sets) {
        std::vector<CircleCoord> slots;
        for (const Rat& v : set) slots.push_back({BoundaryLine::Bottom, v});
        sweep_slots(Model::Disk, slots, rep);
    }
    for (int split = 0; split <= 6; ++split) {
        // Counterclockwise boundary order: bottom ascending, then top
        // descending; slot j past the split goes on top at decreasing value.
        std::vector<CircleCoord> slots;
        for (int j = 0; j < 6; ++j) {
            if (j < split)
                slots.push_back({BoundaryLine::Bottom, Rat(2 * j + 1, 2)});
            else
                slots.push_back({BoundaryLine::Top, Rat(2 * (6 - j) + 1, 2)});
        }
        sweep_slots(Model::AnnulusCover, slots, rep);
    }
    return rep;
}

}  // namespace folia
