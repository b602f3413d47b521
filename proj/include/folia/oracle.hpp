#ifndef FOLIA_ORACLE_HPP
#define FOLIA_ORACLE_HPP

#include "folia/transversal.hpp"

namespace folia {

/// Exact-rational point in the plane.
struct Pt {
    Rat x, y;
    friend bool operator==(const Pt&, const Pt&) = default;
};

/// Straight-segment realization of a chart: each chord becomes an exact
/// segment between boundary points (disjoint straight chords realize every
/// boundary cyclic order, so nothing is lost).
struct Realization {
    Model model = Model::Disk;
    std::vector<std::pair<Pt, Pt>> segments;  // tail, head per chord
    long faces = 1;
};

Realization realize(const Chart& chart);

/// Boundary point of the realization for a chart coordinate.
Pt realize_point(Model m, const CircleCoord& c);

/// Side of mu decided geometrically from the supporting line of lambda.
Side oracle_side(Model m, const Chord& lambda, const Chord& mu);
bool oracle_separates(Model m, const Chord& psi, const Chord& lambda, const Chord& mu);

/// Relative order decided by brute-force connector geometry: straight
/// connectors from sampled anchors on lambda0 to the other chords' midpoints,
/// kept only when they avoid all three chords and each other; the forced sign
/// of t2 - t1 over all admissible pairs is the answer.
RelOrder oracle_relative_order(Model m, const Chord& lambda0, const Chord& lambda1,
                               const Chord& lambda2);

struct OracleReport {
    long checked = 0;
    long filtered = 0;
    long mismatches = 0;
    bool separation_filter_consistent = true;
    std::vector<std::string> details;
};

/// Exhaustive agreement sweep between the production order rule and the
/// geometric oracle over every labeling of six boundary points forming three
/// pairwise-disjoint chords, on two disk angle sets and all strip splits.
OracleReport oracle_sweep();

}  // namespace folia

#endif
