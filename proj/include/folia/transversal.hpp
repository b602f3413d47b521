#ifndef FOLIA_TRANSVERSAL_HPP
#define FOLIA_TRANSVERSAL_HPP

#include "folia/path.hpp"

namespace folia {

enum class RelOrder { Above, Below };
enum class Sign { Positive, Negative };

/// Position of lambda2 relative to lambda1, as seen from the oriented
/// reference leaf lambda0 (the order in which disjoint connectors from
/// lambda0 can attach). Throws SeparationViolation when one of the three
/// chords separates the other two, NotDisjoint when they touch.
RelOrder relative_order(Model m, const Chord& lambda0, const Chord& lambda1, const Chord& lambda2);

/// Certificate of an F-transverse intersection at the common leaf phi.
/// Positive: path 2 comes from below path 1 and leaves above it, both
/// relative to phi (flank indices a < t < b into each chain).
struct IntersectionWitness {
    Chord phi;
    size_t a1, t1, b1;
    size_t a2, t2, b2;
    Sign sign;
    long deck = 0;  // deck power of the translate, for self-intersections
};

/// All witnesses between two chains, one per maximal common run, ordered by
/// (t1, t2). Flanks are taken at the boundary of the maximal run, which the
/// monotone structure of the below/above relations makes sufficient.
std::vector<IntersectionWitness> all_witnesses(const TransversePath& p1,
                                               const TransversePath& p2);

std::optional<IntersectionWitness> crosses_transversally(const TransversePath& p1,
                                                         const TransversePath& p2);

/// Self-intersections of a periodic path: witnesses of the unrolled chain
/// against its deck translates T^k, 0 < k <= max_k, with t1 kept in the
/// fundamental period (the deck-action normalization).
std::vector<IntersectionWitness> self_transverse(const PeriodicPath& p, long max_k);

/// Self-intersections of a finite strip path against its own deck translates.
std::vector<IntersectionWitness> self_witnesses(const TransversePath& p, long max_k);

bool has_F_transverse_self_intersection(const TransversePath& p);
bool has_F_transverse_self_intersection(const PeriodicPath& p);

/// Largest deck power the chart window allows when comparing p against its
/// translates.
long max_self_deck(const TransversePath& p);

}  // namespace folia

#endif
