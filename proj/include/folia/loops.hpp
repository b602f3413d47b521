#ifndef FOLIA_LOOPS_HPP
#define FOLIA_LOOPS_HPP

#include "folia/transversal.hpp"

namespace folia {

/// A transverse loop, carried by the natural lift of one of its periods.
struct TransverseLoop {
    PeriodicPath periodic;
};

TransverseLoop make_loop(const Chart& chart, const std::vector<ChordId>& period, long shift = 1);

/// Equality of loops up to cyclic rotation of the period composed with a
/// deck power.
bool loop_equivalent(const TransverseLoop& g1, const TransverseLoop& g2);

/// False iff the loop is a proper power: its period chain is an n-fold
/// deck-compatible repetition for some n >= 2.
bool is_prime(const TransverseLoop& g);

struct LoopStats {
    std::optional<long> width;  // absent = still growing at the window cutoff
    long self_count = 0;
    long m_gamma = 1;
    long window_used = 0;
};

LoopStats loop_stats(const TransverseLoop& g, long window);

/// Loop stats for a finite strip chain scanned against its deck translates;
/// the finite-window carrier of self-crossing phenomena.
LoopStats window_stats(const TransversePath& p, long window);

/// Either the simple loop a self-transverse-free periodic path reduces to,
/// or the obstructing witness.
struct PBResult {
    std::optional<TransverseLoop> loop;
    std::optional<IntersectionWitness> obstruction;
};

PBResult pb_reduce(const PeriodicPath& p);

/// Checkable hypothesis of the bounded-leaves statement: the classes span
/// rank 2 over the rationals and sum to zero.
bool ths_certificate(const std::vector<std::pair<long, long>>& classes);

}  // namespace folia

#endif
