#ifndef FOLIA_FORCING_HPP
#define FOLIA_FORCING_HPP

#include "folia/transversal.hpp"

namespace folia {

enum class OrderMode { Exact, AtMost };

/// Admissibility certificate: a declared order on a valid path, rewritten by
/// the forcing rules below. Orders originate as axiomatic inputs; the module
/// is a sound calculus over them, with provenance recording each rewrite.
struct AdmissiblePath {
    TransversePath path;
    long order = 1;
    OrderMode mode = OrderMode::Exact;
    std::vector<std::string> provenance;
    // Unresolved refinement of the crossing rule: one output has order
    // disjunction.first or both have disjunction.second; undecidable here.
    std::optional<std::pair<long, long>> disjunction;
};

AdmissiblePath declare_admissible(const TransversePath& path, long n, OrderMode mode);

/// Splices the two chains at a crossing witness; both outputs carry order
/// n1 + n2 and the unresolved min/max disjunction.
std::pair<AdmissiblePath, AdmissiblePath> force_cross(const AdmissiblePath& a1,
                                                      const AdmissiblePath& a2,
                                                      const IntersectionWitness& w);

/// One link of a gluing chain: the certificate plus the split window [s, t]
/// contributed to the product. Consecutive items must cross at t_i / s_{i+1}.
struct ChainItem {
    AdmissiblePath ap;
    size_t s = 0;
    size_t t = 0;
};

AdmissiblePath chain_force(const std::vector<ChainItem>& items,
                           const std::vector<IntersectionWitness>& witnesses);

/// As chain_force but every junction witness must be Positive.
AdmissiblePath chain_force_positive(const std::vector<ChainItem>& items,
                                    const std::vector<IntersectionWitness>& witnesses);

/// Self-crossing surgery at a deck-translate witness: powered repeats the
/// middle block q times (order q*n), removed excises it (order n).
std::pair<AdmissiblePath, AdmissiblePath> self_power(const AdmissiblePath& a,
                                                     const IntersectionWitness& w, long q);

/// Greedy leftmost excision until no self-crossing witness remains; preserves
/// order and end leaves (the latter up to a deck power).
AdmissiblePath remove_self_intersections(const AdmissiblePath& a);

/// Finite-witness certificate that a loop is linearly admissible of order q:
/// each recorded pair (r_k, s_k) states that the r_k-fold prefix is
/// admissible of order <= s_k, and the best ratio r_k/s_k reaches 1/q.
struct LinearAdmissibilityCertificate {
    std::vector<ChordId> period;  // formal loop period, one block of each path
    long deck = 1;
    long q = 1;
    std::vector<std::pair<long, long>> witnesses;
    Rat achieved_ratio;
};

/// Deck-translated re-occurrence of a crossing: crosses(a2, T^deck a1) must
/// hold positively, so the two blocks glue into an arbitrarily long chain.
struct RepeatData {
    long deck = 1;
    int periods = 8;
};

LinearAdmissibilityCertificate loop_from_recurrent_crossing(const AdmissiblePath& a1,
                                                            const AdmissiblePath& a2,
                                                            const IntersectionWitness& w,
                                                            const RepeatData& rep);

}  // namespace folia

#endif
