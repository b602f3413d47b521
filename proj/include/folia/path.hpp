#ifndef FOLIA_PATH_HPP
#define FOLIA_PATH_HPP

#include <optional>

#include "folia/chart.hpp"

namespace folia {

/// A transverse path is its chain of crossed leaves, in crossing order.
/// Valid chains are strictly increasing for right-region inclusion and
/// closed under forced crossings (see validate_path).
struct TransversePath {
    const Chart* chart = nullptr;
    std::vector<ChordId> leaves;

    size_t size() const { return leaves.size(); }
    Chord at(size_t i) const { return chart->resolve(leaves[i]); }
};

/// Deck-periodic path: the chain repeats as base, shift(base,k), shift(base,2k), ...
struct PeriodicPath {
    TransversePath base;
    long shift = 1;
};

TransversePath validate_path(const Chart& chart, const std::vector<ChordId>& leaves);

/// Checks the chain conditions without throwing; returns the error code or "".
std::string path_error(const Chart& chart, const std::vector<ChordId>& leaves);

PeriodicPath validate_periodic(const Chart& chart, const std::vector<ChordId>& base, long shift);

/// Path translated by the deck transformation T^k.
TransversePath shift_path(const TransversePath& p, long k);

bool equivalent(const TransversePath& p1, const TransversePath& p2);
std::optional<size_t> is_subpath_equiv(const TransversePath& p1, const TransversePath& p2);

/// An unmet chart chord lying in one of the bands between consecutive chain
/// leaves, on the right (head-side boundary arc) of the path.
std::optional<Chord> has_leaf_on_right(const TransversePath& p);
std::optional<Chord> has_leaf_on_left(const TransversePath& p);

enum class ComplementSide { MetByPath, InRSide, InLSide };

/// Classifies mu against the line carried by a periodic path: met by the
/// line, or contained in its right / left complementary component.
ComplementSide complement_side(const PeriodicPath& line, const Chord& mu);

/// Unrolls a periodic path over period indices [j_lo, j_hi] (inclusive).
TransversePath unroll(const PeriodicPath& p, long j_lo, long j_hi);

}  // namespace folia

#endif
