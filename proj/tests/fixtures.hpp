#ifndef FOLIA_TESTS_FIXTURES_HPP
#define FOLIA_TESTS_FIXTURES_HPP

#include <vector>

#include "folia/path.hpp"

namespace folia::testfx {

inline CircleCoord bot(long num, long den = 1) {
    return {BoundaryLine::Bottom, Rat(num, den)};
}
inline CircleCoord top(long num, long den = 1) { return {BoundaryLine::Top, Rat(num, den)}; }
inline CircleCoord botr(const Rat& v) { return {BoundaryLine::Bottom, v}; }
inline CircleCoord topr(const Rat& v) { return {BoundaryLine::Top, v}; }

inline Chord chord(const std::string& id, CircleCoord tail, CircleCoord head) {
    return {{id, 0}, tail, head};
}

inline Chord disk_chord(const std::string& id, const Rat& tail, const Rat& head) {
    return {{id, 0}, {BoundaryLine::Bottom, tail}, {BoundaryLine::Bottom, head}};
}

/// Strip chart carrying a finite chain with a deck-translate self-crossing:
/// a cap A whose pocket hangs from the top near 0, a downward slant F at
/// 9/10, and a cap B facing the other way with pocket (13/5, 14/5) on top.
/// The chain [A, F, F@1, B] crosses its translate at the shared leaf F@1.
inline Chart crossing_chart(long window = 16) {
    std::vector<Chord> chords = {
        chord("A", top(1, 5), top(0)),
        chord("F", top(9, 10), bot(9, 10)),
        chord("B", top(13, 5), top(14, 5)),
    };
    return build_chart(chords, Model::AnnulusCover, window);
}

inline std::vector<ChordId> crossing_chain() {
    return {{"A", 0}, {"F", 0}, {"F", 1}, {"B", 0}};
}

}  // namespace folia::testfx

#endif
