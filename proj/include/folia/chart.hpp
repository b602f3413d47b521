#ifndef FOLIA_CHART_HPP
#define FOLIA_CHART_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace folia {

using Rat = boost::multiprecision::cpp_rational;

/// Every failure mode carries a stable symbolic code (e.g. "InterleavingChords")
/// so callers and the CLI can match on it without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, std::string detail) {
    throw Error(std::move(code), std::move(detail));
}

enum class Model { Disk, AnnulusCover };
enum class BoundaryLine { Bottom, Top };

/// Boundary point of a chart. Disk: a rational position on the circle,
/// normalized mod 1. Strip: an unbounded rational on one of the two
/// horizontal boundary lines; the deck shift acts as value -> value + 1.
struct CircleCoord {
    BoundaryLine line = BoundaryLine::Bottom;  // ignored in disk model
    Rat value;

    friend bool operator==(const CircleCoord&, const CircleCoord&) = default;
};

/// Total order realizing the counterclockwise boundary cyclic order:
/// disk positions ascending; strip bottom ascending then top descending.
struct BoundaryKey {
    int section;  // 0 = disk/bottom, 1 = top
    Rat v;

    friend auto operator<=>(const BoundaryKey& a, const BoundaryKey& b) {
        if (a.section != b.section) return a.section <=> b.section;
        return a.v < b.v   ? std::strong_ordering::less
               : a.v > b.v ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }
    friend bool operator==(const BoundaryKey&, const BoundaryKey&) = default;
};

BoundaryKey boundary_key(Model m, const CircleCoord& c);

/// Strict membership of k in the open ccw arc from a to b (a != b).
bool in_open_arc(const BoundaryKey& a, const BoundaryKey& b, const BoundaryKey& k);

/// Chord identifier: a base name plus the deck power applied to it.
struct ChordId {
    std::string base;
    long shift = 0;

    friend bool operator==(const ChordId&, const ChordId&) = default;
    friend auto operator<=>(const ChordId&, const ChordId&) = default;
    std::string str() const {
        return shift == 0 ? base : base + "@" + std::to_string(shift);
    }
};

ChordId parse_chord_id(const std::string& s);

/// Oriented chord (a marked leaf). R(chord) is the open region to the right
/// of the orientation; its boundary trace is the open ccw arc tail -> head.
struct Chord {
    ChordId id;
    CircleCoord tail;
    CircleCoord head;

    friend bool operator==(const Chord& a, const Chord& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

enum class Side { RightSide, LeftSide };
enum class Comparison { RInRMu, RMuInRLambda, NotComparable };

/// Finite chord arrangement standing in for a lifted non-singular foliation.
/// Immutable after build_chart; all queries are pure and exact.
class Chart {
public:
    Model model() const { return model_; }
    long window() const { return window_; }

    const Chord& base_chord(const std::string& id) const;
    bool has_base(const std::string& id) const { return base_.count(id) != 0; }
    Chord resolve(const ChordId& id) const;

    /// All chords visible to closure scans: base chords, and for the strip
    /// model every deck translate within the window.
    std::vector<Chord> all_chords() const;
    const std::map<std::string, Chord>& base_chords() const { return base_; }

    friend Chart build_chart(const std::vector<Chord>& chords, Model model, long window);

private:
    Model model_ = Model::Disk;
    long window_ = 16;
    std::map<std::string, Chord> base_;
};

Chart build_chart(const std::vector<Chord>& chords, Model model, long window = 16);

/// Deck transformation T^k applied to a chord (strip model only).
Chord deck_shift(const Chart& chart, const Chord& c, long k);

/// Do the two chords have interleaving endpoints (i.e. cross)?
bool chords_interleave(Model m, const Chord& a, const Chord& b);

/// Which side of lambda contains mu (both endpoints of mu lie in one
/// boundary arc of lambda's complement, by disjointness).
Side side_of(Model m, const Chord& lambda, const Chord& mu);

/// Inclusion comparison of right regions: RInRMu means R(lambda) c R(mu).
Comparison compare_chords(Model m, const Chord& lambda, const Chord& mu);

/// True iff lambda and mu lie in different components of the complement of psi.
bool separates(Model m, const Chord& psi, const Chord& lambda, const Chord& mu);

std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace folia

#endif
