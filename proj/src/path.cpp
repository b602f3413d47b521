#include "folia/path.hpp"

#include <algorithm>

namespace folia {

namespace {

bool same_chord(const Chord& a, const Chord& b) { return a == b; }

/// Is psi met by the (resolved) chain?
bool met_by(const std::vector<Chord>& chain, const Chord& psi) {
    return std::any_of(chain.begin(), chain.end(),
                       [&](const Chord& c) { return same_chord(c, psi); });
}

std::string check_chain(const Chart& chart, const std::vector<ChordId>& leaves,
                        bool throwing) {
    auto report = [&](const std::string& code, const std::string& detail) -> std::string {
        if (throwing) fail(code, detail);
        return code;
    };
    if (leaves.empty()) return report("InvalidPath", "empty chain");
    Model m = chart.model();
    std::vector<Chord> chain;
    chain.reserve(leaves.size());
    for (const auto& id : leaves) chain.push_back(chart.resolve(id));
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j)
            if (same_chord(chain[i], chain[j]))
                return report("NotIncreasing", "leaf met twice: " + leaves[i].str());
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        if (compare_chords(m, chain[k], chain[k + 1]) != Comparison::RInRMu)
            return report("NotIncreasing", "at position " + std::to_string(k));
    }
    // Separation closure: any chart chord separating a consecutive pair would
    // have to be crossed between them — coherently (right-to-left) or not.
    std::vector<Chord> all = chart.all_chords();
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        for (const Chord& psi : all) {
            if (same_chord(psi, chain[k]) || same_chord(psi, chain[k + 1])) continue;
            if (!separates(m, psi, chain[k], chain[k + 1])) continue;
            if (side_of(m, psi, chain[k]) == Side::RightSide)
                return report("MissingForcedCrossing",
                              psi.id.str() + " between positions " + std::to_string(k) + "," +
                                  std::to_string(k + 1));
            return report("Unrealizable", psi.id.str() + " reversed between positions " +
                                              std::to_string(k) + "," + std::to_string(k + 1));
        }
    }
    return "";
}

}  // namespace

TransversePath validate_path(const Chart& chart, const std::vector<ChordId>& leaves) {
    check_chain(chart, leaves, true);
    return TransversePath{&chart, leaves};
}

std::string path_error(const Chart& chart, const std::vector<ChordId>& leaves) {
    return check_chain(chart, leaves, false);
}

TransversePath shift_path(const TransversePath& p, long k) {
    TransversePath out = p;
    for (auto& id : out.leaves) id.shift += k;
    return out;
}

PeriodicPath validate_periodic(const Chart& chart, const std::vector<ChordId>& base, long shift) {
    if (chart.model() != Model::AnnulusCover) fail("WrongModel", "periodic path needs a strip chart");
    if (shift == 0) fail("InvalidPath", "periodic shift must be nonzero");
    validate_path(chart, base);
    std::vector<ChordId> doubled = base;
    for (ChordId id : base) {
        id.shift += shift;
        doubled.push_back(id);
    }
    std::string err = path_error(chart, doubled);
    if (!err.empty()) fail(err, "doubled periodic chain");
    return PeriodicPath{TransversePath{&chart, base}, shift};
}

TransversePath unroll(const PeriodicPath& p, long j_lo, long j_hi) {
    TransversePath out;
    out.chart = p.base.chart;
    for (long j = j_lo; j <= j_hi; ++j)
        for (ChordId id : p.base.leaves) {
            id.shift += j * p.shift;
            out.leaves.push_back(id);
        }
    return out;
}

bool equivalent(const TransversePath& p1, const TransversePath& p2) {
    if (p1.chart != p2.chart) fail("ChartMismatch", "equivalent");
    if (p1.size() != p2.size()) return false;
    for (size_t i = 0; i < p1.size(); ++i)
        if (!(p1.at(i) == p2.at(i))) return false;
    return true;
}

std::optional<size_t> is_subpath_equiv(const TransversePath& p1, const TransversePath& p2) {
    if (p1.chart != p2.chart) fail("ChartMismatch", "is_subpath_equiv");
    if (p1.size() > p2.size()) return std::nullopt;
    for (size_t off = 0; off + p1.size() <= p2.size(); ++off) {
        bool ok = true;
        for (size_t i = 0; i < p1.size() && ok; ++i)
            if (!(p1.at(i) == p2.at(off + i))) ok = false;
        if (ok) return off;
    }
    return std::nullopt;
}

namespace {

/// Shared scan for the two side-witness queries. A witness for the right
/// side sits, endpoints and all, inside the head-side boundary arc of some
/// band between consecutive chain leaves; left mirrors with tails.
std::optional<Chord> side_witness(const TransversePath& p, bool right) {
    const Chart& chart = *p.chart;
    Model m = chart.model();
    std::vector<Chord> chain;
    for (size_t i = 0; i < p.size(); ++i) chain.push_back(p.at(i));
    std::vector<Chord> all = chart.all_chords();
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        BoundaryKey lo, hi;
        if (right) {
            lo = boundary_key(m, chain[k].head);
            hi = boundary_key(m, chain[k + 1].head);
        } else {
            lo = boundary_key(m, chain[k + 1].tail);
            hi = boundary_key(m, chain[k].tail);
        }
        for (const Chord& psi : all) {
            if (met_by(chain, psi)) continue;
            if (in_open_arc(lo, hi, boundary_key(m, psi.tail)) &&
                in_open_arc(lo, hi, boundary_key(m, psi.head)))
                return psi;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Chord> has_leaf_on_right(const TransversePath& p) { return side_witness(p, true); }
std::optional<Chord> has_leaf_on_left(const TransversePath& p) { return side_witness(p, false); }

ComplementSide complement_side(const PeriodicPath& line, const Chord& mu) {
    const Chart& chart = *line.base.chart;
    Model m = chart.model();
    long maxs = 0;
    for (const auto& id : line.base.leaves) maxs = std::max(maxs, std::abs(id.shift));
    long span = std::abs(line.shift);
    long J = (chart.window() - maxs) / span;
    if (J < 1) fail("WindowExceeded", "complement_side has no room to unroll");
    TransversePath u = unroll(line, -J, J);
    std::vector<Chord> chain;
    for (size_t i = 0; i < u.size(); ++i) chain.push_back(u.at(i));
    for (const Chord& c : chain)
        if (same_chord(c, mu)) return ComplementSide::MetByPath;
    // mu c L(c_i) for small i, mu c R(c_i) for large i; locate the transition.
    std::vector<Side> sides;
    for (const Chord& c : chain) sides.push_back(side_of(m, c, mu));
    size_t first_r = 0;
    while (first_r < sides.size() && sides[first_r] == Side::LeftSide) ++first_r;
    for (size_t i = first_r; i < sides.size(); ++i)
        if (sides[i] == Side::LeftSide) fail("NotALine", "sides of " + mu.id.str() + " not monotone");
    if (first_r == 0 || first_r == sides.size())
        fail("WindowExceeded", "transition band of " + mu.id.str() + " beyond window");
    const Chord& a = chain[first_r - 1];
    const Chord& b = chain[first_r];
    BoundaryKey mt = boundary_key(m, mu.tail), mh = boundary_key(m, mu.head);
    BoundaryKey ha = boundary_key(m, a.head), hb = boundary_key(m, b.head);
    BoundaryKey tb = boundary_key(m, b.tail), ta = boundary_key(m, a.tail);
    if (in_open_arc(ha, hb, mt) && in_open_arc(ha, hb, mh)) return ComplementSide::InRSide;
    if (in_open_arc(tb, ta, mt) && in_open_arc(tb, ta, mh)) return ComplementSide::InLSide;
    fail("NotALine", mu.id.str() + " straddles the line");
}

}  // namespace folia
