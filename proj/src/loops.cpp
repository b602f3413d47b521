#include "folia/loops.hpp"

#include <algorithm>
#include <map>

namespace folia {

namespace {

std::vector<Chord> resolved(const TransversePath& p) {
    std::vector<Chord> out;
    for (size_t i = 0; i < p.size(); ++i) out.push_back(p.at(i));
    return out;
}

/// Rotating a period chain by r steps sends the wrapped prefix one deck
/// period up.
std::vector<ChordId> rotate_period(const std::vector<ChordId>& base, long shift, size_t r) {
    std::vector<ChordId> out(base.begin() + r, base.end());
    for (size_t i = 0; i < r; ++i) {
        ChordId id = base[i];
        id.shift += shift;
        out.push_back(id);
    }
    return out;
}

/// Largest n such that the period chain is an n-fold deck-compatible
/// repetition (n divides both the length and the shift).
long repetition_order(const TransverseLoop& g) {
    const auto& base = g.periodic.base.leaves;
    long L = static_cast<long>(base.size());
    long s = g.periodic.shift;
    const Chart& chart = *g.periodic.base.chart;
    for (long n = L; n >= 2; --n) {
        if (L % n != 0 || s % n != 0) continue;
        long block = L / n, d = s / n;
        bool ok = true;
        for (long i = 0; i + block < L && ok; ++i) {
            Chord a = chart.resolve(base[i + block]);
            ChordId shifted = base[i];
            shifted.shift += d;
            if (!(a == chart.resolve(shifted))) ok = false;
        }
        if (ok) return n;
    }
    return 1;
}

/// Maximal common runs between two resolved chains: (i, j, len) triples.
struct Run {
    size_t i, j, len;
    bool at_boundary;
};

std::vector<Run> common_runs(const std::vector<Chord>& c1, const std::vector<Chord>& c2) {
    std::vector<Run> out;
    for (size_t i = 0; i < c1.size(); ++i)
        for (size_t j = 0; j < c2.size(); ++j) {
            if (!(c1[i] == c2[j])) continue;
            if (i > 0 && j > 0 && c1[i - 1] == c2[j - 1]) continue;
            size_t len = 1;
            while (i + len < c1.size() && j + len < c2.size() && c1[i + len] == c2[j + len]) ++len;
            bool boundary = i == 0 || j == 0 || i + len == c1.size() || j + len == c2.size();
            out.push_back({i, j, len, boundary});
        }
    return out;
}

/// Largest number of deck translates of a single leaf orbit inside one run.
long run_translate_count(const std::vector<Chord>& c1, const Run& r) {
    std::map<std::string, long> per_orbit;
    long best = 0;
    for (size_t k = 0; k < r.len; ++k)
        best = std::max(best, ++per_orbit[c1[r.i + k].id.base]);
    return best;
}

}  // namespace

TransverseLoop make_loop(const Chart& chart, const std::vector<ChordId>& period, long shift) {
    return TransverseLoop{validate_periodic(chart, period, shift)};
}

bool loop_equivalent(const TransverseLoop& g1, const TransverseLoop& g2) {
    if (g1.periodic.base.chart != g2.periodic.base.chart) fail("ChartMismatch", "loop_equivalent");
    const Chart& chart = *g1.periodic.base.chart;
    const auto& b1 = g1.periodic.base.leaves;
    const auto& b2 = g2.periodic.base.leaves;
    if (b1.size() != b2.size() || g1.periodic.shift != g2.periodic.shift) return false;
    std::vector<Chord> r2 = resolved(g2.periodic.base);
    for (size_t r = 0; r < b1.size(); ++r) {
        std::vector<ChordId> rot = rotate_period(b1, g1.periodic.shift, r);
        Chord first = chart.resolve(rot[0]);
        // A uniform deck power must carry the rotation onto g2's chain.
        Rat diff = first.tail.value - r2[0].tail.value;
        if (denominator(diff) != 1) continue;
        long d = static_cast<long>(numerator(diff));
        if (d > chart.window() || d < -chart.window()) continue;
        bool ok = true;
        for (size_t i = 0; i < rot.size() && ok; ++i)
            if (!(chart.resolve(rot[i]) == deck_shift(chart, r2[i], d))) ok = false;
        if (ok) return true;
    }
    return false;
}

bool is_prime(const TransverseLoop& g) { return repetition_order(g) == 1; }

namespace {

LoopStats stats_from_scan(const TransversePath& u, long window, long scan_k) {
    LoopStats st;
    st.window_used = window;
    std::vector<Chord> c1 = resolved(u);
    bool truncated = false;
    long width = 0;
    for (long k = 1; k <= scan_k; ++k) {
        TransversePath v = shift_path(u, k);
        if (all_witnesses(u, v).empty()) continue;
        ++st.self_count;
        std::vector<Chord> c2 = resolved(v);
        for (const Run& r : common_runs(c1, c2)) {
            width = std::max(width, run_translate_count(c1, r));
            if (r.at_boundary) truncated = true;
        }
    }
    if (st.self_count == 0) {
        st.width = 0;
        st.m_gamma = 1;
        return st;
    }
    if (truncated) return st;  // overlap still growing at the cutoff
    st.width = width;
    st.m_gamma = st.self_count * width * (width + 1) + 1;
    return st;
}

}  // namespace

LoopStats loop_stats(const TransverseLoop& g, long window) {
    const Chart& chart = *g.periodic.base.chart;
    if (window > chart.window()) fail("WindowExceeded", "stats window beyond the chart window");
    long maxs = 0;
    for (const auto& id : g.periodic.base.leaves) maxs = std::max(maxs, std::abs(id.shift));
    long span = std::abs(g.periodic.shift);
    long J = (chart.window() - maxs - window) / span;
    if (J < 1) fail("WindowExceeded", "no room to unroll for the stats scan");
    return stats_from_scan(unroll(g.periodic, -J, J), window, window);
}

LoopStats window_stats(const TransversePath& p, long window) {
    if (p.chart->model() != Model::AnnulusCover)
        return LoopStats{0, 0, 1, window};
    long limit = max_self_deck(p);
    if (window > limit) fail("WindowExceeded", "stats window beyond the chart window");
    return stats_from_scan(p, window, window);
}

PBResult pb_reduce(const PeriodicPath& p) {
    long maxs = 0;
    for (const auto& id : p.base.leaves) maxs = std::max(maxs, std::abs(id.shift));
    long span = std::abs(p.shift);
    long max_k = std::max<long>(1, p.base.chart->window() - maxs - span);
    auto ws = self_transverse(p, max_k);
    if (!ws.empty()) return PBResult{std::nullopt, ws.front()};
    TransverseLoop g{p};
    long n = repetition_order(g);
    if (n > 1) {
        size_t block = p.base.leaves.size() / n;
        std::vector<ChordId> period(p.base.leaves.begin(), p.base.leaves.begin() + block);
        g.periodic = validate_periodic(*p.base.chart, period, p.shift / n);
    }
    return PBResult{std::move(g), std::nullopt};
}

bool ths_certificate(const std::vector<std::pair<long, long>>& classes) {
    if (classes.empty()) return false;
    long sx = 0, sy = 0;
    for (const auto& [x, y] : classes) {
        sx += x;
        sy += y;
    }
    if (sx != 0 || sy != 0) return false;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i].first * classes[j].second != classes[i].second * classes[j].first)
                return true;
    return false;
}

}  // namespace folia
