#include "folia/transversal.hpp"

#include <algorithm>

namespace folia {

RelOrder relative_order(Model m, const Chord& l0, const Chord& l1, const Chord& l2) {
    Side s1 = side_of(m, l0, l1);
    Side s2 = side_of(m, l0, l2);
    if (s1 != s2) fail("SeparationViolation", l0.id.str() + " separates the two others");
    if (separates(m, l1, l0, l2)) fail("SeparationViolation", l1.id.str() + " separates");
    if (separates(m, l2, l0, l1)) fail("SeparationViolation", l2.id.str() + " separates");
    // The connectors attach along l0 in the boundary order of the endpoint
    // blocks of l1 and l2 inside the common side arc; the non-crossing
    // matching is order-reversing, so the block met first decides.
    BoundaryKey start = s1 == Side::RightSide ? boundary_key(m, l0.tail) : boundary_key(m, l0.head);
    BoundaryKey pts[4] = {boundary_key(m, l1.tail), boundary_key(m, l1.head),
                          boundary_key(m, l2.tail), boundary_key(m, l2.head)};
    int first = 0;
    for (int i = 1; i < 4; ++i)
        if (in_open_arc(start, pts[first], pts[i])) first = i;
    bool first_is_l1 = first < 2;
    if (s1 == Side::RightSide)
        return first_is_l1 ? RelOrder::Above : RelOrder::Below;
    return first_is_l1 ? RelOrder::Below : RelOrder::Above;
}

std::vector<IntersectionWitness> all_witnesses(const TransversePath& p1,
                                               const TransversePath& p2) {
    if (p1.chart != p2.chart) fail("ChartMismatch", "all_witnesses");
    Model m = p1.chart->model();
    size_t n1 = p1.size(), n2 = p2.size();
    std::vector<Chord> c1, c2;
    for (size_t i = 0; i < n1; ++i) c1.push_back(p1.at(i));
    for (size_t j = 0; j < n2; ++j) c2.push_back(p2.at(j));
    std::vector<IntersectionWitness> out;
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n2; ++j) {
            if (!(c1[i] == c2[j])) continue;
            if (i > 0 && j > 0 && c1[i - 1] == c2[j - 1]) continue;  // not a run start
            size_t len = 1;
            while (i + len < n1 && j + len < n2 && c1[i + len] == c2[j + len]) ++len;
            if (i == 0 || j == 0 || i + len >= n1 || j + len >= n2) continue;
            size_t a1 = i - 1, a2 = j - 1, b1 = i + len, b2 = j + len;
            try {
                RelOrder ra = relative_order(m, c1[i], c1[a1], c2[a2]);
                RelOrder rb = relative_order(m, c1[i + len - 1], c1[b1], c2[b2]);
                if (ra == RelOrder::Below && rb == RelOrder::Above)
                    out.push_back({c1[i], a1, i, b1, a2, j, b2, Sign::Positive, 0});
                else if (ra == RelOrder::Above && rb == RelOrder::Below)
                    out.push_back({c1[i], a1, i, b1, a2, j, b2, Sign::Negative, 0});
            } catch (const Error& e) {
                if (e.code() != "SeparationViolation" && e.code() != "NotDisjoint") throw;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IntersectionWitness& a, const IntersectionWitness& b) {
        return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
    });
    return out;
}

std::optional<IntersectionWitness> crosses_transversally(const TransversePath& p1,
                                                         const TransversePath& p2) {
    auto ws = all_witnesses(p1, p2);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

long max_self_deck(const TransversePath& p) {
    long maxs = 0;
    for (const auto& id : p.leaves) maxs = std::max(maxs, std::abs(id.shift));
    return p.chart->window() - maxs;
}

std::vector<IntersectionWitness> self_witnesses(const TransversePath& p, long max_k) {
    if (p.chart->model() != Model::AnnulusCover) return {};
    if (max_k > max_self_deck(p))
        fail("WindowExceeded", "self scan needs shifts beyond the chart window");
    std::vector<IntersectionWitness> out;
    for (long k = 1; k <= max_k; ++k) {
        for (IntersectionWitness w : all_witnesses(p, shift_path(p, k))) {
            w.deck = k;
            out.push_back(w);
        }
    }
    return out;
}

std::vector<IntersectionWitness> self_transverse(const PeriodicPath& p, long max_k) {
    const Chart& chart = *p.base.chart;
    if (max_k > chart.window()) fail("WindowExceeded", "max_k beyond the chart window");
    long maxs = 0;
    for (const auto& id : p.base.leaves) maxs = std::max(maxs, std::abs(id.shift));
    long span = std::abs(p.shift);
    long J = (chart.window() - maxs - max_k) / span;
    if (J < 1) fail("WindowExceeded", "no room to unroll for the self scan");
    TransversePath u = unroll(p, -J, J);
    size_t period = p.base.size();
    size_t lo = static_cast<size_t>(J) * period, hi = lo + period;
    std::vector<IntersectionWitness> out;
    for (long k = 1; k <= max_k; ++k) {
        for (IntersectionWitness w : all_witnesses(u, shift_path(u, k))) {
            if (w.t1 < lo || w.t1 >= hi) continue;  // deck-action normalization
            w.deck = k;
            out.push_back(w);
        }
    }
    return out;
}

bool has_F_transverse_self_intersection(const TransversePath& p) {
    if (p.chart->model() != Model::AnnulusCover) return false;
    return !self_witnesses(p, max_self_deck(p)).empty();
}

bool has_F_transverse_self_intersection(const PeriodicPath& p) {
    long maxs = 0;
    for (const auto& id : p.base.leaves) maxs = std::max(maxs, std::abs(id.shift));
    long span = std::abs(p.shift);
    long max_k = std::max<long>(1, p.base.chart->window() - maxs - span);
    return !self_transverse(p, max_k).empty();
}

}  // namespace folia
