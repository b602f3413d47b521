#include "folia/forcing.hpp"

#include <algorithm>

namespace folia {

namespace {

bool witness_matches(const IntersectionWitness& w, const IntersectionWitness& v) {
    return w.t1 == v.t1 && w.t2 == v.t2 && w.sign == v.sign;
}

/// A witness is genuine iff re-deriving the witness list reproduces it.
bool genuine_witness(const TransversePath& p1, const TransversePath& p2,
                     const IntersectionWitness& w) {
    for (const auto& v : all_witnesses(p1, p2))
        if (witness_matches(w, v)) return true;
    return false;
}

std::vector<ChordId> slice(const std::vector<ChordId>& v, size_t from, size_t to_incl) {
    return {v.begin() + from, v.begin() + to_incl + 1};
}

void append_shifted(std::vector<ChordId>& out, const std::vector<ChordId>& v, size_t from,
                    size_t to_incl, long k) {
    for (size_t i = from; i <= to_incl; ++i) {
        ChordId id = v[i];
        id.shift += k;
        out.push_back(id);
    }
}

TransversePath validated_splice(const Chart& chart, std::vector<ChordId> leaves) {
    std::string err = path_error(chart, leaves);
    if (!err.empty()) fail("SpliceInvalid", "spliced chain fails validation: " + err);
    return TransversePath{&chart, std::move(leaves)};
}

}  // namespace

AdmissiblePath declare_admissible(const TransversePath& path, long n, OrderMode mode) {
    if (path.chart == nullptr) fail("InvalidPath", "path has no chart");
    if (n < 1) fail("InvalidPath", "order must be >= 1");
    std::string err = path_error(*path.chart, path.leaves);
    if (!err.empty()) fail("InvalidPath", err);
    AdmissiblePath a{path, n, mode, {}, std::nullopt};
    if (mode == OrderMode::AtMost && path.size() >= 2) {
        // A path of order <= n but not n has no leaf on either of its sides;
        // a side witness therefore upgrades the certificate.
        auto r = has_leaf_on_right(path);
        auto l = has_leaf_on_left(path);
        if (r || l) {
            a.mode = OrderMode::Exact;
            a.provenance.push_back("upgrade: side leaf " + (r ? r->id.str() : l->id.str()));
        }
    }
    return a;
}

std::pair<AdmissiblePath, AdmissiblePath> force_cross(const AdmissiblePath& a1,
                                                      const AdmissiblePath& a2,
                                                      const IntersectionWitness& w) {
    if (!genuine_witness(a1.path, a2.path, w))
        fail("StaleWitness", "witness does not certify against the given paths");
    const Chart& chart = *a1.path.chart;
    std::vector<ChordId> c1 = slice(a1.path.leaves, 0, w.t1);
    append_shifted(c1, a2.path.leaves, w.t2 + 1, a2.path.size() - 1, 0);
    std::vector<ChordId> c2 = slice(a2.path.leaves, 0, w.t2);
    append_shifted(c2, a1.path.leaves, w.t1 + 1, a1.path.size() - 1, 0);
    long n = a1.order + a2.order;
    std::string step = "force_cross at " + w.phi.id.str() + ": " + std::to_string(a1.order) +
                       "+" + std::to_string(a2.order);
    AdmissiblePath o1{validated_splice(chart, std::move(c1)), n, OrderMode::Exact,
                      a1.provenance, std::nullopt};
    AdmissiblePath o2{validated_splice(chart, std::move(c2)), n, OrderMode::Exact,
                      a2.provenance, std::nullopt};
    o1.provenance.push_back(step);
    o2.provenance.push_back(step);
    auto dis = std::make_pair(std::min(a1.order, a2.order), std::max(a1.order, a2.order));
    o1.disjunction = dis;
    o2.disjunction = dis;
    return {std::move(o1), std::move(o2)};
}

AdmissiblePath chain_force(const std::vector<ChainItem>& items,
                           const std::vector<IntersectionWitness>& witnesses) {
    if (items.size() < 2) fail("HypothesisViolation", "need at least two chain items");
    if (witnesses.size() + 1 != items.size())
        fail("HypothesisViolation", "need one junction witness per consecutive pair");
    const Chart& chart = *items.front().ap.path.chart;
    long order = 0;
    std::vector<ChordId> chain;
    for (size_t i = 0; i < items.size(); ++i) {
        const ChainItem& it = items[i];
        if (it.t >= it.ap.path.size() || it.s >= it.t)
            fail("HypothesisViolation", "split indices out of order at item " + std::to_string(i));
        if (i + 1 < items.size()) {
            const IntersectionWitness& w = witnesses[i];
            if (w.t1 != it.t || w.t2 != items[i + 1].s)
                fail("HypothesisViolation",
                     "junction witness misaligned at item " + std::to_string(i));
            if (!genuine_witness(it.ap.path, items[i + 1].ap.path, w))
                fail("HypothesisViolation", "stale junction witness at item " + std::to_string(i));
        }
        size_t from = i == 0 ? it.s : it.s + 1;  // junction leaf already emitted
        append_shifted(chain, it.ap.path.leaves, from, it.t, 0);
        order += it.ap.order;
    }
    AdmissiblePath out{validated_splice(chart, std::move(chain)), order, OrderMode::Exact, {},
                       std::nullopt};
    out.provenance.push_back("chain_force over " + std::to_string(items.size()) +
                             " items, order " + std::to_string(order));
    return out;
}

AdmissiblePath chain_force_positive(const std::vector<ChainItem>& items,
                                    const std::vector<IntersectionWitness>& witnesses) {
    for (size_t i = 0; i < witnesses.size(); ++i)
        if (witnesses[i].sign != Sign::Positive)
            fail("SignViolation", "negative witness at junction " + std::to_string(i));
    return chain_force(items, witnesses);
}

std::pair<AdmissiblePath, AdmissiblePath> self_power(const AdmissiblePath& a,
                                                     const IntersectionWitness& w, long q) {
    if (q < 1) fail("HypothesisViolation", "power must be >= 1");
    if (w.deck < 1) fail("StaleWitness", "self witness needs a positive deck power");
    if (!genuine_witness(a.path, shift_path(a.path, w.deck), w))
        fail("StaleWitness", "witness does not certify a self-crossing of the path");
    size_t s = w.t2, t = w.t1;
    if (s >= t) fail("StaleWitness", "self witness windows out of order");
    const Chart& chart = *a.path.chart;
    const auto& leaves = a.path.leaves;
    std::vector<ChordId> powered = slice(leaves, 0, s);
    for (long j = 0; j < q; ++j)
        append_shifted(powered, leaves, s + 1, t, j * w.deck);
    if (t + 1 < leaves.size())
        append_shifted(powered, leaves, t + 1, leaves.size() - 1, (q - 1) * w.deck);
    std::vector<ChordId> removed = slice(leaves, 0, s);
    if (t + 1 < leaves.size()) append_shifted(removed, leaves, t + 1, leaves.size() - 1, -w.deck);
    AdmissiblePath pw{validated_splice(chart, std::move(powered)), q * a.order, OrderMode::Exact,
                      a.provenance, a.disjunction};
    AdmissiblePath rm{validated_splice(chart, std::move(removed)), a.order, OrderMode::Exact,
                      a.provenance, a.disjunction};
    pw.provenance.push_back("self_power q=" + std::to_string(q) + " at deck " +
                            std::to_string(w.deck));
    rm.provenance.push_back("self excision at deck " + std::to_string(w.deck));
    return {std::move(pw), std::move(rm)};
}

AdmissiblePath remove_self_intersections(const AdmissiblePath& a) {
    AdmissiblePath cur = a;
    if (cur.path.chart->model() != Model::AnnulusCover) return cur;
    for (;;) {
        long max_k = max_self_deck(cur.path);
        if (max_k < 1) return cur;
        auto ws = self_witnesses(cur.path, max_k);
        if (ws.empty()) return cur;
        // Leftmost excision window first: minimal s = t2, then minimal t1.
        const IntersectionWitness* best = &ws.front();
        for (const auto& w : ws)
            if (w.t2 < best->t2 || (w.t2 == best->t2 && w.t1 < best->t1)) best = &w;
        cur = self_power(cur, *best, 1).second;
    }
}

LinearAdmissibilityCertificate loop_from_recurrent_crossing(const AdmissiblePath& a1,
                                                            const AdmissiblePath& a2,
                                                            const IntersectionWitness& w,
                                                            const RepeatData& rep) {
    if (w.sign != Sign::Positive) fail("HypothesisViolation", "crossing witness must be positive");
    if (!genuine_witness(a1.path, a2.path, w))
        fail("HypothesisViolation", "stale crossing witness");
    if (rep.deck == 0 || rep.periods < 1) fail("HypothesisViolation", "bad repeat data");
    auto wr = crosses_transversally(a2.path, shift_path(a1.path, rep.deck));
    if (!wr || wr->sign != Sign::Positive)
        fail("HypothesisViolation", "no positive deck-translated re-occurrence of the crossing");
    if (w.t2 >= wr->t1 || wr->t2 >= w.t1)
        fail("HypothesisViolation", "crossing windows out of order for the gluing");
    long q = std::max(a1.order, a2.order);
    LinearAdmissibilityCertificate cert;
    cert.deck = rep.deck;
    cert.q = 2 * q;
    for (size_t i = wr->t2 + 1; i <= w.t1; ++i) cert.period.push_back(a1.path.leaves[i]);
    for (size_t i = w.t2 + 1; i <= wr->t1; ++i) cert.period.push_back(a2.path.leaves[i]);
    for (int n = 1; n <= rep.periods; ++n) {
        std::vector<ChainItem> items;
        std::vector<IntersectionWitness> junctions;
        for (int j = 0; j < n; ++j) {
            long d = j * rep.deck;
            AdmissiblePath b1 = a1;
            b1.path = shift_path(a1.path, d);
            AdmissiblePath b2 = a2;
            b2.path = shift_path(a2.path, d);
            items.push_back({std::move(b1), j == 0 ? 0 : wr->t2, w.t1});
            items.push_back({std::move(b2), w.t2, static_cast<size_t>(
                j == n - 1 ? a2.path.size() - 1 : wr->t1)});
            junctions.push_back(w);
            if (j < n - 1) junctions.push_back(*wr);
        }
        chain_force_positive(items, junctions);  // throws HypothesisViolation on failure
        cert.witnesses.emplace_back(n, 2L * n * q);
    }
    cert.achieved_ratio = Rat(1, 2 * q);
    for (const auto& [r, s] : cert.witnesses)
        cert.achieved_ratio = std::max(cert.achieved_ratio, Rat(r, s));
    return cert;
}

}  // namespace folia
