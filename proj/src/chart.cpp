#include "folia/chart.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

namespace {

Rat norm_mod1(const Rat& r) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(r), den = denominator(r);
    cpp_int q = num / den;
    cpp_int rem = num - q * den;
    if (rem < 0) rem += den;
    return Rat(rem, den);
}

}  // namespace

BoundaryKey boundary_key(Model m, const CircleCoord& c) {
    if (m == Model::Disk) return {0, c.value};
    if (c.line == BoundaryLine::Bottom) return {0, c.value};
    return {1, -c.value};
}

bool in_open_arc(const BoundaryKey& a, const BoundaryKey& b, const BoundaryKey& k) {
    if (k == a || k == b) return false;
    if (a < b) return a < k && k < b;
    return k > a || k < b;  // arc wraps through the key-order maximum
}

ChordId parse_chord_id(const std::string& s) {
    auto at = s.rfind('@');
    if (at == std::string::npos) return {s, 0};
    // Only treat "@k" with integral k as a shift suffix.
    std::string tail = s.substr(at + 1);
    if (tail.empty()) return {s, 0};
    char* end = nullptr;
    long k = std::strtol(tail.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') return {s, 0};
    return {s.substr(0, at), k};
}

const Chord& Chart::base_chord(const std::string& id) const {
    auto it = base_.find(id);
    if (it == base_.end()) fail("UnknownChord", id);
    return it->second;
}

Chord Chart::resolve(const ChordId& id) const {
    const Chord& c = base_chord(id.base);
    if (id.shift == 0) return c;
    if (model_ != Model::AnnulusCover) fail("WrongModel", "deck shift in disk chart: " + id.str());
    if (id.shift > window_ || id.shift < -window_)
        fail("WindowExceeded", "shift " + std::to_string(id.shift) + " beyond window " + std::to_string(window_));
    return deck_shift(*this, c, id.shift);
}

std::vector<Chord> Chart::all_chords() const {
    std::vector<Chord> out;
    if (model_ == Model::Disk) {
        for (const auto& [id, c] : base_) out.push_back(c);
        return out;
    }
    for (const auto& [id, c] : base_)
        for (long k = -window_; k <= window_; ++k) out.push_back(deck_shift(*this, c, k));
    return out;
}

Chord deck_shift(const Chart& chart, const Chord& c, long k) {
    if (chart.model() != Model::AnnulusCover) fail("WrongModel", "deck_shift in disk chart");
    Chord out = c;
    out.id.shift += k;
    out.tail.value += k;
    out.head.value += k;
    return out;
}

bool chords_interleave(Model m, const Chord& a, const Chord& b) {
    BoundaryKey at = boundary_key(m, a.tail), ah = boundary_key(m, a.head);
    BoundaryKey bt = boundary_key(m, b.tail), bh = boundary_key(m, b.head);
    bool t_in = in_open_arc(at, ah, bt);
    bool h_in = in_open_arc(at, ah, bh);
    return t_in != h_in;
}

Side side_of(Model m, const Chord& lambda, const Chord& mu) {
    BoundaryKey lt = boundary_key(m, lambda.tail), lh = boundary_key(m, lambda.head);
    BoundaryKey mt = boundary_key(m, mu.tail), mh = boundary_key(m, mu.head);
    if (mt == lt || mt == lh || mh == lt || mh == lh || (mt == mh))
        fail("NotDisjoint", lambda.id.str() + " / " + mu.id.str());
    bool t_in = in_open_arc(lt, lh, mt);
    bool h_in = in_open_arc(lt, lh, mh);
    if (t_in != h_in) fail("NotDisjoint", lambda.id.str() + " interleaves " + mu.id.str());
    return t_in ? Side::RightSide : Side::LeftSide;
}

Comparison compare_chords(Model m, const Chord& lambda, const Chord& mu) {
    // R(lambda) c R(mu)  iff  lambda c R(mu) and mu c L(lambda).
    Side mu_of_lambda = side_of(m, lambda, mu);
    Side lambda_of_mu = side_of(m, mu, lambda);
    if (lambda_of_mu == Side::RightSide && mu_of_lambda == Side::LeftSide)
        return Comparison::RInRMu;
    if (mu_of_lambda == Side::RightSide && lambda_of_mu == Side::LeftSide)
        return Comparison::RMuInRLambda;
    return Comparison::NotComparable;
}

bool separates(Model m, const Chord& psi, const Chord& lambda, const Chord& mu) {
    return side_of(m, psi, lambda) != side_of(m, psi, mu);
}

Chart build_chart(const std::vector<Chord>& chords, Model model, long window) {
    Chart chart;
    chart.model_ = model;
    chart.window_ = window;
    for (const Chord& c : chords) {
        if (c.id.shift != 0) fail("DuplicateId", "base chord id carries a shift: " + c.id.str());
        Chord stored = c;
        if (model == Model::Disk) {
            stored.tail.value = norm_mod1(stored.tail.value);
            stored.head.value = norm_mod1(stored.head.value);
            stored.tail.line = stored.head.line = BoundaryLine::Bottom;
        }
        if (boundary_key(model, stored.tail) == boundary_key(model, stored.head))
            fail("DuplicateEndpoint", c.id.str());
        if (!chart.base_.emplace(stored.id.base, stored).second) fail("DuplicateId", c.id.str());
    }
    // Pairwise disjointness, including deck translates in the strip model.
    std::vector<Chord> bases;
    for (const auto& [id, c] : chart.base_) bases.push_back(c);
    long lo = model == Model::AnnulusCover ? -window : 0;
    long hi = model == Model::AnnulusCover ? window : 0;
    for (size_t i = 0; i < bases.size(); ++i) {
        for (size_t j = i; j < bases.size(); ++j) {
            for (long d = lo; d <= hi; ++d) {
                if (i == j && d == 0) continue;
                Chord b = bases[j];
                if (d != 0) b = deck_shift(chart, b, d);
                BoundaryKey at = boundary_key(model, bases[i].tail);
                BoundaryKey ah = boundary_key(model, bases[i].head);
                BoundaryKey bt = boundary_key(model, b.tail);
                BoundaryKey bh = boundary_key(model, b.head);
                if (at == bt || at == bh || ah == bt || ah == bh)
                    fail("DuplicateEndpoint", bases[i].id.str() + " / " + b.id.str());
                if (chords_interleave(model, bases[i], b))
                    fail("InterleavingChords", bases[i].id.str() + " / " + b.id.str());
            }
        }
    }
    return chart;
}

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        using boost::multiprecision::cpp_int;
        if (slash == std::string::npos) return Rat(cpp_int(s));
        cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) fail("BadFraction", s);
        return Rat(num, den);
    } catch (const std::exception&) {
        fail("BadFraction", s);
    }
}

}  // namespace folia
