#include "folia/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace folia {

using boost::multiprecision::cpp_int;

namespace {

size_t sig(const std::vector<size_t>& sigma, size_t i) { return sigma[i]; }

}  // namespace

CrossingDiagram make_diagram(long r, const std::vector<size_t>& sigma_images,
                             std::vector<CrossingPair> pairs) {
    if (r < 1) fail("InvalidDiagram", "r must be >= 1");
    size_t n = 2 * static_cast<size_t>(r);
    if (sigma_images.size() != n) fail("InvalidDiagram", "sigma needs 2r images");
    std::vector<size_t> sigma(n + 1, 0);
    for (size_t i = 1; i <= n; ++i) sigma[i] = sigma_images[i - 1];
    for (size_t i = 1; i <= n; ++i) {
        if (sigma[i] < 1 || sigma[i] > n || sigma[i] == i)
            fail("InvalidDiagram", "sigma not fixed-point-free at " + std::to_string(i));
        if (sigma[sigma[i]] != i)
            fail("InvalidDiagram", "sigma not an involution at " + std::to_string(i));
    }
    std::set<size_t> seen;
    for (const auto& p : pairs) {
        if (p.i < 1 || p.i > n || p.i >= sigma[p.i])
            fail("InvalidDiagram", "pair must be named by its smaller encounter");
        if (!seen.insert(p.i).second) fail("InvalidDiagram", "duplicate pair " + std::to_string(p.i));
        if (p.kind == PairKind::Transverse) {
            if (p.positive_encounter != p.i && p.positive_encounter != sigma[p.i])
                fail("InvalidDiagram", "positive encounter outside the pair");
        } else if (p.positive_encounter != 0 || !p.strong.empty()) {
            fail("InvalidDiagram", "non-transverse pair carries crossing data");
        }
        for (size_t e : p.strong)
            if (e != p.i && e != sigma[p.i]) fail("InvalidDiagram", "strong flag outside the pair");
    }
    if (seen.size() != static_cast<size_t>(r)) fail("InvalidDiagram", "need one record per pair");
    return CrossingDiagram{r, std::move(sigma), std::move(pairs)};
}

MatrixTriple build_matrices(const CrossingDiagram& d) {
    size_t dim = 2 * static_cast<size_t>(d.r) + 1;
    auto chain = [&](MatrixLabel label) {
        IncidenceMatrix P;
        P.label = label;
        P.dim = dim;
        P.sigma = d.sigma;
        P.m.assign(dim, std::vector<int>(dim, 0));
        for (size_t i = 0; i + 1 < dim; ++i) P.m[i][i + 1] = 1;
        return P;
    };
    MatrixTriple t{chain(MatrixLabel::Strong), chain(MatrixLabel::Left),
                   chain(MatrixLabel::Right)};
    for (const auto& p : d.pairs) {
        if (p.kind != PairKind::Transverse) continue;
        size_t pos = p.positive_encounter;
        t.left.m[pos - 1][sig(d.sigma, pos)] = 1;
        t.right.m[sig(d.sigma, pos) - 1][pos] = 1;
        for (size_t e : p.strong) t.strong.m[e - 1][sig(d.sigma, e)] = 1;
    }
    return t;
}

CrossingDiagram decode_diagram(const MatrixTriple& t) {
    size_t dim = t.left.dim;
    long r = static_cast<long>((dim - 1) / 2);
    size_t n = 2 * static_cast<size_t>(r);
    std::vector<size_t> sigma(n + 1, 0);
    std::vector<size_t> positives;
    std::vector<std::set<size_t>> strong_at(n + 1);
    auto off_chain = [&](const IncidenceMatrix& P, auto&& record) {
        for (size_t i = 0; i < P.dim; ++i)
            for (size_t j = 0; j < P.dim; ++j)
                if (P.m[i][j] == 1 && j != i + 1) record(i + 1, j);
    };
    off_chain(t.left, [&](size_t e, size_t j) {
        sigma[e] = j;
        sigma[j] = e;
        positives.push_back(e);
    });
    off_chain(t.right, [&](size_t e, size_t j) {
        sigma[e] = j;
        sigma[j] = e;
    });
    off_chain(t.strong, [&](size_t e, size_t j) {
        sigma[e] = j;
        sigma[j] = e;
        strong_at[e].insert(e);
    });
    // Pair leftover (non-transverse) encounters deterministically.
    std::vector<size_t> loose;
    for (size_t i = 1; i <= n; ++i)
        if (sigma[i] == 0) loose.push_back(i);
    for (size_t k = 0; k + 1 < loose.size(); k += 2) {
        sigma[loose[k]] = loose[k + 1];
        sigma[loose[k + 1]] = loose[k];
    }
    std::vector<CrossingPair> pairs;
    for (size_t i = 1; i <= n; ++i) {
        if (sigma[i] < i) continue;
        CrossingPair p;
        p.i = i;
        auto pos = std::find_if(positives.begin(), positives.end(),
                                [&](size_t e) { return e == i || e == sigma[i]; });
        if (pos != positives.end()) {
            p.kind = PairKind::Transverse;
            p.positive_encounter = *pos;
            for (size_t e : {i, sigma[i]})
                if (!strong_at[e].empty()) p.strong.push_back(e);
        }
        pairs.push_back(std::move(p));
    }
    std::vector<size_t> images(sigma.begin() + 1, sigma.end());
    return make_diagram(r, images, std::move(pairs));
}

std::vector<std::string> render(const IncidenceMatrix& P) {
    std::vector<std::string> rows;
    for (size_t i = 0; i < P.dim; ++i) {
        std::string row;
        for (size_t j = 0; j < P.dim; ++j) {
            if (j) row += ' ';
            row += char('0' + P.m[i][j]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Spectral radius

namespace {

/// Strongly connected components, Tarjan.
std::vector<std::vector<size_t>> scc_decompose(const std::vector<std::vector<int>>& m) {
    size_t n = m.size();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    std::vector<std::vector<size_t>> comps;
    long next = 0;
    std::function<void(size_t)> strongconnect = [&](size_t v) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on_stack[v] = true;
        for (size_t w = 0; w < n; ++w) {
            if (!m[v][w]) continue;
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<size_t> comp;
            for (;;) {
                size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
                if (w == v) break;
            }
            comps.push_back(std::move(comp));
        }
    };
    for (size_t v = 0; v < n; ++v)
        if (index[v] < 0) strongconnect(v);
    return comps;
}

bool nontrivial(const std::vector<std::vector<int>>& m, const std::vector<size_t>& comp) {
    return comp.size() > 1 || m[comp[0]][comp[0]] == 1;
}

/// A bare cycle: within the component every node has exactly one out-edge
/// and one in-edge, so the only eigenvalues are roots of unity.
bool bare_cycle(const std::vector<std::vector<int>>& m, const std::vector<size_t>& comp) {
    for (size_t v : comp) {
        int out = 0, in = 0;
        for (size_t w : comp) {
            out += m[v][w];
            in += m[w][v];
        }
        if (out != 1 || in != 1) return false;
    }
    return true;
}

/// Collatz-Wielandt power iteration on the primitive matrix A_S + I.
double perron_radius(const std::vector<std::vector<int>>& m, const std::vector<size_t>& comp,
                     double tol) {
    size_t k = comp.size();
    std::vector<double> v(k, 1.0), bv(k);
    for (int it = 0; it < 200000; ++it) {
        for (size_t a = 0; a < k; ++a) {
            double s = v[a];  // the +I term
            for (size_t b = 0; b < k; ++b)
                if (m[comp[a]][comp[b]]) s += v[b];
            bv[a] = s;
        }
        double lo = bv[0] / v[0], hi = lo;
        for (size_t a = 1; a < k; ++a) {
            double r = bv[a] / v[a];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        double norm = 0;
        for (double x : bv) norm = std::max(norm, x);
        for (size_t a = 0; a < k; ++a) v[a] = bv[a] / norm;
        if (hi - lo < tol) return (hi + lo) / 2 - 1.0;
    }
    fail("NoConvergence", "power iteration did not reach the tolerance");
}

using Poly = std::vector<Rat>;  // coefficient of x^i at index i

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

Poly poly_div(const Poly& a, const Poly& b) {
    Poly rem = a, quot(a.size() - b.size() + 1, Rat(0));
    trim(rem);
    while (rem.size() >= b.size() && !rem.empty()) {
        Rat c = rem.back() / b.back();
        size_t off = rem.size() - b.size();
        quot[off] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
        trim(rem);
    }
    return quot;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

/// Characteristic polynomial by Faddeev-LeVerrier over exact rationals.
Poly char_poly(const std::vector<std::vector<int>>& a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    Poly c(n + 1, Rat(0));
    c[n] = 1;
    std::vector<std::vector<Rat>> AM(n, std::vector<Rat>(n, Rat(0)));
    for (size_t k = 1; k <= n; ++k) {
        // M <- A*M + c_{n-k+1} I ; c_{n-k} = -tr(A*M)/k
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat s = i == j ? c[n - k + 1] : Rat(0);
                for (size_t l = 0; l < n; ++l)
                    if (a[i][l]) s += M[l][j];
                AM[i][j] = s;
            }
        std::swap(M, AM);
        Rat tr(0);
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l)
                if (a[i][l]) tr += M[l][i];
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return c;
}

Rat rat_approx(double x) {
    long long den = 1LL << 40;
    return Rat(static_cast<long long>(std::llround(x * static_cast<double>(den))), den);
}

/// Confirms via the square-free characteristic polynomial that a real
/// eigenvalue lies within bracket of the iterated estimate.
bool exact_confirms(const std::vector<std::vector<int>>& a, double est, double bracket) {
    Poly p = char_poly(a);
    Poly g = poly_gcd(p, derivative(p));
    Poly q = g.size() > 1 ? poly_div(p, g) : p;
    Rat lo = rat_approx(est - bracket), hi = rat_approx(est + bracket);
    Rat vlo = poly_eval(q, lo), vhi = poly_eval(q, hi);
    return (vlo <= 0 && vhi >= 0) || (vlo >= 0 && vhi <= 0);
}

}  // namespace

SpectralRadius spectral_radius(const IncidenceMatrix& P, double tol) {
    if (tol <= 0) fail("NoConvergence", "tolerance must be positive");
    auto comps = scc_decompose(P.m);
    std::vector<std::vector<size_t>> live;
    for (auto& c : comps)
        if (nontrivial(P.m, c)) live.push_back(std::move(c));
    if (live.empty()) return {0.0, true, false};
    bool all_bare = std::all_of(live.begin(), live.end(),
                                [&](const auto& c) { return bare_cycle(P.m, c); });
    if (all_bare) return {1.0, false, true};
    double best = 1.0;
    for (const auto& c : live) {
        if (bare_cycle(P.m, c)) continue;
        best = std::max(best, perron_radius(P.m, c, tol));
    }
    if (P.dim <= 9 && !exact_confirms(P.m, best, std::max(10 * tol, 1e-9)))
        fail("NoConvergence", "iterative radius not confirmed by the characteristic polynomial");
    return {best, false, false};
}

double entropy_lower_bound(const IncidenceMatrix& P, long n, double tol) {
    if (n < 1) fail("InvalidDiagram", "base order must be >= 1");
    SpectralRadius r = spectral_radius(P, tol);
    if (r.value <= 1.0) return 0.0;
    return std::log(r.value) / static_cast<double>(n);
}

double entropy_selfloop_bound(long r) {
    if (r < 1) fail("InvalidDiagram", "r must be >= 1");
    return std::log(2.0) / (4.0 * static_cast<double>(r));
}

std::vector<WordCertificate> admissible_words(const IncidenceMatrix& P, size_t length,
                                              long base_order, size_t cap) {
    if (length < 1) fail("InvalidDiagram", "word length must be >= 1");
    std::vector<WordCertificate> out;
    std::vector<size_t> word;
    std::function<void()> extend = [&]() {
        if (word.size() == length) {
            if (out.size() >= cap) fail("ExplosionGuard", "word enumeration exceeds the cap");
            long k = 0;
            for (size_t s = 0; s + 1 < word.size(); ++s) {
                size_t i = word[s];
                if (i + 1 < P.sigma.size() && word[s + 1] == P.sigma[i + 1]) ++k;
            }
            out.push_back({word, k, k * base_order});
            return;
        }
        size_t cur = word.back();
        for (size_t j = 0; j < P.dim; ++j)
            if (P.m[cur][j]) {
                word.push_back(j);
                extend();
                word.pop_back();
            }
    };
    for (size_t start = 0; start < P.dim; ++start) {
        word.assign(1, start);
        extend();
    }
    return out;
}

cpp_int word_count(const IncidenceMatrix& P, size_t length) {
    size_t n = P.dim;
    std::vector<std::vector<cpp_int>> acc(n, std::vector<cpp_int>(n, 0));
    for (size_t i = 0; i < n; ++i) acc[i][i] = 1;
    for (size_t step = 1; step < length; ++step) {
        std::vector<std::vector<cpp_int>> next(n, std::vector<cpp_int>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (acc[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j)
                    if (P.m[l][j]) next[i][j] += acc[i][l];
            }
        acc = std::move(next);
    }
    cpp_int total = 0;
    for (const auto& row : acc)
        for (const auto& e : row) total += e;
    return total;
}

std::vector<std::vector<int>> palindromic_words(int n, int cap) {
    if (n < 1) fail("InvalidDiagram", "palindrome half-length must be >= 1");
    if (n > cap) fail("ExplosionGuard", "palindrome half-length exceeds the cap");
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> half(n);
        for (int j = 0; j < n; ++j) half[j] = (mask >> j) & 1 ? 2 : 1;
        std::vector<int> word(half.rbegin(), half.rend());
        word.insert(word.end(), half.begin(), half.end());
        out.push_back(std::move(word));
    }
    return out;
}

std::vector<FormalLoop> build_palindrome_loops(const TransversePath& block1,
                                               const TransversePath& block2,
                                               const std::vector<std::vector<int>>& words,
                                               long block_shift) {
    if (block1.chart != block2.chart) fail("ChartMismatch", "palindrome blocks");
    if (block1.size() == 0 || block2.size() == 0 ||
        !(block1.at(0) == block2.at(0)))
        fail("ChartMismatch", "blocks must share the splice leaf");
    std::vector<FormalLoop> loops;
    for (const auto& w : words) {
        FormalLoop loop;
        loop.chart = block1.chart;
        loop.shift = block_shift * static_cast<long>(w.size());
        for (size_t s = 0; s < w.size(); ++s) {
            const TransversePath& b = w[s] == 1 ? block1 : block2;
            for (const ChordId& id : b.leaves) {
                ChordId shifted = id;
                shifted.shift += block_shift * static_cast<long>(s);
                loop.period.push_back(shifted);
            }
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

long count_loop_classes(const std::vector<FormalLoop>& loops) {
    std::set<std::vector<std::pair<std::string, long>>> classes;
    for (const FormalLoop& loop : loops) {
        std::vector<std::pair<std::string, long>> best;
        size_t L = loop.period.size();
        for (size_t r = 0; r < L; ++r) {
            std::vector<std::pair<std::string, long>> cand;
            long norm = 0;
            for (size_t i = 0; i < L; ++i) {
                const ChordId& id = loop.period[(r + i) % L];
                long s = id.shift + (r + i >= L ? loop.shift : 0);
                if (i == 0) norm = s;  // quotient by the uniform deck power
                cand.emplace_back(id.base, s - norm);
            }
            if (r == 0 || cand < best) best = std::move(cand);
        }
        classes.insert(std::move(best));
    }
    return static_cast<long>(classes.size());
}

TransversePath word_to_path(const Chart& chart, const IncidenceMatrix& P,
                            const SegmentBinding& binding, const std::vector<size_t>& word) {
    if (word.empty()) fail("SpliceInvalid", "empty word");
    for (size_t s = 0; s + 1 < word.size(); ++s)
        if (word[s] >= P.dim || word[s + 1] >= P.dim || !P.m[word[s]][word[s + 1]])
            fail("SpliceInvalid", "word not P-admissible at step " + std::to_string(s));
    std::vector<ChordId> chain;
    for (size_t idx : word) {
        auto it = binding.find(idx);
        if (it == binding.end()) fail("UnboundIndex", "segment " + std::to_string(idx));
        chain.insert(chain.end(), it->second.begin(), it->second.end());
    }
    std::string err = path_error(chart, chain);
    if (!err.empty()) fail("SpliceInvalid", "concatenated chain fails validation: " + err);
    return TransversePath{&chart, std::move(chain)};
}

CrossingDiagram example_diagram(int which) {
    auto tpair = [](size_t i, size_t pos, std::vector<size_t> strong = {}) {
        return CrossingPair{i, PairKind::Transverse, pos, std::move(strong)};
    };
    switch (which) {
        case 1:
            return make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1), tpair(2, 4)});
        case 2:
            return make_diagram(2, {4, 3, 2, 1}, {tpair(1, 4), tpair(2, 3)});
        case 3:
            return make_diagram(2, {3, 4, 1, 2}, {tpair(1, 1, {1, 3}), tpair(2, 4, {2, 4})});
        case 4:
            return make_diagram(3, {5, 3, 2, 6, 1, 4},
                                {tpair(1, 1), tpair(2, 2), tpair(4, 6)});
        default:
            fail("InvalidDiagram", "examples are numbered 1..4");
    }
}

PalindromeFixture example_palindrome_blocks() {
    auto coord = [](BoundaryLine l, long num, long den) {
        return CircleCoord{l, Rat(num, den)};
    };
    // One downward slant plus two caps whose pockets face opposite boundary
    // lines: the caps are incomparable, so [V,X] and [V,Y] are distinct valid
    // continuations of the same leaf.
    std::vector<Chord> chords;
    chords.push_back({{"V", 0}, coord(BoundaryLine::Top, 1, 2), coord(BoundaryLine::Bottom, 1, 2)});
    chords.push_back({{"X", 0}, coord(BoundaryLine::Bottom, 7, 10), coord(BoundaryLine::Bottom, 3, 5)});
    chords.push_back({{"Y", 0}, coord(BoundaryLine::Top, 3, 5), coord(BoundaryLine::Top, 7, 10)});
    PalindromeFixture fx;
    fx.chart = build_chart(chords, Model::AnnulusCover, 16);
    fx.block1 = {{"V", 0}, {"X", 0}};
    fx.block2 = {{"V", 0}, {"Y", 0}};
    return fx;
}

}  // namespace folia
