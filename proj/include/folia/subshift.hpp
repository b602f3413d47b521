#ifndef FOLIA_SUBSHIFT_HPP
#define FOLIA_SUBSHIFT_HPP

#include <map>

#include "folia/loops.hpp"

namespace folia {

enum class PairKind { NonTransverse, Transverse };

/// One double-point orbit {i, sigma(i)} of a crossing diagram: its kind,
/// the ordered encounter at which the crossing is positive, and the
/// encounters flagged as strong (subpath-level transversality).
struct CrossingPair {
    size_t i = 0;  // smaller encounter index of the orbit
    PairKind kind = PairKind::NonTransverse;
    size_t positive_encounter = 0;  // i or sigma(i); 0 for NonTransverse
    std::vector<size_t> strong;
};

/// Double-point structure of a transverse path: a fixed-point-free
/// involution on {1..2r} plus per-pair crossing data.
struct CrossingDiagram {
    long r = 0;
    std::vector<size_t> sigma;  // 1-indexed; sigma[0] unused
    std::vector<CrossingPair> pairs;
};

CrossingDiagram make_diagram(long r, const std::vector<size_t>& sigma_images,
                             std::vector<CrossingPair> pairs);

enum class MatrixLabel { Strong, Left, Right };

/// 0/1 incidence matrix over segment indices {0..2r}; rows index the current
/// segment, the chain entry (i, i+1) is always present for i < 2r.
struct IncidenceMatrix {
    MatrixLabel label = MatrixLabel::Strong;
    size_t dim = 0;
    std::vector<std::vector<int>> m;
    std::vector<size_t> sigma;  // carried for switch counting
};

struct MatrixTriple {
    IncidenceMatrix strong, left, right;
};

MatrixTriple build_matrices(const CrossingDiagram& d);

/// Rebuilds the diagram data recoverable from a matrix triple; non-transverse
/// pairs are paired deterministically (they leave no trace in the matrices).
CrossingDiagram decode_diagram(const MatrixTriple& t);

/// Rows of 0/1 digits, one string per row.
std::vector<std::string> render(const IncidenceMatrix& P);

struct SpectralRadius {
    double value = 0;
    bool exact_zero = false;  // no cycle at all
    bool exact_one = false;   // every cycle class is a bare cycle
};

/// Hybrid exact/iterative spectral radius: acyclic and bare-cycle cases are
/// decided exactly; otherwise per-component power iteration, cross-checked
/// against the exact characteristic polynomial for dim <= 9.
SpectralRadius spectral_radius(const IncidenceMatrix& P, double tol = 1e-12);

double entropy_lower_bound(const IncidenceMatrix& P, long n, double tol = 1e-12);
double entropy_selfloop_bound(long r);

struct WordCertificate {
    std::vector<size_t> word;
    long switches = 0;
    long order = 0;
};

/// All P-admissible words of the given length, lexicographic, each with its
/// switch count and guaranteed order switches * base_order.
std::vector<WordCertificate> admissible_words(const IncidenceMatrix& P, size_t length,
                                              long base_order = 1, size_t cap = 1000000);

/// Number of P-admissible words of the given length, via the exact
/// transfer-matrix identity (entry sum of P^{length-1}).
boost::multiprecision::cpp_int word_count(const IncidenceMatrix& P, size_t length);

/// All palindromic words over {1,2} of length 2n (w[n+j] = w[n-j-1]).
std::vector<std::vector<int>> palindromic_words(int n, int cap = 10);

/// Loop period built formally from concatenated blocks; not required to be a
/// valid periodic chain (block junctions carry the deck bookkeeping only).
struct FormalLoop {
    const Chart* chart = nullptr;
    std::vector<ChordId> period;
    long shift = 1;
};

std::vector<FormalLoop> build_palindrome_loops(const TransversePath& block1,
                                               const TransversePath& block2,
                                               const std::vector<std::vector<int>>& words,
                                               long block_shift = 1);

/// Distinct loops up to cyclic rotation of the period composed with a
/// uniform deck power.
long count_loop_classes(const std::vector<FormalLoop>& loops);

/// Binding of segment indices to chart chain segments.
using SegmentBinding = std::map<size_t, std::vector<ChordId>>;

TransversePath word_to_path(const Chart& chart, const IncidenceMatrix& P,
                            const SegmentBinding& binding, const std::vector<size_t>& word);

/// The four built-in worked-example diagrams (1..4).
CrossingDiagram example_diagram(int which);

/// Built-in strip chart with a two-way block decomposition: both blocks start
/// at the same slant and end on incomparable caps, so block words produce
/// genuinely distinct loops.
struct PalindromeFixture {
    Chart chart;
    std::vector<ChordId> block1, block2;
};

PalindromeFixture example_palindrome_blocks();

}  // namespace folia

#endif
