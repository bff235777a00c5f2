#ifndef KNESER_TUCKER_HPP
#define KNESER_TUCKER_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "kneser/coloring.hpp"
#include "kneser/hypercore.hpp"

namespace kneser {

struct AntipodalityViolation : std::runtime_error {
    std::uint64_t code;
    explicit AntipodalityViolation(std::uint64_t c)
        : std::runtime_error("labeling is not antipodal"), code(c) {}
};

struct EquivarianceViolation : std::runtime_error {
    std::uint64_t code;
    explicit EquivarianceViolation(std::uint64_t c)
        : std::runtime_error("labeling is not equivariant"), code(c) {}
};

struct DefectHypothesisFails : std::runtime_error {
    std::uint64_t code;
    explicit DefectHypothesisFails(std::uint64_t c)
        : std::runtime_error("defect hypothesis fails: a large signed set has no edge "
                             "inside any part"),
          code(c) {}
};

struct NoPairFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- octahedral

// Labeling of the nonzero sign vectors of [n]: entry code-1 is the value
// lambda(X) for the vector with that base-3 code, a signed nonzero integer.
using OctaLabeling = std::vector<int>;

// Comparable signed sets with opposite labels: lambda(a) = -lambda(b),
// a <= b componentwise, a != b.
struct TuckerPair {
    SignVector a, b;
    int label_a = 0;
};

// Exhaustive search over comparable pairs; verifies antipodality first.
// Deterministic: least pair under (code(a), code(b)). A compliant labeling
// (values within +-(n-1)) always yields a pair; NoPairFound can only name
// an out-of-range codomain.
TuckerPair octahedral_tucker_search(const OctaLabeling& lab, int n);

// The two-case proof labeling for an m-coloring c of KG^2(S) with
// m < cd^2(S): large signed sets are labeled +-c(smallest contained edge),
// small ones +-(m + |support|). verify_defect runs the cd_exact precheck.
OctaLabeling dolnikov_labeling(const SetSystem& S, const Coloring& c, int m,
                               bool verify_defect = true);

// Feeds dolnikov_labeling into octahedral_tucker_search and unpacks the
// pair into two disjoint edges of S with equal color.
MonochromaticFamily dolnikov_refute(const SetSystem& S, const Coloring& c);

OctaLabeling random_antipodal_labeling(int n, std::mt19937_64& rng);

// --------------------------------------------------------------- chessboard

// Faces of the s-disjoint p-fold join of the (n-1)-simplex: n x p 0/1
// matrices with at most s_i ones in row i. Column j occupies bits
// [j*n, (j+1)*n) of the code; faces are enumerated in ascending code order.
struct ZpFaceSet {
    int n = 0, p = 0;
    MultiplicityVector s;
    std::vector<std::uint64_t> codes;

    int count() const { return static_cast<int>(codes.size()); }
    int index_of(std::uint64_t code) const;
};

ZpFaceSet zp_faces(int n, int p, const MultiplicityVector& s);

inline Mask zp_column(std::uint64_t code, int n, int j) {
    return (code >> (j * n)) & full_mask(n);
}
std::uint64_t zp_make(const std::vector<Mask>& cols, int n);
// rotate columns by k: column j moves to column (j+k) mod p
std::uint64_t zp_action(std::uint64_t code, int n, int p, int k);
// no nonzero fixed point under any nontrivial rotation
bool zp_action_is_free(const ZpFaceSet& faces);

struct ZpLabel {
    int sign = 0;   // exponent of omega, in [0, p)
    int value = 0;  // in [1, m]
};
// aligned with ZpFaceSet::codes
using ZpLabeling = std::vector<ZpLabel>;

// Chain A(1) < ... < A(p) whose labels share the value and run through all
// p signs: signs[i] is lambda_1(A(i)).
struct ZpChainWitness {
    std::vector<std::uint64_t> chain;
    int value = 0;
    std::vector<int> signs;
};

// Exhaustive chain search grouped by label value; requires p prime,
// m <= floor((n_bar - 1)/(p - 1)), and an equivariant labeling (verified).
// Returns the lexicographically least witness chain. A missing witness
// would falsify the lemma and raises logic_error.
ZpChainWitness zp_tucker_search(const ZpFaceSet& faces, const ZpLabeling& lab, int m);

// The two-case prime-branch labeling for a K-coloring c of KG^p_s(S) with
// (p-1)K < cd^p_s(S) and (p-1) | (n_bar - 1).
ZpLabeling main_labeling(const SetSystem& S, const MultiplicityVector& s,
                         const Coloring& c, int p, const ZpFaceSet& faces,
                         bool verify_defect = true);

// Extends the ground set to reach divisibility, builds main_labeling, runs
// zp_tucker_search, and unpacks the chain into p s-disjoint edges of S
// sharing a color.
MonochromaticFamily main_refute(const SetSystem& S, const MultiplicityVector& s,
                                const Coloring& c, int p);

ZpLabeling random_equivariant_labeling(const ZpFaceSet& faces, int m,
                                       std::mt19937_64& rng);

bool is_prime(int p);

}  // namespace kneser

#endif
