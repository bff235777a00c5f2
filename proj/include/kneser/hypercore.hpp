#ifndef KNESER_HYPERCORE_HPP
#define KNESER_HYPERCORE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneser/bits.hpp"

namespace kneser {

// Multiplicity vector s = (s_1,...,s_n); n_bar = s_1 + ... + s_n.
struct MultiplicityVector {
    std::vector<int> s;  // s[i] is the multiplicity of element i+1

    MultiplicityVector() = default;
    explicit MultiplicityVector(std::vector<int> v);
    static MultiplicityVector uniform(int n, int value);

    int size() const { return static_cast<int>(s.size()); }
    int of(int elem) const { return s[elem - 1]; }
    int total() const;
    bool constant() const;
    // every s_i < r (required wherever a uniformity r is in play)
    bool below(int r) const;
};

// A hypergraph on ground set [n]: loop-free edges, each a subset of [n],
// stored duplicate-free in canonical order (ascending bit-mask value).
// The position of an edge in `edges` is its index, used by colorings.
struct SetSystem {
    int n = 0;
    std::vector<Mask> edges;

    SetSystem() = default;
    // validates and canonicalizes (sorts, rejects duplicates/loops/overflow)
    static SetSystem make(int n, std::vector<Mask> raw);

    int edge_count() const { return static_cast<int>(edges.size()); }
    // position of an edge mask in canonical order, -1 if absent
    int index_of(Mask e) const;
};

// Signed subset (X+, X-) of [n], X+ and X- disjoint.
struct SignVector {
    Mask plus = 0;
    Mask minus = 0;

    bool operator==(const SignVector&) const = default;
    SignVector negated() const { return {minus, plus}; }
    Mask support() const { return plus | minus; }
    bool zero() const { return (plus | minus) == 0; }
    // componentwise partial order: X <= Y iff X+ <= Y+ and X- <= Y-
    bool leq(const SignVector& y) const {
        return subset_of(plus, y.plus) && subset_of(minus, y.minus);
    }

    // canonical code: base-3, trit i-1 of element i is 0 / 1 (+) / 2 (-)
    std::uint64_t code(int n) const;
    static SignVector from_code(std::uint64_t c, int n);
    std::string str(int n) const;  // e.g. "0+-+"
};

// all C(n,k) k-subsets of [n], canonical order
SetSystem gen_k_subsets(int n, int k);

// the t-stable k-subsets: pairwise cyclic distance >= t (t <= |i-j| <= n-t);
// empty when n < tk
SetSystem gen_t_stable(int n, int k, int t);

// each ground element i lies in at most s_i members
bool is_s_disjoint(std::span<const Mask> family, const MultiplicityVector& s);

// Enumerates the edges of KG^r_s(S): all s-disjoint r-subsets of S's edges,
// as ascending index tuples in lexicographic order. Visitor returns false to stop.
void kneser_edges(const SetSystem& S, int r, const MultiplicityVector& s,
                  const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> kneser_edge_list(const SetSystem& S, int r,
                                               const MultiplicityVector& s);

// length of the longest alternating subsequence of non-zero signs
int alt(const SignVector& x, int n);
// alt of x with one extra trailing sign appended (+1 or -1)
int alt_appended(const SignVector& x, int n, int sign);

// S|_M = {S in S : S subset of M}; ground size unchanged
SetSystem restrict_to(const SetSystem& S, Mask m);
// same, returning for each surviving edge its index in S
std::pair<SetSystem, std::vector<int>> restrict_with_map(const SetSystem& S, Mask m);

}  // namespace kneser

#endif
