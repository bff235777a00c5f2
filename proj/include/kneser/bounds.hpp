#ifndef KNESER_BOUNDS_HPP
#define KNESER_BOUNDS_HPP

#include <optional>
#include <utility>

#include "kneser/coloring.hpp"
#include "kneser/hypercore.hpp"

namespace kneser {

// Sandwich of a chromatic number between the defect lower bound and the
// explicit-coloring upper bound, with the exact value when computed.
struct BoundReport {
    int n = 0, k = 0, r = 0, s = 0, t = 1;
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    bool lower_is_exact() const { return exact && *exact == lower; }
    bool upper_is_exact() const { return exact && *exact == upper; }
};

// P and M of the explicit coloring rule: P = floor((r-1)/s),
// M = ceil((1/P) * (ns-rk+1)/s); the coloring uses 1+M colors.
struct ExplicitColoringParams {
    int P = 1;
    int M = 0;
};

// Exact s-disjoint r-colorability defect of S over `ground` (default [n]):
// n_bar - max{ sum |R_j| : R_1..R_r subsets of ground, s-disjoint, none
// containing an edge of S }. Exhaustive branch and bound; refuses
// popcount(ground) > max_n.
int cd_exact(const SetSystem& S, int r, const MultiplicityVector& s,
             Mask ground, int max_n = 12);
int cd_exact(const SetSystem& S, int r, const MultiplicityVector& s);

// closed form for t-stable complete hypergraphs: max{ns - tr(k-1), 0}
int cd_formula_stable(int n, int k, int t, int r, int s);

// chromatic-number lower bound ceil(cd / (r-1))
int lower_bound_from_defect(int cd, int r);
int lower_bound(const SetSystem& S, int r, const MultiplicityVector& s);

ExplicitColoringParams explicit_coloring_params(int n, int k, int r, int s);
// the explicit-coloring color count 1+M (needs sn >= kr)
int explicit_upper_bound(int n, int k, int r, int s);

// The explicit proper coloring of KG^r_s([n] choose k):
//   S -> min{ ceil(min(S)/P), M+1 }.
// Validated before returning; a validation failure is an implementation bug.
Coloring explicit_coloring(int n, int k, int r, int s);

// chi(KG^4_{(2,..,2)}([n] choose 2)) by the two equivalent closed forms
// min{K : sum_{i=1..K}(n-i+1) >= C(n,2)} and n - floor(sqrt(2n+1/4) - 1/2),
// asserted equal (integer arithmetic only).
int chi_special_r4s2(int n);

// Optimal coloring whose i-th class is the star at vertex i plus one packed
// extra edge; uses chi_special_r4s2(n) colors, validated before returning.
Coloring star_plus_edge_coloring(int n);

// Appends <= r-2 fresh ground elements of multiplicity 1 until (r-1)
// divides (n_bar - 1); edges unchanged. Neither the Kneser hypergraph nor
// the defect changes.
std::pair<SetSystem, MultiplicityVector> extend_ground_set(const SetSystem& S,
                                                           const MultiplicityVector& s,
                                                           int r);

// Auxiliary hypergraph T = {N subset of [n] : cd^{r'}(S|_N) > (r'-1) chi0},
// plain disjoint defect (s = 1) over ground N. T is an up-set; only its
// inclusion-minimal members are stored, and membership of any N is decided
// by t_contains_member.
SetSystem build_auxiliary_T(const SetSystem& S, int r_prime, int chi0, int max_n = 10);
bool t_contains_member(const SetSystem& T, Mask N);

}  // namespace kneser

#endif
