#ifndef KNESER_SOLVER_HPP
#define KNESER_SOLVER_HPP

#include <optional>
#include <vector>

#include "kneser/bounds.hpp"
#include "kneser/coloring.hpp"
#include "kneser/hypercore.hpp"

namespace kneser {

// None if c is a proper coloring of KG^r_s(S); otherwise the first
// monochromatic s-disjoint r-family in enumeration order.
std::optional<MonochromaticFamily> validate_coloring(const SetSystem& S, int r,
                                                     const MultiplicityVector& s,
                                                     const Coloring& c);

struct ChiResult {
    int chi = 0;
    Coloring coloring;
    bool exceeded = false;  // true when chi > max_colors; chi/coloring unset
};

// Exact chromatic number of KG^r_s(S) with a witness coloring.
// Branch and bound: vertices in static order (max Kneser-degree, then lowest
// index), colors introduced in increasing order (first vertex gets color 1),
// forward checking on the hyperedges completed by each assignment. The result
// is the lexicographically least optimal coloring under that branching order.
// lower_seed only skips color counts below it; it must be a valid lower bound.
ChiResult chi_exact(const SetSystem& S, int r, const MultiplicityVector& s,
                    int max_colors = -1, int lower_seed = 1);

// BoundReport for KG^r_{(s,..,s)}([n] choose k)_t-stab: defect lower bound,
// explicit-coloring upper bound, and the exact value when the instance is
// within max_vertices.
BoundReport verify_sandwich(int n, int k, int r, int s, int t, int max_vertices = 64);

// Exploration of chi(KG^r([n] choose k)_{r-stab}) against the conjectured
// ceil((n-(k-1)r)/(r-1)), plus a vertex-criticality deletion scan. Records
// evidence only; asserts nothing about the conjecture.
struct StableScanReport {
    int n = 0, k = 0, r = 0;
    int chi = 0;
    int conjectured = 0;
    bool matches = false;
    std::vector<int> chi_after_delete;  // per deleted vertex
    bool vertex_critical = false;
    bool divisibility = false;           // (r-1) | (n-rk): criticality expected
    bool noncritical_expected = false;   // n-rk = 1 and r > 2
};

StableScanReport scan_r_stable(int n, int k, int r, int max_vertices = 64);

}  // namespace kneser

#endif
