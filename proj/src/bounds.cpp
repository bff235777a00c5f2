#include "kneser/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "kneser/solver.hpp"

namespace kneser {

namespace {

int ceil_div(int a, int b) {
    assert(b > 0);
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Maximizes sum |R_j| over s-disjoint r-tuples of subsets of `ground`
// none of which contains an edge of S. Depth-first over ground elements,
// assigning each to a subset of the classes; identical classes are only
// extended as a prefix (symmetry), and branches that cannot beat the
// incumbent are cut.
struct DefectSearch {
    const SetSystem& S;
    int r;
    const MultiplicityVector& s;
    std::vector<int> elems;                        // ground elements, ascending
    std::vector<std::vector<Mask>> edges_by_elem;  // blocking edges per element
    std::vector<int> suffix;                       // remaining capacity from position i
    std::vector<std::vector<Mask>> by_size;        // subsets of [r] grouped by popcount
    std::vector<Mask> cls;
    int best = 0;

    DefectSearch(const SetSystem& S_, int r_, const MultiplicityVector& s_, Mask ground)
        : S(S_), r(r_), s(s_) {
        for_each_element(ground, [&](int e) { elems.push_back(e); });
        edges_by_elem.resize(elems.size());
        for (size_t i = 0; i < elems.size(); ++i)
            for (Mask E : S.edges)
                if (has_element(E, elems[i]) && subset_of(E, ground))
                    edges_by_elem[i].push_back(E);
        suffix.assign(elems.size() + 1, 0);
        for (int i = static_cast<int>(elems.size()) - 1; i >= 0; --i)
            suffix[i] = suffix[i + 1] + std::min(s.of(elems[i]), r);
        by_size.resize(r + 1);
        for (Mask J = 0; J < (Mask{1} << r); ++J) by_size[popcount(J)].push_back(J);
        cls.assign(r, 0);
    }

    bool blocked(int pos, Mask cls_with_elem) const {
        for (Mask E : edges_by_elem[pos])
            if (subset_of(E, cls_with_elem)) return true;
        return false;
    }

    void rec(int pos, int total) {
        if (total + suffix[pos] <= best) return;
        if (pos == static_cast<int>(elems.size())) {
            best = total;
            return;
        }
        int e = elems[pos];
        Mask ebit = element(e);
        int cap = std::min(s.of(e), r);
        // elements no edge passes through always take full capacity
        if (edges_by_elem[pos].empty()) {
            rec(pos + 1, total + cap);
            return;
        }
        for (int size = cap; size >= 0; --size) {
            for (Mask J : by_size[size]) {
                bool ok = true;
                for (int j = 0; j < r && ok; ++j) {
                    if (!has_bit(J, j)) continue;
                    // prefix rule: equal classes are filled left to right
                    if (j > 0 && cls[j - 1] == cls[j] && !has_bit(J, j - 1)) ok = false;
                    else if (blocked(pos, cls[j] | ebit)) ok = false;
                }
                if (!ok) continue;
                for (int j = 0; j < r; ++j)
                    if (has_bit(J, j)) cls[j] |= ebit;
                rec(pos + 1, total + size);
                for (int j = 0; j < r; ++j)
                    if (has_bit(J, j)) cls[j] &= ~ebit;
            }
        }
    }
};

}  // namespace

int cd_exact(const SetSystem& S, int r, const MultiplicityVector& s, Mask ground, int max_n) {
    if (r < 2) throw std::invalid_argument("r < 2");
    if (r > 8) throw std::invalid_argument("cd_exact supports r <= 8");
    if (s.size() != S.n) throw std::invalid_argument("multiplicity vector size mismatch");
    if (!subset_of(ground, full_mask(S.n))) throw std::invalid_argument("ground not in [n]");
    if (popcount(ground) > max_n)
        throw std::invalid_argument("cd_exact: ground set larger than configured limit");
    int n_bar = 0;
    for_each_element(ground, [&](int e) { n_bar += s.of(e); });
    DefectSearch search(S, r, s, ground);
    search.rec(0, 0);
    return n_bar - search.best;
}

int cd_exact(const SetSystem& S, int r, const MultiplicityVector& s) {
    return cd_exact(S, r, s, full_mask(S.n));
}

int cd_formula_stable(int n, int k, int t, int r, int s) {
    if (r < 2 || k < 2 || n < k || t < 1 || s < 1 || s >= r)
        throw std::invalid_argument("cd_formula_stable: bad parameters");
    if (n < t * k) throw std::invalid_argument("cd_formula_stable: n < tk");
    return std::max(n * s - t * r * (k - 1), 0);
}

int lower_bound_from_defect(int cd, int r) {
    if (cd <= 0) return 0;
    return ceil_div(cd, r - 1);
}

int lower_bound(const SetSystem& S, int r, const MultiplicityVector& s) {
    return lower_bound_from_defect(cd_exact(S, r, s), r);
}

ExplicitColoringParams explicit_coloring_params(int n, int k, int r, int s) {
    if (r < 2 || k < 2 || s < 1 || s >= r) throw std::invalid_argument("bad parameters");
    if (s * n < k * r) throw std::invalid_argument("need sn >= kr");
    ExplicitColoringParams p;
    p.P = (r - 1) / s;
    p.M = ceil_div(n * s - r * k + 1, p.P * s);
    return p;
}

int explicit_upper_bound(int n, int k, int r, int s) {
    return 1 + explicit_coloring_params(n, k, r, s).M;
}

Coloring explicit_coloring(int n, int k, int r, int s) {
    auto [P, M] = explicit_coloring_params(n, k, r, s);
    SetSystem sys = gen_k_subsets(n, k);
    std::vector<int> colors;
    colors.reserve(sys.edge_count());
    for (Mask e : sys.edges)
        colors.push_back(std::min(ceil_div(lowest_element(e), P), M + 1));
    Coloring c = Coloring::make(M + 1, std::move(colors));
    auto witness = validate_coloring(sys, r, MultiplicityVector::uniform(n, s), c);
    if (witness)
        throw std::logic_error("explicit_coloring produced an improper coloring (bug)");
    return c;
}

namespace {

// smallest K with K(n+1) - K(K+1)/2 >= C(n,2), by binary search
int min_cover_count(int n) {
    long long need = static_cast<long long>(n) * (n - 1) / 2;
    int lo = 1, hi = n;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        long long got = static_cast<long long>(mid) * (n + 1) -
                        static_cast<long long>(mid) * (mid + 1) / 2;
        if (got >= need) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

// largest q with q(q+1) <= 2n, by binary search (integer form of
// floor(sqrt(2n + 1/4) - 1/2))
int floor_sqrt_term(int n) {
    long long two_n = 2LL * n;
    long long lo = 0, hi = n;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (mid * (mid + 1) <= two_n) lo = mid;
        else hi = mid - 1;
    }
    return static_cast<int>(lo);
}

}  // namespace

int chi_special_r4s2(int n) {
    if (n < 4) throw std::invalid_argument("chi_special_r4s2 needs n >= 4");
    int by_cover = min_cover_count(n);
    int by_sqrt = n - floor_sqrt_term(n);
    if (by_cover != by_sqrt)
        throw std::logic_error("chi_special_r4s2: the two closed forms disagree (bug)");
    return by_cover;
}

Coloring star_plus_edge_coloring(int n) {
    int K = chi_special_r4s2(n);
    SetSystem sys = gen_k_subsets(n, 2);
    // class i covers the star {i,j}, j > i; edges inside {K+1..n} are the
    // per-class extras, one each in canonical order
    [[maybe_unused]] long long leftover = static_cast<long long>(n - K) * (n - K - 1) / 2;
    assert(leftover <= K);
    std::vector<int> colors(sys.edge_count(), 0);
    int next_extra = 1;
    for (int i = 0; i < sys.edge_count(); ++i) {
        int a = lowest_element(sys.edges[i]);
        if (a <= K) colors[i] = a;
        else colors[i] = next_extra++;
    }
    Coloring c = Coloring::make(K, std::move(colors));
    auto witness =
        validate_coloring(sys, 4, MultiplicityVector::uniform(n, 2), c);
    if (witness)
        throw std::logic_error("star_plus_edge_coloring produced an improper coloring (bug)");
    return c;
}

std::pair<SetSystem, MultiplicityVector> extend_ground_set(const SetSystem& S,
                                                           const MultiplicityVector& s,
                                                           int r) {
    if (r < 2) throw std::invalid_argument("r < 2");
    if (s.size() != S.n) throw std::invalid_argument("multiplicity vector size mismatch");
    SetSystem out = S;
    MultiplicityVector ms = s;
    int added = 0;
    while ((ms.total() - 1) % (r - 1) != 0) {
        if (out.n >= max_ground) throw std::invalid_argument("ground set overflow");
        ++out.n;
        ms.s.push_back(1);
        ++added;
    }
    assert(added <= r - 2);
    return {std::move(out), std::move(ms)};
}

SetSystem build_auxiliary_T(const SetSystem& S, int r_prime, int chi0, int max_n) {
    if (S.n > max_n)
        throw std::invalid_argument("build_auxiliary_T: ground set larger than configured limit");
    if (r_prime < 2 || chi0 < 0) throw std::invalid_argument("bad parameters");
    MultiplicityVector ones = MultiplicityVector::uniform(S.n, 1);
    // enumerate by cardinality: T is an up-set, so a subset containing a
    // known member is in T and not minimal
    std::vector<Mask> subsets;
    for (Mask N = 1; N <= full_mask(S.n); ++N) subsets.push_back(N);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    std::vector<Mask> minimal;
    for (Mask N : subsets) {
        bool covered = false;
        for (Mask m : minimal)
            if (subset_of(m, N)) { covered = true; break; }
        if (covered) continue;
        if (cd_exact(S, r_prime, ones, N, max_n) > (r_prime - 1) * chi0)
            minimal.push_back(N);
    }
    return SetSystem::make(S.n, std::move(minimal));
}

bool t_contains_member(const SetSystem& T, Mask N) {
    for (Mask m : T.edges)
        if (subset_of(m, N)) return true;
    return false;
}

}  // namespace kneser
