#include "kneser/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace kneser {

std::optional<MonochromaticFamily> validate_coloring(const SetSystem& S, int r,
                                                     const MultiplicityVector& s,
                                                     const Coloring& c) {
    if (c.size() != S.edge_count())
        throw std::invalid_argument("coloring does not cover every vertex");
    std::optional<MonochromaticFamily> witness;
    kneser_edges(S, r, s, [&](const std::vector<int>& fam) {
        int col = c.of(fam[0]);
        for (int v : fam)
            if (c.of(v) != col) return true;
        witness = MonochromaticFamily{fam, col};
        return false;
    });
    return witness;
}

namespace {

// Decision search: is there a proper m-coloring? Forward checking via
// per-vertex color domains; a hyperedge with all but one member on color c
// removes c from the free member's domain.
struct ColorSearch {
    int vcount;
    int m;
    const std::vector<std::vector<int>>& hyper;      // hyperedges (vertex lists)
    const std::vector<std::vector<int>>& touching;   // hyperedge ids per vertex
    std::vector<int> order;                          // branch order (vertex ids)
    std::vector<int> pos_of;                         // vertex -> branch position
    std::vector<int> color;                          // 0 = uncolored
    std::vector<unsigned> domain;
    std::vector<std::pair<int, unsigned>> trail;     // domain restore log

    ColorSearch(int vcount_, int m_, const std::vector<std::vector<int>>& hyper_,
                const std::vector<std::vector<int>>& touching_, std::vector<int> order_)
        : vcount(vcount_), m(m_), hyper(hyper_), touching(touching_),
          order(std::move(order_)), pos_of(vcount), color(vcount, 0),
          domain(vcount, (m_ >= 32 ? ~0u : (1u << m_) - 1)) {
        for (int i = 0; i < vcount; ++i) pos_of[order[i]] = i;
    }

    bool assign(int v, int c, size_t& mark) {
        mark = trail.size();
        color[v] = c;
        for (int h : touching[v]) {
            int uncolored = -1;
            bool mono = true;
            for (int u : hyper[h]) {
                if (color[u] == 0) {
                    if (uncolored != -1) { mono = false; break; }
                    uncolored = u;
                } else if (color[u] != c) {
                    mono = false;
                    break;
                }
            }
            if (!mono) continue;
            if (uncolored == -1) return false;  // completed monochromatic family
            unsigned bitc = 1u << (c - 1);
            if (domain[uncolored] & bitc) {
                trail.emplace_back(uncolored, domain[uncolored]);
                domain[uncolored] &= ~bitc;
                if (domain[uncolored] == 0) return false;
            }
        }
        return true;
    }

    void undo(int v, size_t mark) {
        color[v] = 0;
        while (trail.size() > mark) {
            domain[trail.back().first] = trail.back().second;
            trail.pop_back();
        }
    }

    bool solve(int pos, int max_used) {
        if (pos == vcount) return true;
        int v = order[pos];
        int top = std::min(m, max_used + 1);  // new colors introduced in order
        for (int c = 1; c <= top; ++c) {
            if (!(domain[v] & (1u << (c - 1)))) continue;
            size_t mark = 0;
            if (assign(v, c, mark)) {
                if (solve(pos + 1, std::max(max_used, c))) return true;
            }
            undo(v, mark);
        }
        return false;
    }
};

}  // namespace

ChiResult chi_exact(const SetSystem& S, int r, const MultiplicityVector& s,
                    int max_colors, int lower_seed) {
    int vcount = S.edge_count();
    if (max_colors < 0) max_colors = std::max(vcount, 1);
    if (max_colors > 31) max_colors = 31;
    ChiResult res;
    if (vcount == 0) {
        res.chi = 0;
        res.coloring = Coloring::make(0, {});
        return res;
    }
    auto hyper = kneser_edge_list(S, r, s);
    if (hyper.empty()) {
        res.chi = 1;
        res.coloring = Coloring::make(1, std::vector<int>(vcount, 1));
        return res;
    }
    std::vector<std::vector<int>> touching(vcount);
    for (size_t h = 0; h < hyper.size(); ++h)
        for (int v : hyper[h]) touching[v].push_back(static_cast<int>(h));
    std::vector<int> order(vcount);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (touching[a].size() != touching[b].size())
            return touching[a].size() > touching[b].size();
        return a < b;
    });
    for (int m = std::max(lower_seed, 2); m <= max_colors; ++m) {
        ColorSearch search(vcount, m, hyper, touching, order);
        if (search.solve(0, 0)) {
            res.chi = m;
            res.coloring = Coloring::make(m, search.color);
            return res;
        }
    }
    res.exceeded = true;
    return res;
}

BoundReport verify_sandwich(int n, int k, int r, int s, int t, int max_vertices) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.s = s;
    rep.t = t;
    rep.lower = lower_bound_from_defect(cd_formula_stable(n, k, t, r, s), r);
    rep.upper = s * n >= k * r ? explicit_upper_bound(n, k, r, s) : 1;
    SetSystem sys = t == 1 ? gen_k_subsets(n, k) : gen_t_stable(n, k, t);
    if (sys.edge_count() <= max_vertices) {
        ChiResult cr = chi_exact(sys, r, MultiplicityVector::uniform(n, s));
        if (!cr.exceeded) rep.exact = cr.chi;
    }
    return rep;
}

StableScanReport scan_r_stable(int n, int k, int r, int max_vertices) {
    StableScanReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    SetSystem sys = gen_t_stable(n, k, r);
    if (sys.edge_count() > max_vertices)
        throw std::invalid_argument("scan_r_stable: instance above size guard");
    MultiplicityVector ones = MultiplicityVector::uniform(n, 1);
    rep.chi = chi_exact(sys, r, ones).chi;
    rep.conjectured = std::max((n - (k - 1) * r + r - 2) / (r - 1), 0);
    rep.matches = rep.chi == rep.conjectured;
    rep.vertex_critical = true;
    for (int v = 0; v < sys.edge_count(); ++v) {
        std::vector<Mask> rest;
        for (int u = 0; u < sys.edge_count(); ++u)
            if (u != v) rest.push_back(sys.edges[u]);
        SetSystem del = SetSystem::make(n, std::move(rest));
        int chi_del = chi_exact(del, r, ones).chi;
        rep.chi_after_delete.push_back(chi_del);
        if (chi_del >= rep.chi) rep.vertex_critical = false;
    }
    rep.divisibility = (n - r * k) % (r - 1) == 0;
    rep.noncritical_expected = (n - r * k == 1) && r > 2;
    return rep;
}

}  // namespace kneser
