#include <doctest.h>

#include <algorithm>
#include <random>

#include "kneser/solver.hpp"

using namespace kneser;

namespace {

Mask edge(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= element(e);
    return m;
}

MultiplicityVector ones(int n) { return MultiplicityVector::uniform(n, 1); }

// brute force over all m-colorings for increasing m
int chi_naive(const SetSystem& S, int r, const MultiplicityVector& s, int max_m = 8) {
    int v = S.edge_count();
    if (v == 0) return 0;
    auto hyper = kneser_edge_list(S, r, s);
    if (hyper.empty()) return 1;
    for (int m = 1; m <= max_m; ++m) {
        std::vector<int> col(v, 1);
        while (true) {
            bool proper = true;
            for (const auto& h : hyper) {
                bool mono = true;
                for (int u : h)
                    if (col[u] != col[h[0]]) { mono = false; break; }
                if (mono) { proper = false; break; }
            }
            if (proper) return m;
            int i = 0;
            while (i < v && col[i] == m) { col[i] = 1; ++i; }
            if (i == v) break;
            ++col[i];
        }
    }
    return -1;
}

SetSystem relabel_ground(const SetSystem& S, const std::vector<int>& perm) {
    std::vector<Mask> edges;
    for (Mask e : S.edges) {
        Mask out = 0;
        for_each_element(e, [&](int el) { out |= element(perm[el - 1]); });
        edges.push_back(out);
    }
    return SetSystem::make(S.n, std::move(edges));
}

}  // namespace

TEST_CASE("validate_coloring returns the first monochromatic family") {
    SetSystem s5 = gen_k_subsets(5, 2);
    Coloring all_one = Coloring::make(1, std::vector<int>(10, 1));
    auto w = validate_coloring(s5, 2, ones(5), all_one);
    REQUIRE(w.has_value());
    CHECK(s5.edges[w->members[0]] == edge({1, 2}));
    CHECK(s5.edges[w->members[1]] == edge({3, 4}));
    CHECK(w->color == 1);

    SetSystem s4 = gen_k_subsets(4, 2);
    // color each matching pair apart
    std::vector<int> cols(6, 0);
    auto fams = kneser_edge_list(s4, 2, ones(4));
    for (const auto& f : fams) {
        cols[f[0]] = 1;
        cols[f[1]] = 2;
    }
    CHECK_FALSE(validate_coloring(s4, 2, ones(4), Coloring::make(2, cols)));
    CHECK_THROWS_AS(validate_coloring(s4, 2, ones(4), Coloring::make(1, {1, 1})),
                    std::invalid_argument);
}

TEST_CASE("chi_exact on the landmark instances") {
    CHECK(chi_exact(gen_k_subsets(5, 2), 2, ones(5)).chi == 3);
    CHECK(chi_exact(gen_t_stable(6, 2, 2), 2, ones(6)).chi == 4);
    CHECK(chi_exact(gen_k_subsets(7, 2), 3, ones(7)).chi == 2);
    // degenerate shapes
    CHECK(chi_exact(SetSystem::make(4, {}), 2, ones(4)).chi == 0);
    CHECK(chi_exact(SetSystem::make(4, {edge({1, 2}), edge({1, 3})}), 2, ones(4)).chi == 1);
    ChiResult capped = chi_exact(gen_k_subsets(5, 2), 2, ones(5), 2);
    CHECK(capped.exceeded);
}

TEST_CASE("chi_exact witnesses validate and are deterministic") {
    for (int n = 4; n <= 6; ++n) {
        SetSystem s = gen_k_subsets(n, 2);
        ChiResult a = chi_exact(s, 2, ones(n));
        CHECK_FALSE(validate_coloring(s, 2, ones(n), a.coloring));
        ChiResult b = chi_exact(s, 2, ones(n));
        CHECK(a.coloring.colors == b.coloring.colors);
    }
}

TEST_CASE("chi_exact agrees with the naive oracle on small instances") {
    std::vector<std::tuple<SetSystem, int, MultiplicityVector>> cases;
    cases.emplace_back(gen_k_subsets(4, 2), 2, ones(4));
    cases.emplace_back(gen_k_subsets(5, 2), 2, ones(5));
    cases.emplace_back(gen_t_stable(6, 2, 2), 2, ones(6));
    cases.emplace_back(gen_t_stable(7, 2, 2), 2, ones(7));
    cases.emplace_back(gen_k_subsets(4, 2), 3, MultiplicityVector::uniform(4, 2));
    cases.emplace_back(gen_t_stable(8, 2, 3), 3, ones(8));
    for (auto& [sys, r, s] : cases) {
        if (sys.edge_count() > 12) continue;
        CHECK(chi_exact(sys, r, s).chi == chi_naive(sys, r, s));
    }
}

TEST_CASE("chi_exact is invariant under input order and ground relabeling") {
    SetSystem s = gen_t_stable(6, 2, 2);
    std::vector<Mask> shuffled = s.edges;
    std::mt19937_64 rng(11);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(SetSystem::make(6, shuffled).edges == s.edges);  // canonical order restored
    int base = chi_exact(s, 2, ones(6)).chi;
    std::vector<int> perm = {1, 2, 3, 4, 5, 6};
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(chi_exact(relabel_ground(s, perm), 2, ones(6)).chi == base);
    }
}

TEST_CASE("verify_sandwich reports the documented bounds") {
    BoundReport a = verify_sandwich(5, 2, 2, 1, 1);
    CHECK(a.lower == 3);
    CHECK(a.upper == 3);
    CHECK(a.exact == 3);

    BoundReport b = verify_sandwich(5, 2, 4, 2, 1);
    CHECK(b.lower == 2);
    CHECK(b.upper == 3);
    CHECK(b.exact == 3);
    CHECK(b.upper_is_exact());
    CHECK_FALSE(b.lower_is_exact());

    BoundReport c = verify_sandwich(6, 2, 3, 1, 1);
    CHECK(c.lower == 2);
    CHECK(c.upper == 2);
    CHECK(c.exact == 2);
}

TEST_CASE("exact chromatic numbers stay inside the sandwich") {
    for (int n = 4; n <= 6; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int r = 2; r <= 3; ++r)
                for (int s = 1; s <= 2; ++s) {
                    if (s >= r || s * n < k * r || k > n) continue;
                    BoundReport rep = verify_sandwich(n, k, r, s, 1);
                    REQUIRE(rep.exact.has_value());
                    CHECK(rep.lower <= *rep.exact);
                    CHECK(*rep.exact <= rep.upper);
                }
}

TEST_CASE("scan_r_stable gathers the conjecture evidence") {
    StableScanReport a = scan_r_stable(6, 2, 2);
    CHECK(a.chi == 4);
    CHECK(a.conjectured == 4);
    CHECK(a.matches);
    CHECK(a.vertex_critical);
    CHECK(a.divisibility);
    for (int chi_del : a.chi_after_delete) CHECK(chi_del == 3);

    StableScanReport b = scan_r_stable(7, 2, 3);
    CHECK(b.chi == 2);
    CHECK(b.conjectured == 2);
    CHECK(b.matches);
    CHECK(b.noncritical_expected);
    CHECK_FALSE(b.vertex_critical);

    StableScanReport c = scan_r_stable(9, 2, 3);
    CHECK(c.conjectured == 3);
    CHECK(c.chi == 3);
    CHECK(c.matches);
}
