#include <doctest.h>

#include <random>
#include <set>

#include "kneser/bounds.hpp"
#include "kneser/tucker.hpp"

using namespace kneser;

namespace {

MultiplicityVector ones(int n) { return MultiplicityVector::uniform(n, 1); }

SignVector sv(const std::string& s) {
    SignVector x;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+') x.plus |= bit(static_cast<int>(i));
        if (s[i] == '-') x.minus |= bit(static_cast<int>(i));
    }
    return x;
}

// antipodal labeling for n=2 from the four orbit representatives
OctaLabeling octa2(int l_p0, int l_0p, int l_pp, int l_pm) {
    OctaLabeling lab(8, 0);
    auto put = [&](const SignVector& x, int v) {
        lab[x.code(2) - 1] = v;
        lab[x.negated().code(2) - 1] = -v;
    };
    put(sv("+0"), l_p0);
    put(sv("0+"), l_0p);
    put(sv("++"), l_pp);
    put(sv("+-"), l_pm);
    return lab;
}

Coloring random_coloring(int count, int m, std::mt19937_64& rng) {
    std::vector<int> cols(count);
    std::uniform_int_distribution<int> pick(1, m);
    for (int& c : cols) c = pick(rng);
    return Coloring::make(m, std::move(cols));
}

}  // namespace

TEST_CASE("octahedral search finds the worked pair") {
    OctaLabeling lab = octa2(1, 1, 1, 1);
    TuckerPair p = octahedral_tucker_search(lab, 2);
    CHECK(p.a == sv("0+"));
    CHECK(p.b == sv("-+"));
    CHECK(p.label_a == 1);
}

TEST_CASE("octahedral search rejects non-antipodal labelings") {
    OctaLabeling lab = octa2(1, 1, 1, 1);
    lab[sv("-0").code(2) - 1] = 1;  // breaks lambda(-X) = -lambda(X)
    CHECK_THROWS_AS(octahedral_tucker_search(lab, 2), AntipodalityViolation);
}

TEST_CASE("octahedral search succeeds on every antipodal labeling at n=2") {
    for (int a = -1; a <= 1; a += 2)
        for (int b = -1; b <= 1; b += 2)
            for (int c = -1; c <= 1; c += 2)
                for (int d = -1; d <= 1; d += 2) {
                    TuckerPair p = octahedral_tucker_search(octa2(a, b, c, d), 2);
                    CHECK(p.a.leq(p.b));
                    CHECK(!(p.a == p.b));
                }
}

TEST_CASE("octahedral search succeeds on seeded random labelings") {
    for (int n : {3, 4}) {
        std::mt19937_64 rng(n);
        for (int trial = 0; trial < 1000; ++trial) {
            OctaLabeling lab = random_antipodal_labeling(n, rng);
            TuckerPair p = octahedral_tucker_search(lab, n);
            CHECK(p.a.leq(p.b));
            CHECK(!(p.a == p.b));
            CHECK(lab[p.a.code(n) - 1] == -lab[p.b.code(n) - 1]);
        }
    }
}

TEST_CASE("out-of-range codomains may legitimately have no pair") {
    // n=2 with |value| = support size: antipodal, values reach 2 > n-1
    OctaLabeling lab(8, 0);
    for (std::uint64_t code = 1; code <= 8; ++code) {
        SignVector x = SignVector::from_code(code, 2);
        int sign = x.plus != 0 && (x.minus == 0 || x.plus < x.minus) ? 1 : -1;
        lab[code - 1] = sign * popcount(x.support());
    }
    CHECK_THROWS_AS(octahedral_tucker_search(lab, 2), NoPairFound);
}

TEST_CASE("dolnikov labeling is total, antipodal, and case-correct") {
    SetSystem s = gen_k_subsets(5, 2);
    std::mt19937_64 rng(5);
    Coloring c = random_coloring(s.edge_count(), 2, rng);
    int m = 2;
    OctaLabeling lab = dolnikov_labeling(s, c, m);
    int n = 5;
    std::uint64_t total = 3 * 3 * 3 * 3 * 3 - 1;
    for (std::uint64_t code = 1; code <= total; ++code) {
        SignVector x = SignVector::from_code(code, n);
        int v = lab[code - 1];
        CHECK(v != 0);
        CHECK(lab[x.negated().code(n) - 1] == -v);
        int size = popcount(x.support());
        if (size <= n - m - 1) CHECK(std::abs(v) == m + size);
        else CHECK(std::abs(v) <= m);
    }
}

TEST_CASE("dolnikov refutation produces disjoint same-color edges") {
    SetSystem s5 = gen_k_subsets(5, 2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Coloring c = random_coloring(s5.edge_count(), 2, rng);
        MonochromaticFamily fam = dolnikov_refute(s5, c);
        REQUIRE(fam.members.size() == 2);
        CHECK((s5.edges[fam.members[0]] & s5.edges[fam.members[1]]) == 0);
        CHECK(c.of(fam.members[0]) == fam.color);
        CHECK(c.of(fam.members[1]) == fam.color);
    }
    SetSystem stab = gen_t_stable(6, 2, 2);
    Coloring ones_col = Coloring::make(1, std::vector<int>(stab.edge_count(), 1));
    MonochromaticFamily fam = dolnikov_refute(stab, ones_col);
    CHECK((stab.edges[fam.members[0]] & stab.edges[fam.members[1]]) == 0);
    // wider ground set: cd^2([7] choose 2) = 5, so up to 4 colors refute
    SetSystem s7 = gen_k_subsets(7, 2);
    for (int m = 1; m <= 4; ++m)
        for (int trial = 0; trial < 5; ++trial) {
            Coloring c = random_coloring(s7.edge_count(), m, rng);
            MonochromaticFamily f = dolnikov_refute(s7, c);
            CHECK((s7.edges[f.members[0]] & s7.edges[f.members[1]]) == 0);
            CHECK(c.of(f.members[0]) == f.color);
            CHECK(c.of(f.members[1]) == f.color);
        }
    // a proper coloring is refused: m = cd^2 = 3 fails m < cd
    Coloring proper = explicit_coloring(5, 2, 2, 1);
    CHECK_THROWS_AS(dolnikov_refute(s5, proper), std::invalid_argument);
}

TEST_CASE("chessboard face enumeration and the cyclic action") {
    ZpFaceSet f22 = zp_faces(2, 2, MultiplicityVector::uniform(2, 1));
    CHECK(f22.count() == 8);
    ZpFaceSet f33 = zp_faces(3, 3, ones(3));
    CHECK(f33.count() == 63);
    for (std::uint64_t code : f22.codes)
        CHECK(zp_action(zp_action(code, 2, 2, 1), 2, 2, 1) == code);
    CHECK(zp_action_is_free(f22));
    CHECK(zp_action_is_free(f33));
    ZpFaceSet f43 = zp_faces(4, 3, MultiplicityVector::uniform(4, 2));
    CHECK(zp_action_is_free(f43));
}

TEST_CASE("zp search finds witnesses for random equivariant labelings") {
    struct Params {
        int n, p, s, m;
    };
    for (Params prm : {Params{3, 2, 1, 2}, Params{2, 2, 1, 1}, Params{4, 3, 1, 1}}) {
        ZpFaceSet faces = zp_faces(prm.n, prm.p, MultiplicityVector::uniform(prm.n, prm.s));
        std::mt19937_64 rng(prm.n * 100 + prm.p);
        for (int trial = 0; trial < 200; ++trial) {
            ZpLabeling lab = random_equivariant_labeling(faces, prm.m, rng);
            ZpChainWitness w = zp_tucker_search(faces, lab, prm.m);
            REQUIRE(static_cast<int>(w.chain.size()) == prm.p);
            for (size_t i = 1; i < w.chain.size(); ++i) {
                CHECK(w.chain[i - 1] != w.chain[i]);
                CHECK(subset_of(w.chain[i - 1], w.chain[i]));
            }
            std::set<int> signs(w.signs.begin(), w.signs.end());
            CHECK(static_cast<int>(signs.size()) == prm.p);
            for (std::uint64_t code : w.chain) {
                int idx = faces.index_of(code);
                CHECK(lab[idx].value == w.value);
            }
        }
    }
}

TEST_CASE("zp search validates its preconditions") {
    ZpFaceSet faces = zp_faces(2, 2, MultiplicityVector::uniform(2, 1));
    std::mt19937_64 rng(3);
    ZpLabeling lab = random_equivariant_labeling(faces, 1, rng);
    ZpLabeling broken = lab;
    broken[0].sign = (broken[0].sign + 1) % 2;
    CHECK_THROWS_AS(zp_tucker_search(faces, broken, 1), EquivarianceViolation);
    CHECK_THROWS_AS(zp_tucker_search(faces, lab, 5), std::invalid_argument);
    ZpFaceSet comp = zp_faces(2, 4, MultiplicityVector::uniform(2, 3));
    ZpLabeling lab4(comp.count(), ZpLabel{0, 1});
    CHECK_THROWS_AS(zp_tucker_search(comp, lab4, 1), std::invalid_argument);
}

TEST_CASE("main labeling is equivariant with case-2 values in range") {
    SetSystem s = gen_k_subsets(4, 2);
    Coloring c = Coloring::make(1, std::vector<int>(s.edge_count(), 1));
    int p = 2, K = 1;
    ZpFaceSet faces = zp_faces(4, p, ones(4));
    ZpLabeling lab = main_labeling(s, ones(4), c, p, faces);
    int n_bar = 4;
    for (int i = 0; i < faces.count(); ++i) {
        std::uint64_t code = faces.codes[i];
        int size = popcount(code);
        int ri = faces.index_of(zp_action(code, 4, p, 1));
        CHECK(lab[ri].sign == (lab[i].sign + 1) % p);
        CHECK(lab[ri].value == lab[i].value);
        if (size <= n_bar - (p - 1) * K - 1)
            CHECK(lab[i].value == K + (size + p - 2) / (p - 1));
        else
            CHECK(lab[i].value <= K);
    }
}

TEST_CASE("main refutation yields s-disjoint monochromatic families") {
    SetSystem s4 = gen_k_subsets(4, 2);
    Coloring one = Coloring::make(1, std::vector<int>(s4.edge_count(), 1));
    MonochromaticFamily fam = main_refute(s4, ones(4), one, 2);
    REQUIRE(fam.members.size() == 2);
    CHECK((s4.edges[fam.members[0]] & s4.edges[fam.members[1]]) == 0);

    SetSystem s5 = gen_k_subsets(5, 2);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Coloring c = random_coloring(s5.edge_count(), 2, rng);
        MonochromaticFamily f = main_refute(s5, ones(5), c, 2);
        REQUIRE(f.members.size() == 2);
        std::vector<Mask> sets = {s5.edges[f.members[0]], s5.edges[f.members[1]]};
        CHECK(is_s_disjoint(sets, ones(5)));
        for (int mem : f.members) CHECK(c.of(mem) == f.color);
    }

    // prime p = 3 with a forced ground-set extension (n_bar 6 -> 7)
    SetSystem s6 = gen_k_subsets(6, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Coloring c = random_coloring(s6.edge_count(), 1, rng);
        MonochromaticFamily f = main_refute(s6, ones(6), c, 3);
        REQUIRE(f.members.size() == 3);
        std::vector<Mask> sets;
        for (int mem : f.members) sets.push_back(s6.edges[mem]);
        CHECK(is_s_disjoint(sets, ones(6)));
        for (int mem : f.members) CHECK(c.of(mem) == f.color);
    }

    // s = 2 branch: KG^3_{(2,..,2)}([4] choose 2), defect 5 > 2K for K = 1
    MultiplicityVector twos = MultiplicityVector::uniform(4, 2);
    MonochromaticFamily f3 = main_refute(s4, twos, one, 3);
    REQUIRE(f3.members.size() == 3);
    std::vector<Mask> sets;
    for (int mem : f3.members) sets.push_back(s4.edges[mem]);
    CHECK(is_s_disjoint(sets, twos));
}
