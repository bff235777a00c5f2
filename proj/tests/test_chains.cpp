#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "kneser/chains.hpp"

using namespace kneser;

namespace {

Chain chain1(const Simplex& s) {
    Chain c;
    c.dim = static_cast<int>(s.size()) - 1;
    c.add(s, 1);
    return c;
}

Complex boundary_triangle() { return complex_from_faces(3, {{0, 1}, {0, 2}, {1, 2}}); }

Complex cone_triangle() {
    // cone with apex 3 over the boundary of a triangle
    return complex_from_faces(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Complex random_complex(std::mt19937_64& rng) {
    int nverts = 4 + static_cast<int>(rng() % 4);
    int nfaces = 3 + static_cast<int>(rng() % 5);
    std::vector<Simplex> maximal;
    for (int f = 0; f < nfaces; ++f) {
        std::set<int> verts;
        int size = 2 + static_cast<int>(rng() % 3);
        while (static_cast<int>(verts.size()) < size)
            verts.insert(static_cast<int>(rng() % nverts));
        maximal.emplace_back(verts.begin(), verts.end());
    }
    return complex_from_faces(nverts, maximal);
}

// equivariant labeling of the board faces with value = face size; the values
// separate chain members, so no witness chain exists
ZpLabeling size_labeling(const ZpFaceSet& faces) {
    ZpLabeling lab(faces.count());
    for (int i = 0; i < faces.count(); ++i) {
        std::uint64_t code = faces.codes[i];
        std::uint64_t rep = code;
        int shift = 0;
        for (int k = 1; k < faces.p; ++k) {
            std::uint64_t rot = zp_action(code, faces.n, faces.p, k);
            if (rot < rep) { rep = rot; shift = k; }
        }
        lab[i] = {(faces.p - shift) % faces.p, popcount(code)};
    }
    return lab;
}

}  // namespace

TEST_CASE("boundary formula on small simplices") {
    Chain b1 = boundary(chain1({1, 2}));
    CHECK(b1.coeff({2}) == 1);
    CHECK(b1.coeff({1}) == -1);
    Chain b2 = boundary(chain1({1, 2, 3}));
    CHECK(b2.coeff({2, 3}) == 1);
    CHECK(b2.coeff({1, 3}) == -1);
    CHECK(b2.coeff({1, 2}) == 1);
    CHECK(boundary(b2).zero());
}

TEST_CASE("boundary squares to zero on random chains") {
    std::mt19937_64 rng(41);
    int trials = 0;
    while (trials < 1200) {
        Complex k = random_complex(rng);
        for (int d = 1; d <= k.dim(); ++d) {
            Chain c;
            c.dim = d;
            for (const Simplex& s : k.faces[d])
                c.add(s, static_cast<long long>(rng() % 7) - 3);
            CHECK(boundary(boundary(c)).zero());
            ++trials;
        }
    }
}

TEST_CASE("lefschetz numbers of identity and constant maps") {
    Complex tri = boundary_triangle();
    CHECK(lefschetz(identity_chain_map(tri), tri) == 0);  // circle: 3 - 3
    CHECK(lefschetz(constant_chain_map(tri, 0), tri) == 1);
    Complex cone = cone_triangle();
    CHECK(lefschetz(identity_chain_map(cone), cone) == 1);  // 4 - 6 + 3
    CHECK(cone.euler() == 1);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        Complex k = random_complex(rng);
        CHECK(lefschetz(identity_chain_map(k), k) == k.euler());
    }
}

TEST_CASE("chain map construction rejects broken maps") {
    Complex tri = boundary_triangle();
    ChainMap id = identity_chain_map(tri);
    auto images = id.images;
    images[1].at({0, 1}).terms.begin()->second = -1;  // flip one sign
    CHECK_THROWS_AS(make_chain_map(tri, tri, images), std::invalid_argument);
    auto missing = id.images;
    missing[0].erase(Simplex{0});
    CHECK_THROWS_AS(make_chain_map(tri, tri, missing), std::invalid_argument);
}

TEST_CASE("cone homotopy on an edge and a solid cone") {
    Complex seg = complex_from_faces(2, {{0, 1}});  // apex 0, base vertex 1
    ChainHomotopy D = cone_homotopy(seg);
    CHECK(D.apex == 0);
    CHECK(D.images[0].at({1}).coeff({0, 1}) == 1);
    CHECK(D.images[0].at({0}).zero());
    CHECK_NOTHROW(cone_homotopy(cone_triangle()));
    CHECK_THROWS_AS(cone_homotopy(boundary_triangle()), NotACone);
    CHECK(find_cone_apex(boundary_triangle()) == -1);
}

TEST_CASE("cone lemma holds for identity, constant, and random collapses") {
    Complex cone = cone_triangle();
    CHECK(verify_cone_lemma(cone, constant_chain_map(cone, 3)) == 1);
    CHECK(verify_cone_lemma(cone, identity_chain_map(cone)) == 1);
    std::mt19937_64 rng(47);
    int apex = find_cone_apex(cone);
    for (int trial = 0; trial < 60; ++trial) {
        // simplicial self-maps that collapse a random vertex subset to the
        // apex; integer combinations keep augmentation sums at one
        std::vector<int> vmap(cone.nverts);
        for (int v = 0; v < cone.nverts; ++v) vmap[v] = rng() % 2 ? v : apex;
        ChainMap f = induced_chain_map(cone, cone, vmap);
        CHECK(verify_cone_lemma(cone, f) == 1);
        if (trial % 3 == 0) {
            ChainMap id = identity_chain_map(cone);
            std::vector<std::map<Simplex, Chain>> combo(cone.faces.size());
            for (int d = 0; d <= cone.dim(); ++d)
                for (const Simplex& s : cone.faces[d]) {
                    Chain value;
                    value.dim = d;
                    value.add_chain(f.image_of(s), 2);
                    value.add_chain(id.image_of(s), -1);
                    combo[d].emplace(s, std::move(value));
                }
            CHECK(verify_cone_lemma(cone, make_chain_map(cone, cone, combo)) == 1);
        }
    }
    ChainMap notaug = constant_chain_map(cone, 3);
    notaug.images[0].at({0}).terms.begin()->second = 2;
    CHECK_THROWS_AS(verify_cone_lemma(cone, notaug), NotAugmentationPreserving);
}

TEST_CASE("barycentric subdivision of an edge and a circle") {
    Complex seg = complex_from_faces(2, {{0, 1}});
    Subdivision sd = barycentric_sd(seg);
    CHECK(sd.sd.faces[0].size() == 3);
    CHECK(sd.sd.faces[1].size() == 2);
    const Chain& img = sd.map.image_of({0, 1});
    CHECK(img.terms.size() == 2);
    CHECK(boundary(img).terms.size() == 2);  // interior barycenter cancels

    Complex tri = boundary_triangle();
    Subdivision sd2 = barycentric_sd(tri);
    CHECK(sd2.sd.faces[0].size() == 6);
    CHECK(sd2.sd.faces[1].size() == 6);
    CHECK(sd2.sd.euler() == tri.euler());
    CHECK(is_augmentation_preserving(sd2.map, tri));
}

TEST_CASE("subdivision is equivariant on complexes with an action") {
    Complex board = board_complex(2, 2, MultiplicityVector::uniform(2, 1));
    CHECK(complex_action_is_free(board));
    Subdivision sd = barycentric_sd(board);
    CHECK(complex_action_is_free(sd.sd));
    CHECK(is_equivariant(sd.map, board, sd.sd));
    CHECK(is_augmentation_preserving(sd.map, board));
}

TEST_CASE("kappa maps rank levels onto rows") {
    KappaMap k1 = kappa_map(2, 3, MultiplicityVector::uniform(2, 1), 1);
    CHECK(k1.row_of_rank[1] == 1);
    CHECK(k1.row_of_rank[2] == 2);
    KappaMap k2 = kappa_map(4, 5, MultiplicityVector::uniform(4, 2), 2);
    std::vector<int> expect = {0, 1, 1, 2, 2, 3, 3, 4, 4};
    for (int l = 1; l <= 8; ++l) CHECK(k2.row_of_rank[l] == expect[l]);
    CHECK(k2.hat_cell == -1);  // m(p-1) = n_bar leaves no room for a top row
    CHECK_THROWS_AS(kappa_map(2, 3, MultiplicityVector::uniform(2, 1), 2),
                    DimensionShortfall);
}

TEST_CASE("kappa-hat lands in a cone") {
    // n_bar = 3 = m(p-1) + 1: the top element goes to row 3
    KappaMap km = kappa_map(3, 2, MultiplicityVector::uniform(3, 1), 2);
    REQUIRE(km.hat_cell == 2);
    Complex board_t = board_complex(2, 2, MultiplicityVector::uniform(2, 1));
    Subdivision sd_t = barycentric_sd(board_t);
    Complex cone = cone_over(sd_t.sd);  // order complex with a new top element
    Complex target = board_complex(3, 2, MultiplicityVector::uniform(3, 1));
    std::vector<int> vmap(cone.nverts);
    vmap[0] = km.hat_cell;
    for (int v = 0; v < sd_t.sd.nverts; ++v) {
        int idx = km.poset.index_of(simplex_to_code(sd_t.vertex_face[v]));
        REQUIRE(idx >= 0);
        vmap[v + 1] = km.cell_of[idx];
    }
    ChainMap hat = induced_chain_map(cone, target, vmap);
    // collect the image complex and check the apex join property
    std::vector<Simplex> image_faces;
    for (int d = 0; d <= cone.dim(); ++d)
        for (const Simplex& s : cone.faces[d]) {
            std::set<int> img;
            for (int v : s) img.insert(vmap[v]);
            image_faces.emplace_back(img.begin(), img.end());
        }
    Complex image = complex_from_faces(target.nverts, image_faces);
    int apex = find_cone_apex(image);
    CHECK(apex == km.hat_cell);
    CHECK(is_augmentation_preserving(hat, cone));
}

TEST_CASE("composed square is a verified equivariant self-map") {
    for (auto [n, p, m] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 3}}) {
        MultiplicityVector s = MultiplicityVector::uniform(n, 1);
        ZpFaceSet faces = zp_faces(n, p, s);
        SquareResult sq = compose_square(n, p, s, m, size_labeling(faces));
        CHECK(sq.lefschetz_value % p == 0);
        CHECK(is_equivariant(sq.nu, sq.board, sq.board));
        CHECK(is_augmentation_preserving(sq.nu, sq.board));
    }
}

TEST_CASE("compliant labelings make the square fail with a witness chain") {
    // m <= (n_bar - 1)/(p - 1): every equivariant labeling admits a chain
    MultiplicityVector s = MultiplicityVector::uniform(2, 1);
    ZpFaceSet faces = zp_faces(2, 2, s);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        ZpLabeling lab = random_equivariant_labeling(faces, 1, rng);
        CHECK_THROWS_AS(compose_square(2, 2, s, 1, lab), LabelChainExists);
    }
}

TEST_CASE("equivariant self-maps of free boards have Lefschetz divisible by p") {
    std::mt19937_64 rng(59);
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}}) {
        Complex board = board_complex(rows, cols, MultiplicityVector::uniform(rows, 1));
        REQUIRE(complex_action_is_free(board));
        for (int trial = 0; trial < 40; ++trial) {
            // row permutation plus per-row column shifts commutes with the
            // column rotation and maps faces to faces
            std::vector<int> rowp(rows);
            std::iota(rowp.begin(), rowp.end(), 0);
            std::shuffle(rowp.begin(), rowp.end(), rng);
            std::vector<int> shift(rows);
            for (int& x : shift) x = static_cast<int>(rng() % cols);
            std::vector<int> vmap(board.nverts);
            for (int j = 0; j < cols; ++j)
                for (int i = 0; i < rows; ++i)
                    vmap[j * rows + i] = ((j + shift[i]) % cols) * rows + rowp[i];
            ChainMap f = induced_chain_map(board, board, vmap);
            REQUIRE(is_equivariant(f, board, board));
            CHECK(lefschetz(f, board) % cols == 0);
        }
    }
}
