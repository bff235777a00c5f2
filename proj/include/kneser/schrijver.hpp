#ifndef KNESER_SCHRIJVER_HPP
#define KNESER_SCHRIJVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kneser/chains.hpp"
#include "kneser/coloring.hpp"
#include "kneser/hypercore.hpp"
#include "kneser/solver.hpp"

namespace kneser {

// Order complex of sign vectors: Sigma(m, d) has the length-m sign vectors
// with alt(X) >= m-d+1 as vertices and the chains under <= as faces, with
// the free Z2 action X <-> -X. In the usual indexing this is Sigma^{d-1}(m).
struct AltComplex {
    int m = 0, d = 0;
    std::vector<SignVector> verts;  // ascending base-3 code
    Complex complex;
    // hemisphere tags: equator alt(X) >= m-d+2, positive alt(X,+) >= m-d+2,
    // negative alt(X,-) >= m-d+2; the equator lies in both hemispheres
    std::vector<char> in_pos, in_neg, in_equator;

    int threshold() const { return m - d + 1; }
    int index_of(const SignVector& x) const;
    // vertex id of x with a sign appended (0, +1 or -1), length m+1 context
    SignVector appended(const SignVector& x, int sign) const;

  private:
    std::map<std::uint64_t, int> id_by_code;
    friend AltComplex build_sigma(int m, int d, int guard);
};

// full face list; guard bounds the vector length (3^m enumeration)
AltComplex build_sigma(int m, int d, int guard = 7);

// deletes the last component: Sigma(m,d) -> Sigma(m-1,d); needs threshold >= 2
struct DeltaResult {
    AltComplex src, tgt;
    ChainMap map;
};
DeltaResult delta_map(int m, int d);

// C(susp Sigma^{d-2}(d-1)) -> C(Sigma^{d-1}(d)): equator simplices map by
// appending 0, the poles to +-e_d, and sigma*v+ to the signed staircase sum
// triangulating the prism over sigma plus one polar simplex.
struct XiResult {
    AltComplex base;  // Sigma(d-1, d-1)
    Complex susp;
    AltComplex target;  // Sigma(d, d)
    ChainMap map;
};
XiResult xi_chain_map(int d);

// C(Sigma^{d-1}(l-1)) -> C(Sigma^{d-1}(l)): case 1 appends 0, case 2 the
// hemisphere sign, case 3 (only the minimal vertex off the equator) the
// alternating staircase sum.
struct ZetaResult {
    AltComplex src;  // Sigma(l-1, d)
    AltComplex tgt;  // Sigma(l, d)
    ChainMap map;
};
ZetaResult zeta_chain_map(int d, int l);

// The coloring-induced vertex map X -> signed color vector: color i signs
// + when it appears only on stable k-subsets of X+, - only of X-. Returns
// the chain map into Sigma(c.m, c.m - 1) or throws if c is improper on a
// scanned vertex (two parts sharing a color).
struct CHatResult {
    AltComplex src;  // Sigma(n, d), d = n-2k+1
    AltComplex tgt;  // Sigma(colors, colors-1)
    ChainMap map;
};
CHatResult c_hat_map(int n, int k, const Coloring& c);

// Precomputed per-vertex stable-subset tables for the refutation scan.
struct SchrijverScan {
    int n = 0, k = 0, d = 0;
    SetSystem stab;
    std::vector<SignVector> verts;        // vertices of Sigma(n, d)
    std::vector<std::uint64_t> plus_edges;   // bitmask over edge indices
    std::vector<std::uint64_t> minus_edges;
};
SchrijverScan build_schrijver_scan(int n, int k);

// Refutes any coloring of the stable Kneser graph with at most n-2k+1
// colors: two disjoint stable k-sets of equal color, from the first vertex
// of Sigma^{d-1}(n) whose parts share a color.
MonochromaticFamily schrijver_refute(const SchrijverScan& scan, const Coloring& c);
MonochromaticFamily schrijver_refute(int n, int k, const Coloring& c);

// Builds every arrow of the refutation square with an over-colored (d+1)-
// coloring so each piece is well defined, verifies the chain-map identity,
// equivariance and augmentation preservation throughout, the image-in-cone
// property of the cone embedding, the Lefschetz parity of the composed
// equivariant self-map, and the cone lemma on the pipeline's cone.
struct PipelineReport {
    int n = 0, k = 0, d = 0;
    bool xi_ok = false, xi_equivariant = false, xi_augmentation = false;
    std::vector<int> zeta_levels;
    std::vector<char> zeta_ok, zeta_equivariant, zeta_augmentation;
    bool c_hat_ok = false, c_hat_equivariant = false, c_hat_augmentation = false;
    bool delta_ok = false, delta_equivariant = false, delta_augmentation = false;
    bool i_equivariant = false, i_image_in_cone = false;
    bool composite_ok = false, composite_equivariant = false,
         composite_augmentation = false;
    long long composite_lefschetz = 0;
    bool parity_ok = false;  // even and in particular never 1
    long long cone_lambda_id = 0, cone_lambda_const = 0;  // both must be 1
    bool all_ok() const;
};
PipelineReport verify_pipeline(int n, int k, std::optional<Coloring> coloring = {});

}  // namespace kneser

#endif
